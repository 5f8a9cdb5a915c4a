#ifndef NLTORIC_FAN_HPP
#define NLTORIC_FAN_HPP

#include <string>
#include <vector>

#include "nltoric/exact.hpp"

namespace nltoric {

// A rational simplicial complete fan: primitive rays plus maximal cones
// given as index sets of exactly dim rays each.
struct Fan {
    int dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> max_cones;
    std::string name;

    int n_rays() const { return static_cast<int>(rays.size()); }
    int n_cones() const { return static_cast<int>(max_cones.size()); }
};

struct ValidationIssue {
    std::string kind;    // e.g. "non-primitive-ray", "dangling-wall"
    std::string detail;  // pinpoints the offending ray / cone / face
};

struct ValidationReport {
    bool valid = false;
    std::vector<ValidationIssue> issues;
    std::vector<Int> cone_multiplicities;  // lattice index per max cone
};

// Structural checks: primitive distinct rays, simplicial full-dimensional
// cones, every facet shared by exactly two cones, connected adjacency graph,
// and a randomized 1000-point coverage sample (deterministic seed). Interior
// overlaps between non-adjacent cones are reported as well.
ValidationReport validate_fan(const Fan& fan);

// A wall is a shared (dim-1)-face of two maximal cones, together with the
// primitive integer relation
//   lambda_a * u_a + lambda_b * u_b + sum_i mu_i * u_{wall_i} = 0,
// lambda_a, lambda_b > 0, content 1, where u_a / u_b are the off-wall rays
// of the lower- / higher-indexed cone.
struct Wall {
    std::vector<int> wall_rays;  // the dim-1 shared ray indices, sorted
    int cone_a = -1, cone_b = -1;
    int off_a = -1, off_b = -1;  // ray indices not on the wall
    Int lambda_a, lambda_b;
    std::vector<Int> mu;   // one per wall ray, same order as wall_rays
    Int lattice_index;     // index of the wall lattice (1 on smooth walls)
};

std::vector<Wall> walls(const Fan& fan);

// Lattice index of the sublattice spanned by the given rays inside the
// saturation of their span; 1 exactly for smooth cones.
Int cone_lattice_index(const Fan& fan, const std::vector<int>& ray_indices);

struct SingularSummary {
    std::vector<Int> max_cone_mult;
    // multiplicity per wall, aligned with walls(fan)
    std::vector<Int> wall_mult;
    bool smooth = false;
};

SingularSummary singular_locus_summary(const Fan& fan);

// Star subdivision at a new primitive ray inside the support of the fan.
// Every cone containing the ray is replaced by the cones spanned by the ray
// and the facets not containing it. Throws if the ray already exists or
// lies outside the support.
Fan star_subdivision(const Fan& fan, const std::vector<Int>& new_ray);

// Membership helpers (exact).
bool cone_contains(const Fan& fan, int cone, const std::vector<Rat>& x, bool strict_interior);

}  // namespace nltoric

#endif
