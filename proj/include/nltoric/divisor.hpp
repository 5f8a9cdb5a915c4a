#ifndef NLTORIC_DIVISOR_HPP
#define NLTORIC_DIVISOR_HPP

#include <optional>
#include <vector>

#include "nltoric/fan.hpp"

namespace nltoric {

// Cl(X) = Z^rays / (characters), presented by the Smith normal form of the
// ray matrix. Free coordinates are canonicalized by a row Hermite normal
// form so class coordinates are reproducible across runs.
class ClassGroup {
  public:
    explicit ClassGroup(const Fan& fan);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    int n_rays() const { return proj_free_.cols(); }

    // image of a ray-coefficient vector in Z^free_rank (+ torsion coords)
    std::vector<Int> project_free(const std::vector<Int>& coeffs) const;
    std::vector<Int> project_torsion(const std::vector<Int>& coeffs) const;

    // a ray-coefficient representative with the given free coordinates
    std::vector<Int> lift(const std::vector<Int>& cls) const;

    const IMat& free_projection() const { return proj_free_; }

  private:
    int free_rank_ = 0;
    std::vector<Int> torsion_;
    IMat proj_free_;     // free_rank x rays, HNF rows
    IMat proj_torsion_;  // torsion rows of u (values taken mod factors)
    IMat lift_;          // rays x free_rank, proj_free * lift = id
};

// A Weil divisor class together with a chosen representative sum of ray
// divisors. Two values compare equal iff their class coordinates agree.
struct DivisorClass {
    std::vector<Int> coeffs;  // representative a_rho
    std::vector<Int> cls;     // free coordinates
    std::vector<Int> tors;    // torsion coordinates (reduced)

    bool operator==(const DivisorClass& o) const { return cls == o.cls && tors == o.tors; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
};

DivisorClass make_divisor(const ClassGroup& cg, std::vector<Int> coeffs);
DivisorClass divisor_from_class(const ClassGroup& cg, const std::vector<Int>& cls);
DivisorClass add(const ClassGroup& cg, const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const ClassGroup& cg, const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(const ClassGroup& cg, const Int& k, const DivisorClass& a);
bool is_zero_class(const DivisorClass& a);

// beta_0 = sum of all ray divisors; the canonical class is its negative.
DivisorClass anticanonical_class(const ClassGroup& cg);

// Per-cone local data m_sigma with <m_sigma, u_rho> = -a_rho on the rays of
// sigma. On a simplicial fan m_sigma always exists and is unique; the
// divisor is Cartier iff every m_sigma is integral.
struct CartierData {
    bool cartier = false;
    std::vector<std::vector<Rat>> m;  // one vector per max cone
    int first_non_cartier_cone = -1;
};

CartierData cartier_data(const Fan& fan, const std::vector<Int>& coeffs);
bool is_cartier(const Fan& fan, const DivisorClass& d);

// Intersection number D . V(wall) on the orbifold; rational in general,
// integral for Cartier D.
Rat intersection_number(const Fan& fan, const std::vector<Int>& coeffs, const Wall& w);
Rat intersection_number(const Fan& fan, const DivisorClass& d, const Wall& w);

enum class Positivity { not_nef, nef_not_ample, ample };

// Toric Kleiman criterion: nef iff D.C >= 0 against every wall curve, ample
// iff strictly positive. Requires Cartier input (throws, pinpointing the
// offending cone). is_nef_weil is the rational test without that gate.
Positivity nef_ample_test(const Fan& fan, const std::vector<Wall>& ws, const DivisorClass& d);
bool is_nef_weil(const Fan& fan, const std::vector<Wall>& ws, const DivisorClass& d);

// Extremal rays of the nef cone / Mori cone in class coordinates, primitive
// and sorted. Implemented for torsion-free class groups of rank <= 3.
std::vector<std::vector<Int>> nef_cone_generators(const Fan& fan, const ClassGroup& cg,
                                                  const std::vector<Wall>& ws);
std::vector<std::vector<Int>> mori_generators(const Fan& fan, const ClassGroup& cg,
                                              const std::vector<Wall>& ws);

// Curve class of a wall as the pairing vector against the lifted basis of
// the free class coordinates (rational; clear denominators for directions).
std::vector<Rat> wall_curve_class(const Fan& fan, const ClassGroup& cg, const Wall& w);

// The Picard lattice Pic c Cl (torsion-free class groups only): a Hermite
// basis of the sublattice of Cartier classes, plus coordinates therein.
class PicardLattice {
  public:
    PicardLattice(const Fan& fan, const ClassGroup& cg);

    const IMat& basis() const { return basis_; }  // free_rank x free_rank, rows generate
    Int index_in_class_group() const;

    // coordinates of a class in the Picard basis; nullopt if not in Pic
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& cls) const;

    // primitive = content of Picard coordinates is 1
    bool is_primitive(const std::vector<Int>& cls) const;

  private:
    IMat basis_;
};

}  // namespace nltoric

#endif
