#ifndef NLTORIC_POLYTOPE_HPP
#define NLTORIC_POLYTOPE_HPP

#include <vector>

#include "nltoric/divisor.hpp"
#include "nltoric/lp.hpp"
#include "nltoric/parallel.hpp"

namespace nltoric {

// Integer halfspace <normal, x> >= rhs, evaluated on lattice points.
struct IHalfspace {
    std::vector<Int> normal;
    Int rhs;
};

inline bool satisfies(const IHalfspace& h, const std::vector<Int>& x) {
    Int s = 0;
    for (size_t i = 0; i < h.normal.size(); ++i) s += h.normal[i] * x[i];
    return s >= h.rhs;
}

Halfspace to_rational(const IHalfspace& h);

// P_D = { m : <m, u_rho> >= -a_rho }, one inequality per ray.
struct DivisorPolytope {
    int dim = 0;
    std::vector<IHalfspace> ineqs;
};

DivisorPolytope divisor_polytope(const Fan& fan, const std::vector<Int>& coeffs);

struct PolytopeUnbounded : std::runtime_error {
    explicit PolytopeUnbounded(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration of integer points of a halfspace system, in
// lexicographic order. Empty systems yield empty lists; unbounded ones
// throw PolytopeUnbounded. The parallel path splits on the first
// coordinate and produces the identical list.
std::vector<std::vector<Int>> lattice_points(const std::vector<IHalfspace>& ineqs, int dim,
                                             Exec exec = Exec::parallel);
std::vector<std::vector<Int>> lattice_points(const DivisorPolytope& p, Exec exec = Exec::parallel);
Int count_lattice_points(const std::vector<IHalfspace>& ineqs, int dim, Exec exec = Exec::parallel);

}  // namespace nltoric

#endif
