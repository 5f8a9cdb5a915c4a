#ifndef NLTORIC_COHOMOLOGY_HPP
#define NLTORIC_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "nltoric/polytope.hpp"

namespace nltoric {

// All cohomology of line bundles on a complete simplicial fan is computed
// degree by degree: a character m contributes to H^q through the reduced
// (q-1)-cohomology of the subcomplex of rays it violates. Characters with
// the same violation pattern form a chamber, so the computation runs over
// the 2^rays sign patterns, scores each pattern's subcomplex once, and
// counts lattice points only where some reduced cohomology is nonzero.

struct ChamberAudit {
    std::uint32_t violated_mask = 0;
    std::vector<Int> reduced_betti;  // index q holds the rank feeding h^q
    Int lattice_count;
};

struct CohomologyTable {
    std::vector<Int> h;                 // h^0 .. h^dim
    std::vector<ChamberAudit> chambers; // contributing chambers, by mask
};

CohomologyTable graded_cohomology(const Fan& fan, const DivisorClass& d,
                                  Exec exec = Exec::parallel);

inline Int h0(const Fan& fan, const DivisorClass& d) {
    return count_lattice_points(divisor_polytope(fan, d.coeffs).ineqs, fan.dim);
}

struct SerreCheck {
    bool pass = false;
    int first_mismatch_q = -1;
    std::vector<Int> lhs, rhs;
};

// h^q(D) = h^{r-q}(-D - beta_0) for Cartier D.
SerreCheck serre_duality_check(const Fan& fan, const ClassGroup& cg, const DivisorClass& d);

struct MinkowskiResult {
    bool holds = false;
    bool has_counterexample = false;
    std::vector<Int> counterexample;  // a lattice point of P_{a1+a2} that does not split
    Int points_checked;
};

// Lattice-point Minkowski decomposition: every lattice point of P_{a1+a2}
// splits as a sum of lattice points of P_{a1} and P_{a2}. Equivalent to
// surjectivity of S_{a1} x S_{a2} -> S_{a1+a2}. Inputs must be nef.
MinkowskiResult minkowski_decomposition_check(const Fan& fan, const ClassGroup& cg,
                                              const DivisorClass& a1, const DivisorClass& a2,
                                              Exec exec = Exec::parallel);

}  // namespace nltoric

#endif
