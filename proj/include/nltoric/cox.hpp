#ifndef NLTORIC_COX_HPP
#define NLTORIC_COX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nltoric/cohomology.hpp"

namespace nltoric {

// Monomials of the Cox ring S = C[x_rho] in a fixed degree, as exponent
// vectors. In bijection with the lattice points of the divisor polytope of
// the stored representative via a = coeffs + <m, u_rho>.
struct GradedBasis {
    DivisorClass degree;
    std::vector<std::vector<Int>> exponents;  // sorted, one slot per ray

    int dim() const { return static_cast<int>(exponents.size()); }
};

GradedBasis graded_basis(const Fan& fan, const ClassGroup& cg, const DivisorClass& gamma);

// Homogeneous element of the Cox ring with exact rational coefficients.
struct CoxPolynomial {
    DivisorClass degree;
    std::map<std::vector<Int>, Rat> terms;
    std::string quasi_smoothness;  // provenance label for section sampling
};

// Deterministic sparse-free section: every monomial of the degree, with
// coefficients drawn from the raw engine stream in [-9,9] \ {0}. Bit-exact
// for a fixed seed on every platform.
CoxPolynomial random_section(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                             std::uint64_t seed);

// Sum of the pure powers x_rho^t landing in the given degree. Throws when
// no ray admits one.
CoxPolynomial fermat_section(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta);

CoxPolynomial derivative(const ClassGroup& cg, const CoxPolynomial& f, int ray);

// dim of the degree-gamma slice of the Jacobian ideal J(f) = (df/dx_rho),
// by exact rank of the spanning products  monomial * df/dx_rho.
Int jacobian_slice_dimension(const Fan& fan, const ClassGroup& cg, const CoxPolynomial& f,
                             const DivisorClass& gamma);

// dim R(f)_gamma = dim S_gamma - dim J(f)_gamma
Int jacobian_ring_dimension(const Fan& fan, const ClassGroup& cg, const CoxPolynomial& f,
                            const DivisorClass& gamma);

struct MultMapResult {
    bool surjective = false;
    Int cokernel_dim;
};

// Without f: surjectivity of S_{g1} x S_{g2} -> S_{g1+g2} (monomial
// coverage). With f: surjectivity of the induced map on Jacobian-ring
// slices R(f)_{g1} x R(f)_{g2} -> R(f)_{g1+g2}, i.e. products plus
// J(f)_{g1+g2} span S_{g1+g2}.
MultMapResult mult_map_surjective(const Fan& fan, const ClassGroup& cg,
                                  const std::optional<CoxPolynomial>& f,
                                  const DivisorClass& g1, const DivisorClass& g2);

}  // namespace nltoric

#endif
