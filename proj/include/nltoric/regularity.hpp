#ifndef NLTORIC_REGULARITY_HPP
#define NLTORIC_REGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nltoric/cox.hpp"

namespace nltoric {

// m-regularity with respect to an ample class L:
//   h^q(F + (m-q) L) = 0 for q = 1..dim.
struct RegularityVerdict {
    bool passed = false;
    int failing_q = -1;
    std::optional<DivisorClass> failing_twist;
    Int failing_value;
};

RegularityVerdict is_m_regular(const Fan& fan, const ClassGroup& cg, const DivisorClass& subject,
                               const DivisorClass& ample_ref, const Int& m);

// Section-count shortcuts, equivalent to the definition for ample classes:
//   0-regular  <=>  h^0((r-1) eta - beta_0) = 0
//   (-1)-regular <=> h^0(r eta - beta_0) = 0
struct QuickCriteria {
    bool zero_regular = false;
    bool minus_one_regular = false;
    Int h0_zero_test, h0_minus_one_test;
};

QuickCriteria quick_criteria(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta);

struct OdaFailure {
    std::vector<Int> alpha1_coords, alpha2_coords;
    std::vector<Int> witness;  // undecomposable lattice point
};

struct OdaWindowReport {
    int bound = 0;
    std::vector<std::vector<Int>> window_basis;  // Picard-nef basis, class coords
    long pairs_checked = 0;
    std::vector<OdaFailure> failures;
    bool all_pass() const { return failures.empty(); }
};

// Verify the section-multiplication surjectivity S_a1 x S_a2 -> S_{a1+a2}
// for every ample a1 and nef a2 with coordinates <= bound in the nef basis
// of the Picard lattice. The property itself quantifies over infinitely
// many pairs; the report records the verified window.
OdaWindowReport oda_window_check(const Fan& fan, const ClassGroup& cg, int bound,
                                 Exec exec = Exec::parallel);

struct VanishingTriple {
    bool all_vanish = false;
    Int h1_beta_minus_eta, h2_beta_minus_eta, h2_beta_minus_2eta;
    bool via_nef = false;         // beta - 2 eta nef
    bool via_regularity = false;  // beta 0-regular with respect to eta
};

VanishingTriple vanishing_triple(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                                 const DivisorClass& eta);

// The smallest positive Cartier multiples of the nef-cone generators; the
// coordinate system used by the window scans.
std::vector<DivisorClass> picard_nef_basis(const Fan& fan, const ClassGroup& cg);

}  // namespace nltoric

#endif
