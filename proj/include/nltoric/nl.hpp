#ifndef NLTORIC_NL_HPP
#define NLTORIC_NL_HPP

#include <optional>
#include <string>
#include <vector>

#include "nltoric/regularity.hpp"

namespace nltoric {

// One named hypothesis in a report ledger. Window-verified hypotheses are
// marked as such: they were checked on a finite window, not proved.
struct HypothesisCheck {
    std::string name;
    enum Status { pass, fail, pass_window } status = fail;
    std::string note;
};

struct BoundReport {
    std::string fan_name;
    std::vector<Int> eta_class, beta_class;
    Int n;
    std::vector<HypothesisCheck> hypotheses;
    std::vector<std::string> routes_fired;  // which theorem routes applied
    bool has_lower = false;
    Int lower_bound;
    std::string lower_route;
    Int upper_bound;  // h^0(n eta), always emitted
};

// Codimension bounds for the locus of quasi-smooth surfaces of class
// beta = beta_0 + n eta whose Picard number jumps. Evaluates every
// hypothesis route; a lower bound is emitted only when a route's
// hypotheses all pass.
BoundReport nl_bounds(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta, const Int& n,
                      int oda_bound = 3);

struct SyzygyEntry {
    int q = 0;
    Int k;
    bool in_range = false;    // q >= 1 and k + q >= 1
    bool determined = false;  // both terms of the dimension chase evaluated
    Int value;
    std::string via;
};

struct SyzygyReport {
    bool hypotheses_ok = false;
    std::vector<HypothesisCheck> hypotheses;
    std::vector<SyzygyEntry> table;
    bool all_zero_in_range = true;
};

// Dimension chase for h^q(M_0(k eta)) along
//   0 -> M_0 -> S_beta (x) O -> O(beta) -> 0
// twisted by k eta: the value is coker(S_beta (x) H^{q-1}(k eta) ->
// H^{q-1}(beta + k eta)) + ker(S_beta (x) H^q(k eta) -> H^q(beta + k eta)),
// with the q=1 cokernel evaluated by explicit multiplication rank and the
// higher terms by vanishing bookkeeping.
SyzygyReport syzygy_vanishing_check(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                                    const DivisorClass& eta, const Int& k_min, const Int& k_max);

// A torus-invariant curve V(wall) with eta-degree 1.
struct InvariantLine {
    Wall wall;
    std::vector<Rat> nef_pairing;  // intersection with the nef generators
    Rat beta0_degree;
    bool in_smooth_locus = false;
};

// Curve record for any wall (pairing against the nef generators,
// anticanonical degree, smooth-locus flag).
InvariantLine invariant_curve(const Fan& fan, const ClassGroup& cg, const Wall& w);

std::vector<InvariantLine> enumerate_lines(const Fan& fan, const ClassGroup& cg,
                                           const DivisorClass& eta);

struct LineLocusResult {
    Int codim;
    Int hilb_dim_used;
    std::vector<std::string> assumptions;
};

// codim of the family of degree-(beta_0 + n eta) surfaces containing a
// curve in the class of the given wall: h^0(O_L(beta)) - dim Hilb. With
// hilb_dim unset, smooth-locus curves use deg(beta_0 on L); singular-locus
// curves require the caller to supply the Hilbert dimension.
LineLocusResult line_locus_codim(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta,
                                 const Int& n, const InvariantLine& line,
                                 std::optional<Int> hilb_dim);

// Degrees (a, b) of the splitting O(a) + O(b) of the normal bundle of
// V(wall), read from the wall relation; requires both adjacent cones
// smooth. Postcondition a + b = beta_0 . V(wall) - 2 is asserted.
std::pair<Int, Int> normal_bundle_degrees(const Fan& fan, const Wall& w);

// Rank of the restriction S_beta -> H^0(O_L(beta)) for L = V(wall): the
// number of distinct surviving exponent pairs on the two off-wall rays.
Int restriction_codim(const Fan& fan, const ClassGroup& cg, const Wall& w,
                      const DivisorClass& beta);

}  // namespace nltoric

#endif
