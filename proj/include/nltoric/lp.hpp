#ifndef NLTORIC_LP_HPP
#define NLTORIC_LP_HPP

#include <optional>
#include <vector>

#include "nltoric/exact.hpp"

// Exact rational linear programming over free variables. The feasible
// region is an intersection of halfspaces <normal, x> >= rhs. Solved by a
// dictionary simplex with Bland's rule (guaranteed termination, no cycling).

namespace nltoric {

struct Halfspace {
    std::vector<Rat> normal;
    Rat rhs;
};

inline bool satisfies(const Halfspace& h, const std::vector<Rat>& x) {
    Rat s = 0;
    for (size_t i = 0; i < h.normal.size(); ++i) s += h.normal[i] * x[i];
    return s >= h.rhs;
}

enum class LpStatus { empty, bounded_nonempty, unbounded };

struct LpVerdict {
    LpStatus status = LpStatus::empty;
    std::vector<Rat> point;  // feasible point (bounded_nonempty, unbounded)
    std::vector<Rat> ray;    // nonzero recession direction (unbounded)
};

// Classify the region: empty, nonempty with trivial recession cone, or
// unbounded. dim >= 1 required.
LpVerdict lp_classify(const std::vector<Halfspace>& halfspaces, int dim);

struct LpOptimum {
    enum Kind { infeasible, unbounded, optimal } kind = infeasible;
    Rat value;
    std::vector<Rat> point;
    std::vector<Rat> ray;  // improving recession direction when unbounded
};

// maximize <objective, x> over the region.
LpOptimum lp_maximize(const std::vector<Halfspace>& halfspaces,
                      const std::vector<Rat>& objective, int dim);

// Exact per-coordinate ranges of a feasible region; nullopt if the region is
// empty or unbounded in some coordinate. Used for lattice enumeration boxes.
struct CoordinateBox {
    std::vector<Rat> lo, hi;
};

std::optional<CoordinateBox> coordinate_box(const std::vector<Halfspace>& halfspaces, int dim);

}  // namespace nltoric

#endif
