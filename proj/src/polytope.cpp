#include "nltoric/polytope.hpp"

#include <algorithm>

namespace nltoric {

Halfspace to_rational(const IHalfspace& h) {
    Halfspace out;
    out.normal.reserve(h.normal.size());
    for (const Int& x : h.normal) out.normal.push_back(Rat(x));
    out.rhs = Rat(h.rhs);
    return out;
}

DivisorPolytope divisor_polytope(const Fan& fan, const std::vector<Int>& coeffs) {
    DivisorPolytope p;
    p.dim = fan.dim;
    for (int i = 0; i < fan.n_rays(); ++i) {
        IHalfspace h;
        h.normal = fan.rays[i];
        h.rhs = -coeffs[i];
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

namespace {

// enumerate the box slab with fixed leading coordinate, appending points
void scan_slab(const std::vector<IHalfspace>& ineqs, int dim, const std::vector<Int>& lo,
               const std::vector<Int>& hi, const Int& first,
               std::vector<std::vector<Int>>& out) {
    std::vector<Int> x(dim);
    x[0] = first;
    // odometer over the remaining coordinates
    for (int i = 1; i < dim; ++i) x[i] = lo[i];
    while (true) {
        bool ok = true;
        for (const IHalfspace& h : ineqs)
            if (!satisfies(h, x)) { ok = false; break; }
        if (ok) out.push_back(x);
        int pos = dim - 1;
        while (pos >= 1) {
            ++x[pos];
            if (x[pos] <= hi[pos]) break;
            x[pos] = lo[pos];
            --pos;
        }
        if (pos < 1) break;
    }
}

}  // namespace

std::vector<std::vector<Int>> lattice_points(const std::vector<IHalfspace>& ineqs, int dim,
                                             Exec exec) {
    std::vector<Halfspace> rat;
    rat.reserve(ineqs.size());
    for (const IHalfspace& h : ineqs) rat.push_back(to_rational(h));

    LpVerdict verdict = lp_classify(rat, dim);
    if (verdict.status == LpStatus::empty) return {};
    if (verdict.status == LpStatus::unbounded)
        throw PolytopeUnbounded("lattice_points: unbounded polyhedron");

    auto box = coordinate_box(rat, dim);
    if (!box) throw PolytopeUnbounded("lattice_points: unbounded polyhedron");
    std::vector<Int> lo(dim), hi(dim);
    Int volume = 1;
    for (int i = 0; i < dim; ++i) {
        lo[i] = rat_ceil(box->lo[i]);
        hi[i] = rat_floor(box->hi[i]);
        if (hi[i] < lo[i]) return {};
        volume *= hi[i] - lo[i] + 1;
    }
    if (volume > Int(50000000))
        throw std::invalid_argument("lattice_points: bounding box too large (" +
                                    volume.get_str() + " candidates)");

    const long n0 = Int(hi[0] - lo[0] + 1).get_si();
    std::vector<std::vector<std::vector<Int>>> slabs(static_cast<size_t>(n0));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long s = 0; s < n0; ++s) scan_slab(ineqs, dim, lo, hi, lo[0] + s, slabs[s]);
    } else {
        for (long s = 0; s < n0; ++s) scan_slab(ineqs, dim, lo, hi, lo[0] + s, slabs[s]);
    }
    std::vector<std::vector<Int>> out;
    for (auto& slab : slabs)
        for (auto& p : slab) out.push_back(std::move(p));
    return out;
}

std::vector<std::vector<Int>> lattice_points(const DivisorPolytope& p, Exec exec) {
    return lattice_points(p.ineqs, p.dim, exec);
}

Int count_lattice_points(const std::vector<IHalfspace>& ineqs, int dim, Exec exec) {
    return Int(static_cast<long>(lattice_points(ineqs, dim, exec).size()));
}

}  // namespace nltoric
