#include "nltoric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nltoric {

namespace {

// Faces of the fan's boundary complex as vertex bitmasks (the empty face
// included). For a simplicial fan these are exactly the subsets of the
// maximal cones' ray sets.
std::vector<std::uint32_t> fan_complex_faces(const Fan& fan) {
    std::set<std::uint32_t> faces;
    for (const auto& cone : fan.max_cones) {
        const int k = static_cast<int>(cone.size());
        for (int sub = 0; sub < (1 << k); ++sub) {
            std::uint32_t mask = 0;
            for (int i = 0; i < k; ++i)
                if (sub & (1 << i)) mask |= (1u << cone[i]);
            faces.insert(mask);
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<int> mask_bits(std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) v.push_back(i);
    return v;
}

// Reduced rational Betti numbers of the induced subcomplex on the vertex
// set `sub`, via exact ranks of the augmented boundary matrices. Entry q of
// the result is the rank feeding h^q, i.e. reduced cohomology in degree
// q-1. The void vertex set gives (1, 0, ..., 0).
std::vector<Int> reduced_betti(const std::vector<std::uint32_t>& complex_faces,
                               std::uint32_t sub, int top_q) {
    // group the faces contained in `sub` by dimension; the empty face is
    // always present and carries the augmentation
    std::vector<std::vector<std::uint32_t>> by_dim(top_q + 1);  // dim k at index k, k = |F|-1
    for (std::uint32_t f : complex_faces) {
        if ((f & sub) != f || f == 0) continue;
        int k = __builtin_popcount(f) - 1;
        if (k <= top_q) by_dim[k].push_back(f);
    }
    for (auto& v : by_dim) std::sort(v.begin(), v.end());

    // boundary ranks: rank[k] = rank of d_k : C_k -> C_{k-1}, C_{-1} = Q
    std::vector<int> rank(top_q + 2, 0);
    for (int k = 0; k <= top_q; ++k) {
        const auto& rows = by_dim[k];
        if (rows.empty()) continue;
        if (k == 0) {
            rank[0] = 1;  // augmentation map onto Q
            continue;
        }
        const auto& cols = by_dim[k - 1];
        std::map<std::uint32_t, int> col_index;
        for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<int>(i);
        IMat d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            std::vector<int> verts = mask_bits(rows[i]);
            for (size_t drop = 0; drop < verts.size(); ++drop) {
                std::uint32_t face = rows[i] & ~(1u << verts[drop]);
                d(static_cast<int>(i), col_index.at(face)) = (drop % 2 == 0) ? 1 : -1;
            }
        }
        rank[k] = rank_int(d);
    }

    // reduced betti in degree k-1 feeds h^k:  dim C_{k-1} - rank d_{k-1} - rank d_k
    std::vector<Int> out(top_q + 1, Int(0));
    for (int q = 0; q <= top_q; ++q) {
        long dim_c;  // dim C_{q-1}
        if (q == 0)
            dim_c = 1;  // the empty face
        else
            dim_c = static_cast<long>(by_dim[q - 1].size());
        long lower = (q == 0) ? 0 : rank[q - 1];
        out[q] = Int(dim_c - lower - rank[q]);
    }
    return out;
}

std::vector<IHalfspace> chamber_system(const Fan& fan, const std::vector<Int>& coeffs,
                                       std::uint32_t violated) {
    std::vector<IHalfspace> sys;
    for (int i = 0; i < fan.n_rays(); ++i) {
        IHalfspace h;
        if (violated & (1u << i)) {
            // <m, u> < -a on integers:  <-u, m> >= a + 1
            h.normal.resize(fan.dim);
            for (int j = 0; j < fan.dim; ++j) h.normal[j] = -fan.rays[i][j];
            h.rhs = coeffs[i] + 1;
        } else {
            h.normal = fan.rays[i];
            h.rhs = -coeffs[i];
        }
        sys.push_back(std::move(h));
    }
    return sys;
}

}  // namespace

CohomologyTable graded_cohomology(const Fan& fan, const DivisorClass& d, Exec exec) {
    const int n = fan.n_rays();
    const int r = fan.dim;
    if (n > 16)
        throw std::invalid_argument("graded_cohomology: more than 16 rays not supported");
    const std::vector<std::uint32_t> faces = fan_complex_faces(fan);
    const std::uint32_t n_masks = 1u << n;

    std::vector<ChamberAudit> audits(n_masks);
    std::vector<signed char> contributes(n_masks, 0);
    bool unbounded_chamber = false;

    auto eval_mask = [&](std::uint32_t mask) {
        std::vector<Int> betti = reduced_betti(faces, mask, r);
        bool any = false;
        for (const Int& b : betti)
            if (b != 0) any = true;
        if (!any) return;
        std::vector<IHalfspace> sys = chamber_system(fan, d.coeffs, mask);
        // a chamber carrying cohomology must have finitely many characters
        Int cnt;
        try {
            cnt = count_lattice_points(sys, r, Exec::serial);
        } catch (const PolytopeUnbounded&) {
            unbounded_chamber = true;  // rethrown outside the parallel region
            return;
        }
        if (cnt == 0) return;
        audits[mask] = ChamberAudit{mask, std::move(betti), cnt};
        contributes[mask] = 1;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long mask = 0; mask < static_cast<long>(n_masks); ++mask)
            eval_mask(static_cast<std::uint32_t>(mask));
    } else {
        for (std::uint32_t mask = 0; mask < n_masks; ++mask) eval_mask(mask);
    }
    if (unbounded_chamber)
        throw std::invalid_argument(
            "graded_cohomology: unbounded chamber with nonzero reduced cohomology "
            "(fan is not complete?)");

    CohomologyTable t;
    t.h.assign(r + 1, Int(0));
    for (std::uint32_t mask = 0; mask < n_masks; ++mask) {
        if (!contributes[mask]) continue;
        for (int q = 0; q <= r; ++q) t.h[q] += audits[mask].reduced_betti[q] * audits[mask].lattice_count;
        t.chambers.push_back(std::move(audits[mask]));
    }
    return t;
}

SerreCheck serre_duality_check(const Fan& fan, const ClassGroup& cg, const DivisorClass& d) {
    const int r = fan.dim;
    DivisorClass beta0 = anticanonical_class(cg);
    std::vector<Int> dual_coeffs(d.coeffs.size());
    for (size_t i = 0; i < d.coeffs.size(); ++i) dual_coeffs[i] = -d.coeffs[i] - beta0.coeffs[i];
    DivisorClass dual = make_divisor(cg, std::move(dual_coeffs));

    SerreCheck chk;
    chk.lhs = graded_cohomology(fan, d).h;
    chk.rhs = graded_cohomology(fan, dual).h;
    chk.pass = true;
    for (int q = 0; q <= r; ++q)
        if (chk.lhs[q] != chk.rhs[r - q]) {
            chk.pass = false;
            chk.first_mismatch_q = q;
            break;
        }
    return chk;
}

MinkowskiResult minkowski_decomposition_check(const Fan& fan, const ClassGroup&,
                                              const DivisorClass& a1, const DivisorClass& a2,
                                              Exec exec) {
    std::vector<Wall> ws = walls(fan);
    if (!is_nef_weil(fan, ws, a1) || !is_nef_weil(fan, ws, a2))
        throw std::invalid_argument("minkowski_decomposition_check: inputs must be nef");

    std::vector<Int> sum_coeffs(a1.coeffs.size());
    for (size_t i = 0; i < sum_coeffs.size(); ++i) sum_coeffs[i] = a1.coeffs[i] + a2.coeffs[i];

    auto p1 = lattice_points(divisor_polytope(fan, a1.coeffs), exec);
    auto p2 = lattice_points(divisor_polytope(fan, a2.coeffs), exec);
    auto psum = lattice_points(divisor_polytope(fan, sum_coeffs), exec);

    std::set<std::vector<Int>> set2(p2.begin(), p2.end());

    MinkowskiResult res;
    res.points_checked = Int(static_cast<long>(psum.size()));
    const long nz = static_cast<long>(psum.size());
    std::vector<signed char> bad(psum.size(), 0);

    auto check_one = [&](long zi) {
        const auto& z = psum[zi];
        std::vector<Int> diff(z.size());
        for (const auto& x : p1) {
            for (size_t j = 0; j < z.size(); ++j) diff[j] = z[j] - x[j];
            if (set2.count(diff)) return;
        }
        bad[zi] = 1;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long zi = 0; zi < nz; ++zi) check_one(zi);
    } else {
        for (long zi = 0; zi < nz; ++zi) check_one(zi);
    }

    res.holds = true;
    for (long zi = 0; zi < nz; ++zi)
        if (bad[zi]) {  // psum is lexicographically sorted, first hit is minimal
            res.holds = false;
            res.has_counterexample = true;
            res.counterexample = psum[zi];
            break;
        }
    return res;
}

}  // namespace nltoric
