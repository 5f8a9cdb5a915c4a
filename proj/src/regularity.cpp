#include "nltoric/regularity.hpp"

#include <algorithm>

namespace nltoric {

RegularityVerdict is_m_regular(const Fan& fan, const ClassGroup& cg, const DivisorClass& subject,
                               const DivisorClass& ample_ref, const Int& m) {
    std::vector<Wall> ws = walls(fan);
    if (nef_ample_test(fan, ws, ample_ref) != Positivity::ample)
        throw std::invalid_argument("is_m_regular: reference class is not ample");
    if (!is_cartier(fan, subject))
        throw std::invalid_argument("is_m_regular: subject class is not Cartier");

    RegularityVerdict v;
    v.passed = true;
    for (int q = 1; q <= fan.dim; ++q) {
        DivisorClass twist = add(cg, subject, scale(cg, m - Int(q), ample_ref));
        CohomologyTable t = graded_cohomology(fan, twist);
        if (t.h[q] != 0) {
            v.passed = false;
            v.failing_q = q;
            v.failing_twist = twist;
            v.failing_value = t.h[q];
            return v;
        }
    }
    return v;
}

QuickCriteria quick_criteria(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta) {
    std::vector<Wall> ws = walls(fan);
    if (nef_ample_test(fan, ws, eta) != Positivity::ample)
        throw std::invalid_argument("quick_criteria: class is not ample");
    DivisorClass beta0 = anticanonical_class(cg);
    const Int r(fan.dim);
    DivisorClass zero_test = sub(cg, scale(cg, r - 1, eta), beta0);
    DivisorClass minus_test = sub(cg, scale(cg, r, eta), beta0);
    QuickCriteria qc;
    qc.h0_zero_test = h0(fan, zero_test);
    qc.h0_minus_one_test = h0(fan, minus_test);
    qc.zero_regular = (qc.h0_zero_test == 0);
    qc.minus_one_regular = (qc.h0_minus_one_test == 0);
    return qc;
}

std::vector<DivisorClass> picard_nef_basis(const Fan& fan, const ClassGroup& cg) {
    std::vector<Wall> ws = walls(fan);
    PicardLattice pic(fan, cg);
    std::vector<DivisorClass> basis;
    Int index = pic.index_in_class_group();
    for (const auto& gen : nef_cone_generators(fan, cg, ws)) {
        bool found = false;
        for (Int t = 1; t <= index; ++t) {
            std::vector<Int> scaled(gen.size());
            for (size_t i = 0; i < gen.size(); ++i) scaled[i] = t * gen[i];
            if (pic.coordinates(scaled)) {
                basis.push_back(divisor_from_class(cg, scaled));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("picard_nef_basis: no Cartier multiple within the index bound");
    }
    return basis;
}

OdaWindowReport oda_window_check(const Fan& fan, const ClassGroup& cg, int bound, Exec exec) {
    std::vector<Wall> ws = walls(fan);
    std::vector<DivisorClass> basis = picard_nef_basis(fan, cg);
    const int f = static_cast<int>(basis.size());

    OdaWindowReport rep;
    rep.bound = bound;
    for (const auto& g : basis) rep.window_basis.push_back(g.cls);

    // enumerate coordinate vectors in [0, bound]^f
    std::vector<std::vector<Int>> coords;
    std::vector<Int> cur(f, Int(0));
    while (true) {
        coords.push_back(cur);
        int pos = f - 1;
        while (pos >= 0) {
            ++cur[pos];
            if (cur[pos] <= bound) break;
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    auto combine = [&](const std::vector<Int>& c) {
        DivisorClass d = scale(cg, c[0], basis[0]);
        for (int i = 1; i < f; ++i) d = add(cg, d, scale(cg, c[i], basis[i]));
        return d;
    };

    std::vector<std::pair<std::vector<Int>, DivisorClass>> amples, nefs;
    for (const auto& c : coords) {
        DivisorClass d = combine(c);
        nefs.push_back({c, d});  // nonnegative combinations of nef classes are nef
        if (nef_ample_test(fan, ws, d) == Positivity::ample) amples.push_back({c, d});
    }

    struct Task { int ai, ni; };
    std::vector<Task> tasks;
    for (int ai = 0; ai < static_cast<int>(amples.size()); ++ai)
        for (int ni = 0; ni < static_cast<int>(nefs.size()); ++ni) tasks.push_back({ai, ni});
    rep.pairs_checked = static_cast<long>(tasks.size());

    std::vector<std::optional<OdaFailure>> fails(tasks.size());
    auto run_task = [&](size_t t) {
        const auto& [ac, a1] = amples[tasks[t].ai];
        const auto& [nc, a2] = nefs[tasks[t].ni];
        MinkowskiResult mr = minkowski_decomposition_check(fan, cg, a1, a2, Exec::serial);
        if (!mr.holds) fails[t] = OdaFailure{ac, nc, mr.counterexample};
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < static_cast<long>(tasks.size()); ++t) run_task(static_cast<size_t>(t));
    } else {
        for (size_t t = 0; t < tasks.size(); ++t) run_task(t);
    }
    for (const auto& fo : fails)
        if (fo) rep.failures.push_back(*fo);
    return rep;
}

VanishingTriple vanishing_triple(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                                 const DivisorClass& eta) {
    if (!is_cartier(fan, beta) || !is_cartier(fan, eta))
        throw std::invalid_argument("vanishing_triple: inputs must be Cartier");
    std::vector<Wall> ws = walls(fan);
    DivisorClass bme = sub(cg, beta, eta);
    DivisorClass bm2e = sub(cg, bme, eta);
    VanishingTriple vt;
    CohomologyTable t1 = graded_cohomology(fan, bme);
    vt.h1_beta_minus_eta = t1.h[1];
    vt.h2_beta_minus_eta = t1.h[2];
    vt.h2_beta_minus_2eta = graded_cohomology(fan, bm2e).h[2];
    vt.all_vanish = vt.h1_beta_minus_eta == 0 && vt.h2_beta_minus_eta == 0 &&
                    vt.h2_beta_minus_2eta == 0;
    vt.via_nef = is_nef_weil(fan, ws, bm2e);
    if (nef_ample_test(fan, ws, eta) == Positivity::ample)
        vt.via_regularity = is_m_regular(fan, cg, beta, eta, Int(0)).passed;
    return vt;
}

}  // namespace nltoric
