#include "nltoric/nl.hpp"

#include <algorithm>
#include <set>

namespace nltoric {

namespace {

HypothesisCheck make_check(const std::string& name, bool ok, const std::string& note = "") {
    return {name, ok ? HypothesisCheck::pass : HypothesisCheck::fail, note};
}

}  // namespace

BoundReport nl_bounds(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta, const Int& n,
                      int oda_bound) {
    if (fan.dim != 3)
        throw std::invalid_argument("nl_bounds: implemented for threefolds");
    if (n < 0) throw std::invalid_argument("nl_bounds: n must be nonnegative");
    std::vector<Wall> ws = walls(fan);

    DivisorClass beta0 = anticanonical_class(cg);
    if (!is_cartier(fan, beta0))
        throw std::invalid_argument(
            "nl_bounds: anticanonical class is not Cartier (fan is not Gorenstein)");
    if (nef_ample_test(fan, ws, eta) != Positivity::ample)
        throw std::invalid_argument("nl_bounds: eta is not ample");
    DivisorClass beta = add(cg, beta0, scale(cg, n, eta));
    if (nef_ample_test(fan, ws, beta) != Positivity::ample)
        throw std::invalid_argument("nl_bounds: beta = beta_0 + n eta is not ample");

    BoundReport rep;
    rep.fan_name = fan.name;
    rep.eta_class = eta.cls;
    rep.beta_class = beta.cls;
    rep.n = n;

    rep.hypotheses.push_back(make_check("beta-ample", true));
    rep.hypotheses.push_back(make_check("beta-cartier", is_cartier(fan, beta)));
    rep.hypotheses.push_back(make_check("beta0-cartier", true));

    PicardLattice pic(fan, cg);
    bool primitive = pic.is_primitive(eta.cls);
    rep.hypotheses.push_back(make_check("eta-primitive", primitive,
                                        "content of Picard coordinates"));

    RegularityVerdict eta0 = is_m_regular(fan, cg, eta, eta, Int(0));
    RegularityVerdict etam1 = is_m_regular(fan, cg, eta, eta, Int(-1));
    rep.hypotheses.push_back(make_check("eta-0-regular", eta0.passed));
    rep.hypotheses.push_back(make_check("eta-minus-1-regular", etam1.passed));

    RegularityVerdict beta_reg = is_m_regular(fan, cg, beta, eta, Int(0));
    rep.hypotheses.push_back(make_check("beta-0-regular-wrt-eta", beta_reg.passed));

    DivisorClass bm2e = sub(cg, beta, scale(cg, Int(2), eta));
    bool bm2e_nef = is_nef_weil(fan, ws, bm2e);
    rep.hypotheses.push_back(make_check("beta-minus-2eta-nef", bm2e_nef));

    VanishingTriple vt = vanishing_triple(fan, cg, beta, eta);
    rep.hypotheses.push_back(make_check("vanishing-triple", vt.all_vanish));

    OdaWindowReport oda = oda_window_check(fan, cg, oda_bound);
    HypothesisCheck oda_check;
    oda_check.name = "oda-window";
    oda_check.status = oda.all_pass() ? HypothesisCheck::pass_window : HypothesisCheck::fail;
    oda_check.note = "verified on window, bound " + std::to_string(oda.bound);
    rep.hypotheses.push_back(oda_check);

    bool beta0_ample = nef_ample_test(fan, ws, beta0) == Positivity::ample;
    rep.hypotheses.push_back(make_check("beta0-ample", beta0_ample, "Fano route gate"));

    bool base = primitive;
    if (base && beta_reg.passed) rep.routes_fired.push_back("regularity-route");
    if (base && oda.all_pass() && bm2e_nef) rep.routes_fired.push_back("oda-route");
    if (base && beta0_ample && n >= 3) rep.routes_fired.push_back("fano-route");

    if (!rep.routes_fired.empty()) {
        if (etam1.passed) {
            rep.has_lower = true;
            rep.lower_bound = n + 1;
            rep.lower_route = rep.routes_fired.front() + " ((-1)-regular eta)";
        } else if (eta0.passed) {
            rep.has_lower = true;
            rep.lower_bound = n;
            rep.lower_route = rep.routes_fired.front() + " (0-regular eta)";
        }
    }

    rep.upper_bound = h0(fan, scale(cg, n, eta));
    if (rep.has_lower && rep.lower_bound > rep.upper_bound)
        throw std::logic_error("nl_bounds: lower bound exceeds upper bound");
    return rep;
}

SyzygyReport syzygy_vanishing_check(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                                    const DivisorClass& eta, const Int& k_min, const Int& k_max) {
    SyzygyReport rep;
    std::vector<Wall> ws = walls(fan);

    bool beta_nef_cartier = is_cartier(fan, beta) && is_nef_weil(fan, ws, beta);
    rep.hypotheses.push_back(make_check("beta-nef-cartier", beta_nef_cartier));
    bool eta_ample = nef_ample_test(fan, ws, eta) == Positivity::ample;
    rep.hypotheses.push_back(make_check("eta-ample", eta_ample));
    bool eta_0reg = eta_ample && is_m_regular(fan, cg, eta, eta, Int(0)).passed;
    rep.hypotheses.push_back(make_check("eta-0-regular", eta_0reg));

    bool mult_ok = true;
    for (Int k = 0; k <= k_max; ++k) {
        DivisorClass keta = scale(cg, k, eta);
        MultMapResult mm = mult_map_surjective(fan, cg, std::nullopt, beta, keta);
        if (!mm.surjective) mult_ok = false;
    }
    rep.hypotheses.push_back(make_check("multiplication-surjective",
                                        mult_ok, "S_beta x S_{k eta} for k in the window"));

    VanishingTriple vt = vanishing_triple(fan, cg, beta, eta);
    rep.hypotheses.push_back(make_check("vanishing-triple", vt.all_vanish));

    rep.hypotheses_ok = beta_nef_cartier && eta_ample && eta_0reg && mult_ok && vt.all_vanish;

    Int dim_s_beta = h0(fan, beta);

    for (int q = 1; q <= fan.dim; ++q) {
        for (Int k = k_min; k <= k_max; ++k) {
            SyzygyEntry e;
            e.q = q;
            e.k = k;
            e.in_range = (k + q >= 1);

            DivisorClass keta = scale(cg, k, eta);
            DivisorClass bke = add(cg, beta, keta);
            CohomologyTable hk = graded_cohomology(fan, keta);
            CohomologyTable hbk = graded_cohomology(fan, bke);

            // coker(S_beta (x) H^{q-1}(k eta) -> H^{q-1}(beta + k eta))
            bool t1_det = false;
            Int t1;
            if (hk.h[q - 1] == 0) {
                t1 = hbk.h[q - 1];
                t1_det = true;
            } else if (q - 1 == 0) {
                MultMapResult mm = mult_map_surjective(fan, cg, std::nullopt, beta, keta);
                t1 = mm.cokernel_dim;
                t1_det = true;
            } else if (hbk.h[q - 1] == 0) {
                t1 = 0;
                t1_det = true;
            }

            // ker(S_beta (x) H^q(k eta) -> H^q(beta + k eta))
            bool t2_det = false;
            Int t2;
            if (hk.h[q] == 0) {
                t2 = 0;
                t2_det = true;
            } else if (hbk.h[q] == 0) {
                t2 = dim_s_beta * hk.h[q];
                t2_det = true;
            }

            if (t1_det && t2_det) {
                e.determined = true;
                e.value = t1 + t2;
                e.via = "dimension-chase";
            } else {
                e.via = "map on higher cohomology not evaluated";
            }
            if (e.in_range && (!e.determined || e.value != 0)) rep.all_zero_in_range = false;
            rep.table.push_back(std::move(e));
        }
    }
    return rep;
}

InvariantLine invariant_curve(const Fan& fan, const ClassGroup& cg, const Wall& w) {
    InvariantLine l;
    l.wall = w;
    for (const auto& g : nef_cone_generators(fan, cg, walls(fan)))
        l.nef_pairing.push_back(intersection_number(fan, divisor_from_class(cg, g), w));
    l.beta0_degree = intersection_number(fan, anticanonical_class(cg), w);
    Int ma = cone_lattice_index(fan, fan.max_cones[w.cone_a]);
    Int mb = cone_lattice_index(fan, fan.max_cones[w.cone_b]);
    l.in_smooth_locus = (ma == 1 && mb == 1);
    return l;
}

std::vector<InvariantLine> enumerate_lines(const Fan& fan, const ClassGroup& cg,
                                           const DivisorClass& eta) {
    if (fan.dim != 3)
        throw std::invalid_argument("enumerate_lines: implemented for threefolds");
    std::vector<Wall> ws = walls(fan);
    if (nef_ample_test(fan, ws, eta) != Positivity::ample)
        throw std::invalid_argument("enumerate_lines: eta is not ample");
    std::vector<std::vector<Int>> nef_gens = nef_cone_generators(fan, cg, ws);
    DivisorClass beta0 = anticanonical_class(cg);

    std::vector<InvariantLine> lines;
    for (const Wall& w : ws) {
        if (intersection_number(fan, eta, w) != 1) continue;
        InvariantLine l;
        l.wall = w;
        for (const auto& g : nef_gens)
            l.nef_pairing.push_back(intersection_number(fan, divisor_from_class(cg, g), w));
        l.beta0_degree = intersection_number(fan, beta0, w);
        Int ma = cone_lattice_index(fan, fan.max_cones[w.cone_a]);
        Int mb = cone_lattice_index(fan, fan.max_cones[w.cone_b]);
        l.in_smooth_locus = (ma == 1 && mb == 1);
        lines.push_back(std::move(l));
    }
    return lines;
}

LineLocusResult line_locus_codim(const Fan& fan, const ClassGroup& cg, const DivisorClass& eta,
                                 const Int& n, const InvariantLine& line,
                                 std::optional<Int> hilb_dim) {
    if (n < 0) throw std::invalid_argument("line_locus_codim: n must be nonnegative");
    DivisorClass beta0 = anticanonical_class(cg);
    DivisorClass beta = add(cg, beta0, scale(cg, n, eta));
    Rat deg_beta = intersection_number(fan, beta, line.wall);
    if (deg_beta.get_den() != 1)
        throw std::invalid_argument("line_locus_codim: beta has non-integral degree on the curve");

    LineLocusResult res;
    if (hilb_dim) {
        res.hilb_dim_used = *hilb_dim;
        res.assumptions.push_back("hilbert dimension supplied by caller");
    } else {
        if (!line.in_smooth_locus)
            throw std::invalid_argument(
                "line_locus_codim: curve meets the singular locus; supply hilb_dim");
        if (line.beta0_degree.get_den() != 1)
            throw std::logic_error("line_locus_codim: non-integral anticanonical degree");
        res.hilb_dim_used = line.beta0_degree.get_num();
        res.assumptions.push_back("dim Hilb = deg(anticanonical | L) for smooth-locus curves");
        res.assumptions.push_back("h^1(normal bundle) = 0 and h^1(ideal sheaf twist) = 0 assumed");
    }
    res.codim = deg_beta.get_num() + 1 - res.hilb_dim_used;
    if (res.codim < 0)
        throw std::invalid_argument("line_locus_codim: negative result, hilb_dim inconsistent");
    return res;
}

std::pair<Int, Int> normal_bundle_degrees(const Fan& fan, const Wall& w) {
    if (fan.dim != 3)
        throw std::invalid_argument("normal_bundle_degrees: implemented for threefolds");
    Int ma = cone_lattice_index(fan, fan.max_cones[w.cone_a]);
    Int mb = cone_lattice_index(fan, fan.max_cones[w.cone_b]);
    if (ma != 1 || mb != 1)
        throw std::invalid_argument(
            "normal_bundle_degrees: adjacent cone is singular; splitting not defined here");
    if (w.lambda_a != 1 || w.lambda_b != 1)
        throw std::logic_error("normal_bundle_degrees: smooth wall with non-unit relation");
    Int a = w.mu[0], b = w.mu[1];

    // deg N = beta_0 . V(wall) - 2
    std::vector<Int> ones(fan.n_rays(), Int(1));
    Rat deg = intersection_number(fan, ones, w);
    if (Rat(a + b) != deg - 2)
        throw std::logic_error("normal_bundle_degrees: splitting does not sum to deg N");
    return {a, b};
}

Int restriction_codim(const Fan& fan, const ClassGroup& cg, const Wall& w,
                      const DivisorClass& beta) {
    GradedBasis basis = graded_basis(fan, cg, beta);
    std::set<std::pair<Int, Int>> profiles;
    for (const auto& e : basis.exponents) {
        bool survives = true;
        for (int wr : w.wall_rays)
            if (e[wr] != 0) survives = false;
        if (!survives) continue;
        profiles.insert({e[w.off_a], e[w.off_b]});
    }
    return Int(static_cast<long>(profiles.size()));
}

}  // namespace nltoric
