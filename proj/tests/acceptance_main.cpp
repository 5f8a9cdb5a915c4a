// Acceptance suite: one line per criterion, every comparison exact.
// Exit code 0 only when all criteria hold.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "nltoric/catalog.hpp"
#include "nltoric/json_io.hpp"

using namespace nltoric;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void criterion(int id, const std::string& label, bool pass, double seconds, double budget_s) {
    bool in_budget = seconds <= budget_s;
    if (!pass || !in_budget) ++g_failures;
    std::ostringstream os;
    os << (pass && in_budget ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label
       << "  (" << static_cast<long>(seconds * 1000) << " ms";
    if (!in_budget) os << ", over budget " << budget_s << " s";
    os << ")";
    std::cout << os.str() << "\n";
    for (const auto& n : g_notes) std::cout << "        " << n << "\n";
    g_notes.clear();
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<long> kunneth_p1xp2(long p1_deg, long p2_deg) {
    auto h_p1 = [](long a) {
        std::vector<long> h(2, 0);
        if (a >= 0) h[0] = a + 1;
        if (a <= -2) h[1] = -a - 1;
        return h;
    };
    auto h_p2 = [](long b) {
        std::vector<long> h(3, 0);
        if (b >= 0) h[0] = (b + 1) * (b + 2) / 2;
        if (b <= -3) h[2] = (b + 1) * (b + 2) / 2;
        return h;
    };
    std::vector<long> a = h_p1(p1_deg), b = h_p2(p2_deg), out(4, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool check_catalog_structure() {
    bool ok = true;
    std::vector<int> ranks;
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        ranks.push_back(e.cg.free_rank());
        for (const CheckResult& r : verify_catalog_entry(e))
            if (r.id.find("class-group-rank") != std::string::npos ||
                r.id.find("beta0-in-nef-basis") != std::string::npos)
                if (!r.pass) {
                    ok = false;
                    note(r.id + ": expected " + r.expected + ", got " + r.actual);
                }
    }
    if (ranks != std::vector<int>({1, 1, 2, 2, 2})) {
        ok = false;
        note("rank vector mismatch");
    }
    CatalogEntry bl = load_catalog("blowup-p3-line");
    ok &= anticanonical_class(bl.cg) ==
          add(bl.cg, scale(bl.cg, Int(3), bl.nef_basis[0]), bl.nef_basis[1]);
    CatalogEntry qr = load_catalog("quadric-cone-resolution");
    ok &= anticanonical_class(qr.cg) == scale(qr.cg, Int(3), qr.nef_basis[0]);
    CatalogEntry wp = load_catalog("wp1122");
    ok &= anticanonical_class(wp.cg) == scale(wp.cg, Int(6), wp.nef_basis[0]);
    ok &= anticanonical_class(wp.cg) == scale(wp.cg, Int(3), wp.eta);
    return ok;
}

bool check_intersection_table() {
    CatalogEntry bl = load_catalog("blowup-p3-line");
    std::vector<InvariantLine> lines = enumerate_lines(bl.fan, bl.cg, bl.eta);
    std::set<std::pair<long, long>> classes;
    for (const auto& l : lines) {
        Rat p1 = intersection_number(bl.fan, bl.nef_basis[0], l.wall);
        Rat p2 = intersection_number(bl.fan, bl.nef_basis[1], l.wall);
        classes.insert({p1.get_num().get_si(), p2.get_num().get_si()});
    }
    // ell_1 . (eta_1, eta_2) = (0, 1) and ell_2 . (eta_1, eta_2) = (1, 0)
    bool ok = classes == std::set<std::pair<long, long>>({{0, 1}, {1, 0}});
    if (!ok) note("line pairings against (eta_1, eta_2) differ from the anti-diagonal table");
    return ok;
}

bool check_cohomology_engine() {
    bool ok = true;
    std::mt19937_64 rng(2024);
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        std::vector<DivisorClass> basis = picard_nef_basis(e.fan, e.cg);
        // (a) Demazure vanishing on 50 random nef Cartier classes
        for (int t = 0; t < 50; ++t) {
            DivisorClass d = scale(e.cg, Int(static_cast<long>(rng() % 5)), basis[0]);
            for (size_t i = 1; i < basis.size(); ++i)
                d = add(e.cg, d, scale(e.cg, Int(static_cast<long>(rng() % 5)), basis[i]));
            CohomologyTable table = graded_cohomology(e.fan, d);
            for (int q = 1; q <= 3; ++q)
                if (table.h[q] != 0) {
                    ok = false;
                    note(name + ": nonzero higher cohomology on a nef class");
                }
        }
        // (b) Serre duality on 50 random Cartier classes, coefficients in [-4, 4]
        int done = 0;
        while (done < 50) {
            std::vector<Int> coeffs(e.fan.n_rays());
            for (auto& x : coeffs) x = Int(static_cast<long>(rng() % 9) - 4);
            if (!cartier_data(e.fan, coeffs).cartier) continue;
            ++done;
            if (!serre_duality_check(e.fan, e.cg, make_divisor(e.cg, coeffs)).pass) {
                ok = false;
                note(name + ": Serre duality mismatch");
            }
        }
    }
    // (c) Kunneth agreement on 20 random classes of the product threefold
    CatalogEntry pp = load_catalog("p1xp2");
    for (int t = 0; t < 20; ++t) {
        long p2d = static_cast<long>(rng() % 11) - 5;
        long p1d = static_cast<long>(rng() % 11) - 5;
        std::vector<long> oracle = kunneth_p1xp2(p1d, p2d);
        std::vector<Int> got =
            graded_cohomology(pp.fan, divisor_from_class(pp.cg, iv({p2d, p1d}))).h;
        for (int q = 0; q <= 3; ++q)
            if (got[q] != oracle[q]) {
                ok = false;
                note("product-formula mismatch at q=" + std::to_string(q));
            }
    }
    return ok;
}

bool check_regularity() {
    bool ok = true;
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h = divisor_from_class(p3.cg, iv({1}));
    ok &= is_m_regular(p3.fan, p3.cg, h, h, Int(-1)).passed;

    CatalogEntry wp = load_catalog("wp1122");
    ok &= is_m_regular(wp.fan, wp.cg, wp.eta, wp.eta, Int(0)).passed;
    ok &= !is_m_regular(wp.fan, wp.cg, wp.eta, wp.eta, Int(-1)).passed;

    CatalogEntry bl = load_catalog("blowup-p3-line");
    for (long s = 1; s <= 3; ++s) {
        DivisorClass eta = add(bl.cg, bl.nef_basis[0], scale(bl.cg, Int(s), bl.nef_basis[1]));
        ok &= is_m_regular(bl.fan, bl.cg, eta, eta, Int(0)).passed;
    }

    // window form of the (-1)-regularity classification, bound 4
    std::vector<CatalogEntry> entries;
    for (const std::string& name : catalog_names()) entries.push_back(load_catalog(name));
    for (const ClassificationRow& row : catalog_classification(entries, 4)) {
        if (!row.has_zero_regular_ample) {
            ok = false;
            note(row.entry + ": no 0-regular ample class in the window");
        }
        if ((row.entry == "p3") != row.has_minus_one_regular_ample) {
            ok = false;
            note(row.entry + ": (-1)-regular window classification mismatch");
        }
    }
    return ok;
}

bool check_oda_windows() {
    bool ok = true;
    for (const char* name :
         {"p1xp2", "blowup-p3-line", "wp1122", "quadric-cone-resolution"}) {
        CatalogEntry e = load_catalog(name);
        OdaWindowReport rep = oda_window_check(e.fan, e.cg, 3);
        if (!rep.all_pass()) {
            ok = false;
            note(std::string(name) + ": " + std::to_string(rep.failures.size()) + " decomposition failures");
        }
    }
    return ok;
}

bool check_multiplication_maps() {
    bool ok = true;
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h5 = divisor_from_class(p3.cg, iv({5}));
    DivisorClass h1 = divisor_from_class(p3.cg, iv({1}));
    CoxPolynomial quintic = fermat_section(p3.fan, p3.cg, h5);
    ok &= mult_map_surjective(p3.fan, p3.cg, quintic, h5, h1).surjective;

    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        for (long n = 0; n <= 2; ++n) {
            DivisorClass beta = add(e.cg, anticanonical_class(e.cg), scale(e.cg, Int(n), e.eta));
            if (!is_m_regular(e.fan, e.cg, beta, e.eta, Int(0)).passed) continue;
            for (long k = 1; k <= 2; ++k) {
                DivisorClass keta = scale(e.cg, Int(k), e.eta);
                if (!mult_map_surjective(e.fan, e.cg, std::nullopt, beta, keta).surjective) {
                    ok = false;
                    note(name + ": multiplication not onto at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
                }
            }
        }
    }
    return ok;
}

bool check_nl_bounds() {
    bool ok = true;
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h = divisor_from_class(p3.cg, iv({1}));
    for (long d = 4; d <= 8; ++d) {
        BoundReport rep = nl_bounds(p3.fan, p3.cg, h, Int(d - 4));
        if (!rep.has_lower || rep.lower_bound != d - 3) {
            ok = false;
            note("p3 degree " + std::to_string(d) + ": lower bound mismatch");
        }
        if (rep.upper_bound != h0(p3.fan, divisor_from_class(p3.cg, iv({d - 4})))) ok = false;
        if (rep.has_lower && rep.lower_bound > rep.upper_bound) ok = false;
    }
    if (h0(p3.fan, h) != 4) ok = false;

    for (const char* name : {"wp1122", "quadric-cone-resolution"}) {
        CatalogEntry e = load_catalog(name);
        for (long n = 2; n <= 4; ++n) {
            BoundReport rep = nl_bounds(e.fan, e.cg, e.eta, Int(n));
            if (!rep.has_lower || rep.lower_bound != n) {
                ok = false;
                note(std::string(name) + " n=" + std::to_string(n) + ": expected lower bound n");
            }
            if (rep.has_lower && rep.lower_bound > rep.upper_bound) ok = false;
        }
    }
    return ok;
}

bool check_syzygy() {
    bool ok = true;
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h = divisor_from_class(p3.cg, iv({1}));
    for (long d : {4L, 5L}) {
        SyzygyReport rep = syzygy_vanishing_check(
            p3.fan, p3.cg, divisor_from_class(p3.cg, iv({d})), h, Int(-2), Int(3));
        if (!rep.hypotheses_ok || !rep.all_zero_in_range) {
            ok = false;
            note("p3 beta=" + std::to_string(d) + "H: syzygy table not identically zero");
        }
    }
    CatalogEntry pp = load_catalog("p1xp2");
    DivisorClass beta = add(pp.cg, anticanonical_class(pp.cg), scale(pp.cg, Int(2), pp.eta));
    SyzygyReport rep = syzygy_vanishing_check(pp.fan, pp.cg, beta, pp.eta, Int(-2), Int(3));
    if (!rep.hypotheses_ok || !rep.all_zero_in_range) {
        ok = false;
        note("p1xp2: syzygy table not identically zero");
    }
    return ok;
}

bool check_lines() {
    bool ok = true;
    for (const char* name : {"blowup-p3-line", "p1xp2"}) {
        CatalogEntry e = load_catalog(name);
        std::set<std::pair<long, long>> classes;
        for (const auto& l : enumerate_lines(e.fan, e.cg, e.eta)) {
            Rat p1 = intersection_number(e.fan, e.nef_basis[0], l.wall);
            Rat p2 = intersection_number(e.fan, e.nef_basis[1], l.wall);
            classes.insert({p1.get_num().get_si(), p2.get_num().get_si()});
        }
        if (classes != std::set<std::pair<long, long>>({{0, 1}, {1, 0}})) {
            ok = false;
            note(std::string(name) + ": line classes differ from the two reference classes");
        }
    }

    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        for (const auto& l : enumerate_lines(e.fan, e.cg, e.eta)) {
            for (long n = 0; n <= 2; ++n) {
                std::optional<Int> hd;
                if (!l.in_smooth_locus) hd = e.hilb_dim_override;
                if (line_locus_codim(e.fan, e.cg, e.eta, Int(n), l, hd).codim != n + 1) {
                    ok = false;
                    note(name + ": line-locus codimension differs from n + 1");
                }
            }
            if (l.in_smooth_locus) {
                for (long n = 0; n <= 2; ++n) {
                    DivisorClass beta =
                        add(e.cg, anticanonical_class(e.cg), scale(e.cg, Int(n), e.eta));
                    Int expect = l.beta0_degree.get_num() + n + 1;
                    if (restriction_codim(e.fan, e.cg, l.wall, beta) != expect) {
                        ok = false;
                        note(name + ": restriction rank differs from beta0.L + n + 1");
                    }
                }
            }
        }
    }

    // skew polarizations: the fiber class contributes codimension n s + 1
    CatalogEntry pp = load_catalog("p1xp2");
    for (long s = 2; s <= 3; ++s) {
        DivisorClass eta = add(pp.cg, pp.nef_basis[0], scale(pp.cg, Int(s), pp.nef_basis[1]));
        for (const Wall& w : walls(pp.fan)) {
            if (intersection_number(pp.fan, pp.nef_basis[0], w) != 0) continue;
            InvariantLine fiber = invariant_curve(pp.fan, pp.cg, w);
            for (long n = 0; n <= 2; ++n) {
                LineLocusResult r =
                    line_locus_codim(pp.fan, pp.cg, eta, Int(n), fiber, std::nullopt);
                if (r.codim != n * s + 1) {
                    ok = false;
                    note("p1xp2 s=" + std::to_string(s) + ": fiber locus codim != n s + 1");
                }
            }
            break;
        }
    }
    return ok;
}

bool check_normal_bundles() {
    bool ok = true;
    for (const char* name :
         {"p3", "p1xp2", "blowup-p3-line", "quadric-cone-resolution"}) {
        CatalogEntry e = load_catalog(name);
        DivisorClass b0 = anticanonical_class(e.cg);
        for (const Wall& w : walls(e.fan)) {
            auto [a, b] = normal_bundle_degrees(e.fan, w);
            if (Rat(a + b) != intersection_number(e.fan, b0, w) - 2) {
                ok = false;
                note(std::string(name) + ": splitting degrees do not sum to beta0.C - 2");
            }
        }
    }
    CatalogEntry qr = load_catalog("quadric-cone-resolution");
    bool found_flop = false;
    for (const Wall& w : walls(qr.fan)) {
        auto [a, b] = normal_bundle_degrees(qr.fan, w);
        if (a == -1 && b == -1) found_flop = true;
    }
    if (!found_flop) {
        ok = false;
        note("quadric-cone-resolution: no (-1,-1) wall found");
    }
    return ok;
}

}  // namespace

int main() {
    Timer total;
    struct Item {
        int id;
        const char* label;
        bool (*fn)();
        double budget_s;
    };
    const Item items[] = {
        {1, "catalog structure: ranks and anticanonical expressions", check_catalog_structure, 600},
        {2, "intersection table on the blown-up threefold", check_intersection_table, 600},
        {3, "cohomology engine: vanishing, duality, product oracle", check_cohomology_engine, 120},
        {4, "regularity of the designated polarizations", check_regularity, 600},
        {5, "windowed decomposition checks, bound 3", check_oda_windows, 180},
        {6, "multiplication map surjectivity", check_multiplication_maps, 600},
        {7, "codimension bounds with hypothesis ledgers", check_nl_bounds, 600},
        {8, "syzygy-bundle vanishing by dimension chase", check_syzygy, 600},
        {9, "invariant lines, line loci, restriction ranks", check_lines, 600},
        {10, "normal bundle splitting degrees", check_normal_bundles, 600},
    };
    for (const Item& item : items) {
        Timer t;
        bool pass = false;
        try {
            pass = item.fn();
        } catch (const std::exception& ex) {
            note(std::string("exception: ") + ex.what());
        }
        criterion(item.id, item.label, pass, t.elapsed(), item.budget_s);
    }
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "  (total "
              << static_cast<long>(total.elapsed() * 1000) << " ms)\n";
    return g_failures == 0 ? 0 : 1;
}
