#include "nltoric/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nltoric {

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string rvec_str(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Fan p3_fan() {
    Fan f;
    f.dim = 3;
    f.name = "p3";
    f.rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

Fan wp1122_fan() {
    Fan f;
    f.dim = 3;
    f.name = "wp1122";
    f.rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -2, -2})};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

Fan p1xp2_fan() {
    Fan f;
    f.dim = 3;
    f.name = "p1xp2";
    f.rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 0}), iv({0, 0, 1}), iv({0, 0, -1})};
    f.max_cones = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}};
    return f;
}

// Small resolution of the projective cone over the quadric surface: the
// four-edge cone over the unit square is split along one diagonal.
Fan quadric_resolution_fan() {
    Fan f;
    f.dim = 3;
    f.name = "quadric-cone-resolution";
    f.rays = {iv({0, 0, 1}), iv({1, 0, 1}), iv({1, 1, 1}), iv({0, 1, 1}), iv({-1, -1, -2})};
    f.max_cones = {{0, 1, 2}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}};
    return f;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("catalog: encoding check failed: " + what);
}

CatalogEntry shell(const char* name, Fan fan) {
    ClassGroup cg(fan);
    DivisorClass beta0 = anticanonical_class(cg);
    return CatalogEntry{name, std::move(fan), std::move(cg), {}, DivisorClass{}, std::move(beta0),
                        0,    {},             false,         false, {}, {}, {}};
}

void assert_structure(CatalogEntry& e) {
    ValidationReport vr = validate_fan(e.fan);
    if (!vr.valid) {
        std::string msg = "catalog: fan '" + e.name + "' failed validation";
        if (!vr.issues.empty()) msg += ": " + vr.issues.front().kind + " " + vr.issues.front().detail;
        throw std::runtime_error(msg);
    }
    require(e.cg.torsion().empty(), e.name + ": torsion-free class group");
    require(e.cg.free_rank() == e.picard_rank, e.name + ": class-group rank");

    std::vector<Wall> ws = walls(e.fan);
    std::vector<std::vector<Int>> gens = nef_cone_generators(e.fan, e.cg, ws);
    std::set<std::vector<Int>> gen_set(gens.begin(), gens.end());
    std::set<std::vector<Int>> designated;
    for (const auto& b : e.nef_basis) designated.insert(b.cls);
    require(gen_set == designated, e.name + ": designated nef basis equals the computed nef cone");

    // beta0 expression in the designated basis
    DivisorClass combo = scale(e.cg, e.beta0_basis_coords[0], e.nef_basis[0]);
    for (size_t i = 1; i < e.nef_basis.size(); ++i)
        combo = add(e.cg, combo, scale(e.cg, e.beta0_basis_coords[i], e.nef_basis[i]));
    require(combo == e.beta0, e.name + ": anticanonical class in the designated basis");

    require(nef_ample_test(e.fan, ws, e.eta) == Positivity::ample, e.name + ": eta ample");
}

CatalogEntry make_p3() {
    CatalogEntry e = shell("p3", p3_fan());
    e.eta = divisor_from_class(e.cg, iv({1}));
    e.nef_basis = {divisor_from_class(e.cg, iv({1}))};
    e.picard_rank = 1;
    e.beta0_basis_coords = iv({4});
    e.eta_zero_regular = true;
    e.eta_minus_one_regular = true;
    e.line_classes = {{Rat(1)}};
    assert_structure(e);
    return e;
}

CatalogEntry make_wp1122() {
    CatalogEntry e = shell("wp1122", wp1122_fan());
    e.eta = divisor_from_class(e.cg, iv({2}));
    e.nef_basis = {divisor_from_class(e.cg, iv({1}))};  // eta_0, the class-group generator
    e.picard_rank = 1;
    e.beta0_basis_coords = iv({6});  // beta_0 = 6 eta_0 = 3 eta
    e.eta_zero_regular = true;
    e.eta_minus_one_regular = false;
    e.line_classes = {{Rat(1, 2)}};  // eta_0 . L = 1/2, so eta . L = 1
    e.hilb_dim_override = Int(3);
    assert_structure(e);

    // the designated eta generates the Picard lattice (index 2 in Cl)
    PicardLattice pic(e.fan, e.cg);
    require(pic.index_in_class_group() == 2, "wp1122: Picard index 2");
    auto pc = pic.coordinates(e.eta.cls);
    require(pc && vec_content(*pc) == 1, "wp1122: eta generates the Picard group");
    require(!cartier_data(e.fan, e.nef_basis[0].coeffs).cartier, "wp1122: eta_0 not Cartier");
    require(cartier_data(e.fan, e.eta.coeffs).cartier, "wp1122: eta Cartier");
    require(cartier_data(e.fan, e.beta0.coeffs).cartier, "wp1122: beta_0 Cartier (Gorenstein)");
    return e;
}

CatalogEntry make_blowup() {
    Fan fan = star_subdivision(p3_fan(), iv({1, 1, 0}));
    fan.name = "blowup-p3-line";
    CatalogEntry e = shell("blowup-p3-line", std::move(fan));
    e.eta = divisor_from_class(e.cg, iv({1, 1}));
    require(e.fan.n_rays() == 5 && e.fan.n_cones() == 6, "blowup-p3-line: 5 rays, 6 cones");
    // eta_1 = pullback hyperplane = [D_2], eta_2 = eta_1 - E = [D_0]
    e.nef_basis = {make_divisor(e.cg, iv({0, 0, 1, 0, 0})), make_divisor(e.cg, iv({1, 0, 0, 0, 0}))};
    e.picard_rank = 2;
    e.beta0_basis_coords = iv({3, 1});  // beta_0 = 3 eta_1 + eta_2
    e.eta_zero_regular = true;
    e.eta_minus_one_regular = false;
    // ell_i . eta_j = 0 iff i = j
    e.line_classes = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    assert_structure(e);
    return e;
}

CatalogEntry make_p1xp2() {
    CatalogEntry e = shell("p1xp2", p1xp2_fan());
    e.eta = divisor_from_class(e.cg, iv({1, 1}));
    // H_1 = plane-factor hyperplane pullback, H_2 = line-factor point pullback
    e.nef_basis = {make_divisor(e.cg, iv({1, 0, 0, 0, 0})), make_divisor(e.cg, iv({0, 0, 0, 1, 0}))};
    e.picard_rank = 2;
    e.beta0_basis_coords = iv({3, 2});
    e.eta_zero_regular = true;
    e.eta_minus_one_regular = false;
    e.line_classes = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    assert_structure(e);
    return e;
}

CatalogEntry make_quadric_resolution() {
    CatalogEntry e = shell("quadric-cone-resolution", quadric_resolution_fan());
    e.eta = divisor_from_class(e.cg, iv({1, 2}));
    // eta_1 = pullback of the quadric polarization = [D_4], eta_2 = the
    // class of the ruling divisors, giving the fibration to the line
    e.nef_basis = {make_divisor(e.cg, iv({0, 0, 0, 0, 1})), make_divisor(e.cg, iv({0, 1, 0, 0, 0}))};
    e.picard_rank = 2;
    e.beta0_basis_coords = iv({3, 0});  // beta_0 = 3 eta_1
    e.eta_zero_regular = true;
    e.eta_minus_one_regular = false;
    e.line_classes = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    e.exceptional_normal_bundle = {Int(-1), Int(-1)};
    assert_structure(e);
    require(e.eta == add(e.cg, e.nef_basis[0], e.nef_basis[1]),
            "quadric-cone-resolution: eta = eta_1 + eta_2");
    // quasi-Fano: beta_0 nef but not ample (trivial on the exceptional curve)
    std::vector<Wall> ws = walls(e.fan);
    require(nef_ample_test(e.fan, ws, e.beta0) == Positivity::nef_not_ample,
            "quadric-cone-resolution: beta_0 nef, not ample");
    SingularSummary sing = singular_locus_summary(e.fan);
    require(sing.smooth, "quadric-cone-resolution: smooth");
    return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"p3", "wp1122", "blowup-p3-line", "p1xp2", "quadric-cone-resolution"};
}

CatalogEntry load_catalog(const std::string& name) {
    if (name == "p3") return make_p3();
    if (name == "wp1122") return make_wp1122();
    if (name == "blowup-p3-line") return make_blowup();
    if (name == "p1xp2") return make_p1xp2();
    if (name == "quadric-cone-resolution") return make_quadric_resolution();
    throw std::invalid_argument("unknown catalog entry: " + name);
}

namespace {

std::vector<Rat> line_pairing(const CatalogEntry& e, const Wall& w) {
    std::vector<Rat> p;
    for (const auto& b : e.nef_basis) p.push_back(intersection_number(e.fan, b, w));
    return p;
}

void push(std::vector<CheckResult>& out, const std::string& entry, const std::string& fact,
          bool pass, const std::string& expected, const std::string& actual) {
    out.push_back({"reference:" + entry + ":" + fact, pass, expected, actual});
}

}  // namespace

std::vector<CheckResult> verify_catalog_entry(const CatalogEntry& e) {
    std::vector<CheckResult> out;
    std::vector<Wall> ws = walls(e.fan);

    // class group rank
    push(out, e.name, "class-group-rank", e.cg.free_rank() == e.picard_rank,
         std::to_string(e.picard_rank), std::to_string(e.cg.free_rank()));

    // anticanonical expression in the designated basis
    {
        DivisorClass combo = scale(e.cg, e.beta0_basis_coords[0], e.nef_basis[0]);
        for (size_t i = 1; i < e.nef_basis.size(); ++i)
            combo = add(e.cg, combo, scale(e.cg, e.beta0_basis_coords[i], e.nef_basis[i]));
        push(out, e.name, "beta0-in-nef-basis", combo == e.beta0, vec_str(e.beta0_basis_coords),
             vec_str(e.beta0.cls));
    }

    // regularity of the designated eta, by the section-count criterion and
    // by the definition independently
    {
        QuickCriteria qc = quick_criteria(e.fan, e.cg, e.eta);
        RegularityVerdict r0 = is_m_regular(e.fan, e.cg, e.eta, e.eta, Int(0));
        RegularityVerdict rm1 = is_m_regular(e.fan, e.cg, e.eta, e.eta, Int(-1));
        bool ok = qc.zero_regular == e.eta_zero_regular &&
                  qc.minus_one_regular == e.eta_minus_one_regular &&
                  r0.passed == e.eta_zero_regular && rm1.passed == e.eta_minus_one_regular;
        push(out, e.name, "eta-regularity", ok,
             std::string("0-regular=") + (e.eta_zero_regular ? "yes" : "no") + ", (-1)-regular=" +
                 (e.eta_minus_one_regular ? "yes" : "no"),
             std::string("0-regular=") + (r0.passed ? "yes" : "no") + ", (-1)-regular=" +
                 (rm1.passed ? "yes" : "no"));
    }

    // line classes under the designated eta
    {
        std::vector<InvariantLine> lines = enumerate_lines(e.fan, e.cg, e.eta);
        std::set<std::vector<Rat>> found;
        for (const auto& l : lines) found.insert(line_pairing(e, l.wall));
        std::set<std::vector<Rat>> expected(e.line_classes.begin(), e.line_classes.end());
        std::string fs, es;
        for (const auto& v : found) fs += rvec_str(v);
        for (const auto& v : expected) es += rvec_str(v);
        push(out, e.name, "line-classes", found == expected, es, fs);

        // intersection table: each expected class realized with the stated
        // pairings against the designated basis
        bool table_ok = found == expected;
        push(out, e.name, "intersection-table", table_ok, es, fs);

        // line-locus codimension n + 1 for n = 0, 1, 2
        bool codim_ok = true;
        std::string actual;
        for (const auto& l : lines) {
            for (long n = 0; n <= 2; ++n) {
                std::optional<Int> hd;
                if (!l.in_smooth_locus) hd = e.hilb_dim_override;
                LineLocusResult r = line_locus_codim(e.fan, e.cg, e.eta, Int(n), l, hd);
                if (r.codim != n + 1) {
                    codim_ok = false;
                    actual = "codim " + r.codim.get_str() + " at n=" + std::to_string(n);
                }
            }
        }
        push(out, e.name, "line-locus-codim", codim_ok, "n+1 for n=0,1,2",
             codim_ok ? "n+1 for n=0,1,2" : actual);

        // restriction rank beta_0.L + n + 1 on smooth-locus lines
        bool restr_ok = true;
        std::string restr_actual = "all match";
        for (const auto& l : lines) {
            if (!l.in_smooth_locus) continue;
            for (long n = 0; n <= 2; ++n) {
                DivisorClass beta = add(e.cg, e.beta0, scale(e.cg, Int(n), e.eta));
                Int rank = restriction_codim(e.fan, e.cg, l.wall, beta);
                Int expect = l.beta0_degree.get_num() + n + 1;
                if (l.beta0_degree.get_den() != 1 || rank != expect) {
                    restr_ok = false;
                    restr_actual = "rank " + rank.get_str() + " vs " + expect.get_str();
                }
            }
        }
        push(out, e.name, "restriction-codim", restr_ok, "beta0.L + n + 1", restr_actual);
    }

    // normal bundle degrees: a + b = beta_0 . C - 2 on smooth-adjacent walls
    {
        bool nb_ok = true;
        int nb_checked = 0;
        for (const Wall& w : ws) {
            Int ma = cone_lattice_index(e.fan, e.fan.max_cones[w.cone_a]);
            Int mb = cone_lattice_index(e.fan, e.fan.max_cones[w.cone_b]);
            if (ma != 1 || mb != 1) continue;
            auto [a, b] = normal_bundle_degrees(e.fan, w);  // asserts the identity
            Rat deg = intersection_number(e.fan, e.beta0, w);
            if (Rat(a + b) != deg - 2) nb_ok = false;
            ++nb_checked;
        }
        push(out, e.name, "normal-bundle-sum", nb_ok && nb_checked > 0,
             "a + b = beta0.C - 2 on smooth walls",
             nb_ok ? std::to_string(nb_checked) + " walls verified" : "mismatch");
    }

    if (e.exceptional_normal_bundle) {
        bool found = false;
        for (const Wall& w : ws) {
            std::vector<Rat> p = line_pairing(e, w);
            bool trivial_on_beta0 = intersection_number(e.fan, e.beta0, w) == 0;
            if (!trivial_on_beta0) continue;
            auto [a, b] = normal_bundle_degrees(e.fan, w);
            if ((a == e.exceptional_normal_bundle->first && b == e.exceptional_normal_bundle->second) ||
                (b == e.exceptional_normal_bundle->first && a == e.exceptional_normal_bundle->second))
                found = true;
        }
        push(out, e.name, "exceptional-curve-normal-bundle", found, "(-1,-1)",
             found ? "(-1,-1)" : "not found");
    }

    if (e.name == "wp1122") {
        SingularSummary sing = singular_locus_summary(e.fan);
        int mult2 = 0;
        for (const Int& m : sing.max_cone_mult)
            if (m == 2) ++mult2;
        Int wall2 = 0;
        for (const Int& m : sing.wall_mult)
            if (m == 2) ++wall2;
        push(out, e.name, "singular-locus", mult2 == 2 && wall2 == 1,
             "two max cones of multiplicity 2, one singular wall",
             std::to_string(mult2) + " cones, " + wall2.get_str() + " wall");
    }

    return out;
}

std::vector<ClassificationRow> catalog_classification(const std::vector<CatalogEntry>& entries,
                                                      int bound) {
    std::vector<ClassificationRow> rows;
    for (const auto& e : entries) {
        ClassificationRow row;
        row.entry = e.name;
        std::vector<Wall> ws = walls(e.fan);
        PicardLattice pic(e.fan, e.cg);
        std::vector<DivisorClass> basis = picard_nef_basis(e.fan, e.cg);
        const int f = static_cast<int>(basis.size());

        std::vector<Int> cur(f, Int(0));
        while (true) {
            DivisorClass d = scale(e.cg, cur[0], basis[0]);
            for (int i = 1; i < f; ++i) d = add(e.cg, d, scale(e.cg, cur[i], basis[i]));
            bool all_zero = std::all_of(cur.begin(), cur.end(), [](const Int& x) { return x == 0; });
            if (!all_zero && nef_ample_test(e.fan, ws, d) == Positivity::ample &&
                pic.is_primitive(d.cls)) {
                QuickCriteria qc = quick_criteria(e.fan, e.cg, d);
                if (qc.zero_regular) {
                    row.has_zero_regular_ample = true;
                    row.zero_regular_witnesses.push_back(cur);
                }
                if (qc.minus_one_regular) {
                    row.has_minus_one_regular_ample = true;
                    row.minus_one_regular_witnesses.push_back(cur);
                }
            }
            int pos = f - 1;
            while (pos >= 0) {
                ++cur[pos];
                if (cur[pos] <= bound) break;
                cur[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace nltoric
