// Command-line front end: every subcommand prints a single JSON report to
// stdout. Exit codes: 0 success, 2 hypothesis failure (computation fine,
// theorem not applicable), 1 error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "nltoric/json_io.hpp"
#include "nltoric/parallel.hpp"

using namespace nltoric;

namespace {

struct FanContext {
    Fan fan;
    ClassGroup cg;
    std::optional<CatalogEntry> entry;
    std::vector<std::vector<Int>> nef_basis_classes;  // designated or computed
};

FanContext load_context(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        CatalogEntry e = load_catalog(spec.substr(8));
        FanContext ctx{e.fan, e.cg, e, {}};
        for (const auto& b : e.nef_basis) ctx.nef_basis_classes.push_back(b.cls);
        return ctx;
    }
    Fan fan = load_fan_file(spec);
    ValidationReport vr = validate_fan(fan);
    if (!vr.valid) {
        std::string msg = "fan file failed validation";
        if (!vr.issues.empty()) msg += ": " + vr.issues.front().kind;
        throw std::invalid_argument(msg);
    }
    FanContext ctx{fan, ClassGroup(fan), std::nullopt, {}};
    if (ctx.cg.torsion().empty() && ctx.cg.free_rank() <= 3)
        ctx.nef_basis_classes = nef_cone_generators(fan, ctx.cg, walls(fan));
    return ctx;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> v;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) v.emplace_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return v;
}

DivisorClass divisor_in_nef_basis(const FanContext& ctx, const std::vector<Int>& coords) {
    if (ctx.nef_basis_classes.empty())
        throw std::invalid_argument("no nef basis available; pass ray coefficients instead");
    if (coords.size() != ctx.nef_basis_classes.size())
        throw std::invalid_argument("nef-basis coordinate count mismatch");
    std::vector<Int> cls(ctx.cg.free_rank(), Int(0));
    for (size_t i = 0; i < coords.size(); ++i)
        for (int j = 0; j < ctx.cg.free_rank(); ++j)
            cls[j] += coords[i] * ctx.nef_basis_classes[i][j];
    return divisor_from_class(ctx.cg, cls);
}

// Divisor syntax: "[a,b,..]" ray coefficients, '{"nef_basis":[..]}' /
// '{"ray_coeffs":[..]}' / '{"class":[..]}' JSON, or "a,b" nef-basis coords.
DivisorClass parse_divisor(const FanContext& ctx, const std::string& s) {
    if (!s.empty() && s[0] == '[')
        return make_divisor(ctx.cg, ivec_from_json(json::parse(s)));
    if (!s.empty() && s[0] == '{') {
        json j = json::parse(s);
        if (j.contains("ray_coeffs")) return make_divisor(ctx.cg, ivec_from_json(j["ray_coeffs"]));
        if (j.contains("class")) return divisor_from_class(ctx.cg, ivec_from_json(j["class"]));
        if (j.contains("nef_basis")) return divisor_in_nef_basis(ctx, ivec_from_json(j["nef_basis"]));
        throw std::invalid_argument("divisor object needs ray_coeffs, class or nef_basis");
    }
    return divisor_in_nef_basis(ctx, parse_int_list(s));
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> v;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                Rat q(cur);
                q.canonicalize();
                v.push_back(q);
            }
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return v;
}

int emit(const json& report, bool pretty, int code = 0) {
    if (pretty)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"exact toric threefold calculator"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string fan_spec;
    bool pretty = false;
    std::uint64_t seed = 0;
    app.add_option("--fan", fan_spec, "fan JSON file or catalog:<name>");
    app.add_flag("--pretty", pretty, "indented JSON output");
    app.add_option("--seed", seed, "seed for random sections");

    std::string divisor_s, eta_s, beta_s, g1_s, g2_s, section_s = "none", line_class_s,
                hilb_s = "auto", entry_s, subject_s;
    long n_value = 0;
    int bound = 3;
    long m_value = 0;
    long kmin = -2, kmax = 3;

    auto* c_validate = app.add_subcommand("validate", "structural fan validation");
    auto* c_classgroup = app.add_subcommand("classgroup", "class group, Picard lattice, bases");
    auto* c_cones = app.add_subcommand("cones", "walls, curve classes, nef and Mori generators");
    auto* c_cohomology = app.add_subcommand("cohomology", "graded cohomology of a divisor class");
    c_cohomology->add_option("--divisor", divisor_s, "divisor")->required();
    auto* c_regularity = app.add_subcommand("regularity", "regularity of classes");
    c_regularity->add_option("--eta", eta_s, "ample reference class")->required();
    c_regularity->add_option("--subject", subject_s, "subject class (default eta)");
    c_regularity->add_option("--m", m_value, "regularity level (default 0)");
    auto* c_oda = app.add_subcommand("oda", "windowed Minkowski decomposition check");
    c_oda->add_option("--bound", bound, "coefficient window bound (default 3)");
    auto* c_multmap = app.add_subcommand("multmap", "multiplication map surjectivity");
    c_multmap->add_option("--g1", g1_s, "first degree")->required();
    c_multmap->add_option("--g2", g2_s, "second degree")->required();
    c_multmap->add_option("--section", section_s, "none | fermat | random");
    auto* c_nl = app.add_subcommand("nl-bounds", "codimension bounds with hypothesis ledger");
    c_nl->add_option("--eta", eta_s, "ample primitive Cartier class")->required();
    c_nl->add_option("--n", n_value, "n with beta = beta_0 + n eta")->required();
    c_nl->add_option("--bound", bound, "window bound for the Oda hypothesis");
    auto* c_lines = app.add_subcommand("lines", "torus-invariant curves of eta-degree 1");
    c_lines->add_option("--eta", eta_s, "ample class")->required();
    auto* c_line_locus = app.add_subcommand("line-locus", "codimension of surfaces through a curve");
    c_line_locus->add_option("--eta", eta_s, "ample class")->required();
    c_line_locus->add_option("--n", n_value, "n with beta = beta_0 + n eta")->required();
    c_line_locus->add_option("--line-class", line_class_s, "curve class pairing, e.g. 0,1")->required();
    c_line_locus->add_option("--hilb", hilb_s, "auto or an explicit Hilbert dimension");
    auto* c_syzygy = app.add_subcommand("syzygy-check", "dimension chase for the syzygy bundle");
    c_syzygy->add_option("--beta", beta_s, "nef Cartier class")->required();
    c_syzygy->add_option("--eta", eta_s, "ample class")->required();
    c_syzygy->add_option("--kmin", kmin, "lowest twist (default -2)");
    c_syzygy->add_option("--kmax", kmax, "highest twist (default 3)");
    auto* c_verify = app.add_subcommand("verify-catalog", "run all reference expectations");
    c_verify->add_option("--entry", entry_s, "single entry (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_verify->parsed()) {
            std::vector<std::string> names =
                entry_s.empty() ? catalog_names() : std::vector<std::string>{entry_s};
            json results = json::array();
            bool all_pass = true;
            for (const auto& name : names) {
                CatalogEntry e = load_catalog(name);
                for (const auto& r : verify_catalog_entry(e)) {
                    json rj;
                    rj["id"] = r.id;
                    rj["pass"] = r.pass;
                    rj["expected"] = r.expected;
                    rj["actual"] = r.actual;
                    results.push_back(rj);
                    if (!r.pass) all_pass = false;
                }
            }
            json rep = make_report("verify-catalog", json{{"entries", names}},
                                   json{{"checks", results}, {"all_pass", all_pass}}, seed);
            return emit(rep, pretty, all_pass ? 0 : 1);
        }

        if (c_validate->parsed()) {
            // report structural issues instead of refusing to load
            Fan fan = fan_spec.rfind("catalog:", 0) == 0 ? load_catalog(fan_spec.substr(8)).fan
                                                         : load_fan_file(fan_spec);
            ValidationReport vr = validate_fan(fan);
            json res = validation_to_json(vr);
            if (vr.valid) {
                SingularSummary sing = singular_locus_summary(fan);
                res["wall_multiplicities"] = ivec_to_json(sing.wall_mult);
                res["smooth"] = sing.smooth;
            }
            return emit(make_report("validate", json{{"fan", fan_spec}}, res, seed), pretty,
                        vr.valid ? 0 : 1);
        }

        FanContext ctx = load_context(fan_spec);
        json inputs;
        inputs["fan"] = fan_spec;

        if (c_classgroup->parsed()) {
            json res;
            res["free_rank"] = ctx.cg.free_rank();
            res["torsion"] = ivec_to_json(ctx.cg.torsion());
            json degs = json::array();
            for (int i = 0; i < ctx.fan.n_rays(); ++i) {
                std::vector<Int> e(ctx.fan.n_rays(), Int(0));
                e[i] = 1;
                degs.push_back(ivec_to_json(ctx.cg.project_free(e)));
            }
            res["ray_divisor_classes"] = degs;
            res["anticanonical_class"] = ivec_to_json(anticanonical_class(ctx.cg).cls);
            if (!ctx.nef_basis_classes.empty()) {
                json nb = json::array();
                for (const auto& b : ctx.nef_basis_classes) nb.push_back(ivec_to_json(b));
                res["nef_basis"] = nb;
            }
            if (ctx.cg.torsion().empty()) {
                PicardLattice pic(ctx.fan, ctx.cg);
                json pb = json::array();
                for (int i = 0; i < pic.basis().rows(); ++i) {
                    std::vector<Int> row(pic.basis().cols());
                    for (int j = 0; j < pic.basis().cols(); ++j) row[j] = pic.basis()(i, j);
                    pb.push_back(ivec_to_json(row));
                }
                res["picard_basis"] = pb;
                res["picard_index"] = int_to_json(pic.index_in_class_group());
            }
            return emit(make_report("classgroup", inputs, res, seed), pretty);
        }

        if (c_cones->parsed()) {
            std::vector<Wall> ws = walls(ctx.fan);
            json res;
            json wj = json::array();
            for (const Wall& w : ws) {
                json e;
                e["wall_rays"] = w.wall_rays;
                e["cones"] = {w.cone_a, w.cone_b};
                e["off_rays"] = {w.off_a, w.off_b};
                std::vector<Int> rel{w.lambda_a, w.lambda_b};
                rel.insert(rel.end(), w.mu.begin(), w.mu.end());
                e["relation"] = ivec_to_json(rel);
                e["lattice_index"] = int_to_json(w.lattice_index);
                e["curve_class"] = rvec_to_json(wall_curve_class(ctx.fan, ctx.cg, w));
                wj.push_back(e);
            }
            res["walls"] = wj;
            json nef = json::array(), mori = json::array();
            for (const auto& g : nef_cone_generators(ctx.fan, ctx.cg, ws))
                nef.push_back(ivec_to_json(g));
            for (const auto& g : mori_generators(ctx.fan, ctx.cg, ws))
                mori.push_back(ivec_to_json(g));
            res["nef_generators"] = nef;
            res["mori_generators"] = mori;
            return emit(make_report("cones", inputs, res, seed), pretty);
        }

        if (c_cohomology->parsed()) {
            DivisorClass d = parse_divisor(ctx, divisor_s);
            inputs["divisor"] = divisor_to_json(d);
            CohomologyTable t = graded_cohomology(ctx.fan, d);
            return emit(make_report("cohomology", inputs, cohomology_to_json(t), seed), pretty);
        }

        if (c_regularity->parsed()) {
            DivisorClass eta = parse_divisor(ctx, eta_s);
            DivisorClass subject = subject_s.empty() ? eta : parse_divisor(ctx, subject_s);
            inputs["eta"] = divisor_to_json(eta);
            inputs["subject"] = divisor_to_json(subject);
            inputs["m"] = m_value;
            json res;
            QuickCriteria qc = quick_criteria(ctx.fan, ctx.cg, eta);
            res["eta_zero_regular"] = qc.zero_regular;
            res["eta_minus_one_regular"] = qc.minus_one_regular;
            RegularityVerdict v = is_m_regular(ctx.fan, ctx.cg, subject, eta, Int(m_value));
            res["subject_m_regular"] = v.passed;
            if (!v.passed) {
                res["failing_q"] = v.failing_q;
                res["failing_twist"] = ivec_to_json(v.failing_twist->cls);
                res["failing_h"] = int_to_json(v.failing_value);
            }
            return emit(make_report("regularity", inputs, res, seed), pretty);
        }

        if (c_oda->parsed()) {
            inputs["bound"] = bound;
            OdaWindowReport rep = oda_window_check(ctx.fan, ctx.cg, bound);
            return emit(make_report("oda", inputs, oda_report_to_json(rep), seed), pretty,
                        rep.all_pass() ? 0 : 2);
        }

        if (c_multmap->parsed()) {
            DivisorClass g1 = parse_divisor(ctx, g1_s);
            DivisorClass g2 = parse_divisor(ctx, g2_s);
            inputs["g1"] = divisor_to_json(g1);
            inputs["g2"] = divisor_to_json(g2);
            inputs["section"] = section_s;
            std::optional<CoxPolynomial> f;
            if (section_s == "fermat")
                f = fermat_section(ctx.fan, ctx.cg, g1);
            else if (section_s == "random")
                f = random_section(ctx.fan, ctx.cg, g1, seed);
            else if (section_s != "none")
                throw std::invalid_argument("--section must be none, fermat or random");
            MultMapResult mm = mult_map_surjective(ctx.fan, ctx.cg, f, g1, g2);
            json res;
            res["surjective"] = mm.surjective;
            res["cokernel_dim"] = int_to_json(mm.cokernel_dim);
            if (f) res["section"] = polynomial_to_json(*f);
            return emit(make_report("multmap", inputs, res, seed), pretty);
        }

        if (c_nl->parsed()) {
            DivisorClass eta = parse_divisor(ctx, eta_s);
            inputs["eta"] = divisor_to_json(eta);
            inputs["n"] = n_value;
            BoundReport rep = nl_bounds(ctx.fan, ctx.cg, eta, Int(n_value), bound);
            return emit(make_report("nl-bounds", inputs, bound_report_to_json(rep), seed), pretty,
                        rep.has_lower ? 0 : 2);
        }

        if (c_lines->parsed()) {
            DivisorClass eta = parse_divisor(ctx, eta_s);
            inputs["eta"] = divisor_to_json(eta);
            auto lines = enumerate_lines(ctx.fan, ctx.cg, eta);
            return emit(make_report("lines", inputs, json{{"lines", lines_to_json(lines)}}, seed),
                        pretty);
        }

        if (c_line_locus->parsed()) {
            DivisorClass eta = parse_divisor(ctx, eta_s);
            inputs["eta"] = divisor_to_json(eta);
            inputs["n"] = n_value;
            inputs["line_class"] = line_class_s;
            std::vector<Rat> want = parse_rat_list(line_class_s);
            std::optional<InvariantLine> chosen;
            for (const Wall& w : walls(ctx.fan)) {
                InvariantLine l = invariant_curve(ctx.fan, ctx.cg, w);
                std::vector<Rat> pairing;
                for (const auto& b : ctx.nef_basis_classes)
                    pairing.push_back(
                        intersection_number(ctx.fan, divisor_from_class(ctx.cg, b), w));
                if (pairing == want) { chosen = l; break; }
            }
            if (!chosen) throw std::invalid_argument("no wall curve with the requested class");
            std::optional<Int> hilb;
            if (hilb_s != "auto")
                hilb = Int(hilb_s);
            else if (!chosen->in_smooth_locus && ctx.entry && ctx.entry->hilb_dim_override)
                hilb = ctx.entry->hilb_dim_override;
            LineLocusResult r = line_locus_codim(ctx.fan, ctx.cg, eta, Int(n_value), *chosen, hilb);
            json res;
            res["codim"] = int_to_json(r.codim);
            res["hilb_dim_used"] = int_to_json(r.hilb_dim_used);
            res["assumptions"] = r.assumptions;
            res["in_smooth_locus"] = chosen->in_smooth_locus;
            return emit(make_report("line-locus", inputs, res, seed), pretty);
        }

        if (c_syzygy->parsed()) {
            DivisorClass beta = parse_divisor(ctx, beta_s);
            DivisorClass eta = parse_divisor(ctx, eta_s);
            inputs["beta"] = divisor_to_json(beta);
            inputs["eta"] = divisor_to_json(eta);
            inputs["k_range"] = {kmin, kmax};
            SyzygyReport rep = syzygy_vanishing_check(ctx.fan, ctx.cg, beta, eta, Int(kmin), Int(kmax));
            return emit(make_report("syzygy-check", inputs, syzygy_report_to_json(rep), seed),
                        pretty, rep.hypotheses_ok ? 0 : 2);
        }

        throw std::invalid_argument("no subcommand selected");
    } catch (const std::exception& ex) {
        json err;
        err["error"] = ex.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
}
