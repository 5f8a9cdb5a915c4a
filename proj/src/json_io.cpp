#include "nltoric/json_io.hpp"

#include <fstream>

namespace nltoric {

const char* const kArtifactVersion = "0.1.0";

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());  // decimal string beyond 64 bits
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an exact integer, got: " + j.dump());
}

json rat_to_json(const Rat& q_in) {
    Rat q = q_in;
    q.canonicalize();
    if (q.get_den() == 1) return int_to_json(q.get_num());
    return json{{"num", int_to_json(q.get_num())}, {"den", int_to_json(q.get_den())}};
}

json ivec_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> ivec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

json rvec_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}

json fan_to_json(const Fan& fan) {
    json j;
    j["dim"] = fan.dim;
    j["rays"] = json::array();
    for (const auto& r : fan.rays) j["rays"].push_back(ivec_to_json(r));
    j["max_cones"] = fan.max_cones;
    if (!fan.name.empty()) j["name"] = fan.name;
    return j;
}

Fan fan_from_json(const json& j) {
    Fan fan;
    fan.dim = j.at("dim").get<int>();
    for (const auto& r : j.at("rays")) fan.rays.push_back(ivec_from_json(r));
    fan.max_cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
    if (j.contains("name")) fan.name = j["name"].get<std::string>();
    return fan;
}

Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fan file: " + path);
    json j;
    in >> j;
    return fan_from_json(j);
}

json divisor_to_json(const DivisorClass& d) {
    json j;
    j["ray_coeffs"] = ivec_to_json(d.coeffs);
    j["class"] = ivec_to_json(d.cls);
    if (!d.tors.empty()) j["torsion"] = ivec_to_json(d.tors);
    return j;
}

json polynomial_to_json(const CoxPolynomial& f) {
    json j;
    j["degree"] = divisor_to_json(f.degree);
    j["terms"] = json::array();
    for (const auto& [e, c] : f.terms) {
        json t;
        t["exps"] = ivec_to_json(e);
        t["num"] = int_to_json(c.get_num());
        t["den"] = int_to_json(c.get_den());
        j["terms"].push_back(t);
    }
    if (!f.quasi_smoothness.empty()) j["quasi_smoothness"] = f.quasi_smoothness;
    return j;
}

CoxPolynomial polynomial_from_json(const ClassGroup& cg, const json& j) {
    CoxPolynomial f;
    f.degree = make_divisor(cg, ivec_from_json(j.at("degree").at("ray_coeffs")));
    for (const auto& t : j.at("terms")) {
        Rat c(int_from_json(t.at("num")), int_from_json(t.at("den")));
        c.canonicalize();
        f.terms[ivec_from_json(t.at("exps"))] = c;
    }
    if (j.contains("quasi_smoothness")) f.quasi_smoothness = j["quasi_smoothness"];
    return f;
}

json cohomology_to_json(const CohomologyTable& t) {
    json j;
    j["h"] = ivec_to_json(t.h);
    j["chambers"] = json::array();
    for (const auto& c : t.chambers) {
        json cj;
        std::vector<int> violated;
        for (int i = 0; i < 32; ++i)
            if (c.violated_mask & (1u << i)) violated.push_back(i);
        cj["violated_rays"] = violated;
        cj["reduced_betti"] = ivec_to_json(c.reduced_betti);
        cj["lattice_points"] = int_to_json(c.lattice_count);
        j["chambers"].push_back(cj);
    }
    return j;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
    json j = json::array();
    for (const auto& r : results) {
        json e;
        e["id"] = r.id;
        e["pass"] = r.pass;
        e["expected"] = r.expected;
        e["actual"] = r.actual;
        j.push_back(e);
    }
    return j;
}

namespace {

json hypotheses_to_json(const std::vector<HypothesisCheck>& hs) {
    json j = json::array();
    for (const auto& h : hs) {
        json e;
        e["name"] = h.name;
        e["status"] = h.status == HypothesisCheck::pass
                          ? "pass"
                          : (h.status == HypothesisCheck::pass_window ? "pass-window" : "fail");
        if (!h.note.empty()) e["note"] = h.note;
        j.push_back(e);
    }
    return j;
}

}  // namespace

json bound_report_to_json(const BoundReport& rep) {
    json j;
    j["fan"] = rep.fan_name;
    j["eta_class"] = ivec_to_json(rep.eta_class);
    j["n"] = int_to_json(rep.n);
    j["beta_class"] = ivec_to_json(rep.beta_class);
    j["hypotheses"] = hypotheses_to_json(rep.hypotheses);
    j["routes_fired"] = rep.routes_fired;
    if (rep.has_lower) {
        j["lower_bound"] = int_to_json(rep.lower_bound);
        j["lower_route"] = rep.lower_route;
    }
    j["upper_bound"] = int_to_json(rep.upper_bound);
    j["upper_rule"] = "h0(n.eta)";
    return j;
}

json syzygy_report_to_json(const SyzygyReport& rep) {
    json j;
    j["hypotheses"] = hypotheses_to_json(rep.hypotheses);
    j["hypotheses_ok"] = rep.hypotheses_ok;
    j["all_zero_in_range"] = rep.all_zero_in_range;
    j["table"] = json::array();
    for (const auto& e : rep.table) {
        json t;
        t["q"] = e.q;
        t["k"] = int_to_json(e.k);
        t["in_range"] = e.in_range;
        if (e.determined)
            t["value"] = int_to_json(e.value);
        else
            t["value"] = "indeterminate";
        t["via"] = e.via;
        j["table"].push_back(t);
    }
    return j;
}

json oda_report_to_json(const OdaWindowReport& rep) {
    json j;
    j["bound"] = rep.bound;
    j["window_basis"] = json::array();
    for (const auto& b : rep.window_basis) j["window_basis"].push_back(ivec_to_json(b));
    j["pairs_checked"] = rep.pairs_checked;
    j["status"] = rep.all_pass() ? "verified-on-window" : "failed";
    j["failures"] = json::array();
    for (const auto& f : rep.failures) {
        json e;
        e["alpha1"] = ivec_to_json(f.alpha1_coords);
        e["alpha2"] = ivec_to_json(f.alpha2_coords);
        e["witness"] = ivec_to_json(f.witness);
        j["failures"].push_back(e);
    }
    return j;
}

json lines_to_json(const std::vector<InvariantLine>& lines) {
    json j = json::array();
    for (const auto& l : lines) {
        json e;
        e["wall_rays"] = l.wall.wall_rays;
        e["adjacent_cones"] = {l.wall.cone_a, l.wall.cone_b};
        e["nef_pairing"] = rvec_to_json(l.nef_pairing);
        e["beta0_degree"] = rat_to_json(l.beta0_degree);
        e["in_smooth_locus"] = l.in_smooth_locus;
        j.push_back(e);
    }
    return j;
}

json validation_to_json(const ValidationReport& rep) {
    json j;
    j["valid"] = rep.valid;
    j["issues"] = json::array();
    for (const auto& i : rep.issues) j["issues"].push_back({{"kind", i.kind}, {"detail", i.detail}});
    j["cone_multiplicities"] = ivec_to_json(rep.cone_multiplicities);
    return j;
}

json make_report(const std::string& command, json inputs, json results, std::uint64_t seed) {
    json j;
    j["artifact_version"] = kArtifactVersion;
    j["command"] = command;
    j["seed"] = seed;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    return j;
}

}  // namespace nltoric
