#include "nltoric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nltoric {

namespace {

std::string ray_str(const std::vector<Int>& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

std::string cone_str(const std::vector<int>& c) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

IMat cone_matrix(const Fan& fan, const std::vector<int>& cone) {
    IMat m(fan.dim, static_cast<int>(cone.size()));
    for (size_t j = 0; j < cone.size(); ++j)
        for (int i = 0; i < fan.dim; ++i) m(i, static_cast<int>(j)) = fan.rays[cone[j]][i];
    return m;
}

// barycentric coordinates of x in the simplicial cone; empty if singular
bool cone_coords(const Fan& fan, int cone, const std::vector<Rat>& x, std::vector<Rat>& lam) {
    const auto& c = fan.max_cones[cone];
    QMat a(fan.dim, fan.dim);
    for (int j = 0; j < fan.dim; ++j)
        for (int i = 0; i < fan.dim; ++i) a(i, j) = Rat(fan.rays[c[j]][i]);
    return solve_rational(a, x, lam);
}

}  // namespace

bool cone_contains(const Fan& fan, int cone, const std::vector<Rat>& x, bool strict_interior) {
    std::vector<Rat> lam;
    if (!cone_coords(fan, cone, x, lam)) return false;
    for (const Rat& l : lam) {
        if (strict_interior ? (l <= 0) : (l < 0)) return false;
    }
    return true;
}

Int cone_lattice_index(const Fan& fan, const std::vector<int>& ray_indices) {
    IMat m(static_cast<int>(ray_indices.size()), fan.dim);
    for (size_t i = 0; i < ray_indices.size(); ++i)
        for (int j = 0; j < fan.dim; ++j) m(static_cast<int>(i), j) = fan.rays[ray_indices[i]][j];
    SnfResult snf = smith_normal_form(m);
    if (snf.rank != static_cast<int>(ray_indices.size()))
        throw std::invalid_argument("cone_lattice_index: rays are linearly dependent");
    Int idx = 1;
    for (int i = 0; i < snf.rank; ++i) idx *= snf.d(i, i);
    return idx;
}

ValidationReport validate_fan(const Fan& fan) {
    ValidationReport rep;
    const int r = fan.dim;
    if (r < 2) {
        rep.issues.push_back({"bad-dimension", "fan dimension must be >= 2"});
        return rep;
    }

    for (int i = 0; i < fan.n_rays(); ++i) {
        const auto& u = fan.rays[i];
        if (static_cast<int>(u.size()) != r) {
            rep.issues.push_back({"bad-ray", "ray " + std::to_string(i) + " has wrong length"});
            return rep;
        }
        Int g = vec_content(u);
        if (g == 0)
            rep.issues.push_back({"zero-ray", "ray " + std::to_string(i)});
        else if (g != 1)
            rep.issues.push_back({"non-primitive-ray",
                                  "ray " + std::to_string(i) + " = " + ray_str(u) +
                                      " has content " + g.get_str()});
        for (int j = 0; j < i; ++j)
            if (fan.rays[j] == u)
                rep.issues.push_back({"duplicate-ray",
                                      "rays " + std::to_string(j) + " and " + std::to_string(i)});
    }

    for (int c = 0; c < fan.n_cones(); ++c) {
        const auto& cone = fan.max_cones[c];
        if (static_cast<int>(cone.size()) != r) {
            rep.issues.push_back({"non-simplicial-cone",
                                  "cone " + std::to_string(c) + " has " +
                                      std::to_string(cone.size()) + " rays, expected " +
                                      std::to_string(r)});
            continue;
        }
        std::set<int> dedup(cone.begin(), cone.end());
        if (static_cast<int>(dedup.size()) != r ||
            *dedup.begin() < 0 || *dedup.rbegin() >= fan.n_rays()) {
            rep.issues.push_back({"bad-cone-indices", "cone " + std::to_string(c)});
            continue;
        }
        IMat m = cone_matrix(fan, cone);
        Int det = determinant(m);
        if (det == 0) {
            rep.issues.push_back({"degenerate-cone",
                                  "cone " + std::to_string(c) + " = " + cone_str(cone) +
                                      " has linearly dependent rays"});
            rep.cone_multiplicities.push_back(0);
        } else {
            rep.cone_multiplicities.push_back(abs(det));
        }
    }
    if (!rep.issues.empty()) return rep;

    // pseudo-manifold: every facet of a max cone lies in exactly two cones
    std::map<std::vector<int>, std::vector<int>> facet_cones;
    for (int c = 0; c < fan.n_cones(); ++c) {
        std::vector<int> cone = fan.max_cones[c];
        std::sort(cone.begin(), cone.end());
        for (int skip = 0; skip < r; ++skip) {
            std::vector<int> facet;
            for (int k = 0; k < r; ++k)
                if (k != skip) facet.push_back(cone[k]);
            facet_cones[facet].push_back(c);
        }
    }
    std::vector<std::set<int>> adj(fan.n_cones());
    for (const auto& [facet, cones] : facet_cones) {
        if (cones.size() == 1)
            rep.issues.push_back({"dangling-wall",
                                  "face " + cone_str(facet) + " lies only in cone " +
                                      std::to_string(cones[0])});
        else if (cones.size() > 2)
            rep.issues.push_back({"overbooked-wall",
                                  "face " + cone_str(facet) + " lies in " +
                                      std::to_string(cones.size()) + " cones"});
        else {
            adj[cones[0]].insert(cones[1]);
            adj[cones[1]].insert(cones[0]);
        }
    }
    if (!rep.issues.empty()) return rep;

    // connectivity of the adjacency graph
    std::vector<bool> seen(fan.n_cones(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int d : adj[c])
            if (!seen[d]) {
                seen[d] = true;
                stack.push_back(d);
            }
    }
    for (int c = 0; c < fan.n_cones(); ++c)
        if (!seen[c])
            rep.issues.push_back({"disconnected", "cone " + std::to_string(c) +
                                                      " unreachable from cone 0"});
    if (!rep.issues.empty()) return rep;

    // randomized coverage sample; the seed is fixed so reports reproduce
    std::mt19937_64 rng(0x746f726963ULL);
    const Int range(20);
    int checked = 0;
    while (checked < 1000) {
        std::vector<Rat> x(r);
        bool zero = true;
        for (int i = 0; i < r; ++i) {
            long v = static_cast<long>(rng() % 41) - 20;
            x[i] = Rat(v);
            if (v != 0) zero = false;
        }
        if (zero) continue;
        ++checked;
        int inside = -1;
        std::vector<int> interior_hits;
        for (int c = 0; c < fan.n_cones(); ++c) {
            if (inside < 0 && cone_contains(fan, c, x, false)) inside = c;
            if (cone_contains(fan, c, x, true)) interior_hits.push_back(c);
        }
        if (inside < 0) {
            std::ostringstream os;
            os << "sample point (";
            for (int i = 0; i < r; ++i) os << (i ? "," : "") << x[i];
            os << ") lies in no cone";
            rep.issues.push_back({"coverage-gap", os.str()});
            break;
        }
        if (interior_hits.size() > 1) {
            rep.issues.push_back({"overlapping-cones",
                                  "interior point shared by cones " +
                                      std::to_string(interior_hits[0]) + " and " +
                                      std::to_string(interior_hits[1])});
            break;
        }
    }

    rep.valid = rep.issues.empty();
    return rep;
}

std::vector<Wall> walls(const Fan& fan) {
    const int r = fan.dim;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facet_map;  // facet -> (cone, off-ray)
    for (int c = 0; c < fan.n_cones(); ++c) {
        std::vector<int> cone = fan.max_cones[c];
        std::sort(cone.begin(), cone.end());
        for (int skip = 0; skip < r; ++skip) {
            std::vector<int> facet;
            for (int k = 0; k < r; ++k)
                if (k != skip) facet.push_back(cone[k]);
            facet_map[facet].push_back({c, cone[skip]});
        }
    }

    std::vector<Wall> out;
    for (const auto& [facet, touching] : facet_map) {
        if (touching.size() != 2)
            throw std::invalid_argument("walls: fan is not a pseudo-manifold (validate first)");
        Wall w;
        w.wall_rays = facet;
        auto [ca, oa] = touching[0];
        auto [cb, ob] = touching[1];
        if (ca > cb) { std::swap(ca, cb); std::swap(oa, ob); }
        w.cone_a = ca; w.cone_b = cb; w.off_a = oa; w.off_b = ob;

        // kernel of the dim x (dim+1) matrix [u_a | u_b | wall rays]
        std::vector<int> cols{w.off_a, w.off_b};
        cols.insert(cols.end(), facet.begin(), facet.end());
        IMat m(r, static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < r; ++i) m(i, static_cast<int>(j)) = fan.rays[cols[j]][i];
        IMat ker = integer_kernel(m);
        if (ker.cols() != 1)
            throw std::invalid_argument("walls: wall relation is not unique; degenerate fan");
        std::vector<Int> rel(cols.size());
        for (size_t i = 0; i < cols.size(); ++i) rel[i] = ker(static_cast<int>(i), 0);
        make_primitive(rel);
        if (rel[0] < 0)
            for (Int& x : rel) x = -x;
        if (rel[0] <= 0 || rel[1] <= 0)
            throw std::invalid_argument("walls: off-wall coefficients not positive; degenerate fan");
        w.lambda_a = rel[0];
        w.lambda_b = rel[1];
        w.mu.assign(rel.begin() + 2, rel.end());
        w.lattice_index = cone_lattice_index(fan, facet);
        out.push_back(std::move(w));
    }
    return out;
}

SingularSummary singular_locus_summary(const Fan& fan) {
    SingularSummary s;
    for (const auto& cone : fan.max_cones)
        s.max_cone_mult.push_back(cone_lattice_index(fan, cone));
    for (const Wall& w : walls(fan)) s.wall_mult.push_back(w.lattice_index);
    s.smooth = true;
    for (const Int& m : s.max_cone_mult)
        if (m != 1) s.smooth = false;
    return s;
}

Fan star_subdivision(const Fan& fan, const std::vector<Int>& new_ray) {
    if (vec_content(new_ray) != 1)
        throw std::invalid_argument("star_subdivision: new ray must be primitive");
    for (const auto& u : fan.rays)
        if (u == new_ray)
            throw std::invalid_argument("star_subdivision: ray already present: " + ray_str(new_ray));

    std::vector<Rat> x(fan.dim);
    for (int i = 0; i < fan.dim; ++i) x[i] = Rat(new_ray[i]);

    Fan out;
    out.dim = fan.dim;
    out.rays = fan.rays;
    out.rays.push_back(new_ray);
    const int nr = fan.n_rays();  // index of the new ray

    bool hit = false;
    for (int c = 0; c < fan.n_cones(); ++c) {
        std::vector<Rat> lam;
        if (!cone_coords(fan, c, x, lam))
            throw std::invalid_argument("star_subdivision: degenerate cone");
        bool inside = true;
        for (const Rat& l : lam)
            if (l < 0) inside = false;
        if (!inside) {
            out.max_cones.push_back(fan.max_cones[c]);
            continue;
        }
        hit = true;
        // replace by cones over the facets whose barycentric coordinate is
        // nonzero (facets containing the new ray are dropped)
        const auto& cone = fan.max_cones[c];
        for (int skip = 0; skip < fan.dim; ++skip) {
            if (lam[skip] == 0) continue;
            std::vector<int> nc;
            for (int k = 0; k < fan.dim; ++k)
                if (k != skip) nc.push_back(cone[k]);
            nc.push_back(nr);
            std::sort(nc.begin(), nc.end());
            out.max_cones.push_back(nc);
        }
    }
    if (!hit)
        throw std::invalid_argument("star_subdivision: ray " + ray_str(new_ray) +
                                    " lies outside the support of the fan");
    out.name = fan.name.empty() ? "subdivision" : fan.name + "-star";
    return out;
}

}  // namespace nltoric
