#include "nltoric/divisor.hpp"

#include <algorithm>
#include <set>

namespace nltoric {

namespace {

IMat ray_matrix(const Fan& fan) {
    IMat b(fan.n_rays(), fan.dim);
    for (int i = 0; i < fan.n_rays(); ++i)
        for (int j = 0; j < fan.dim; ++j) b(i, j) = fan.rays[i][j];
    return b;
}

Int positive_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

ClassGroup::ClassGroup(const Fan& fan) {
    IMat b = ray_matrix(fan);
    SnfResult snf = smith_normal_form(b);
    const int n = fan.n_rays();
    free_rank_ = n - snf.rank;

    IMat raw_free(free_rank_, n);
    for (int i = 0; i < free_rank_; ++i)
        for (int j = 0; j < n; ++j) raw_free(i, j) = snf.u(snf.rank + i, j);
    proj_free_ = hermite_rows(raw_free);
    if (proj_free_.rows() != free_rank_)
        throw std::logic_error("class group: free projection lost rank");

    std::vector<int> torsion_rows;
    for (int i = 0; i < snf.rank; ++i)
        if (snf.d(i, i) > 1) {
            torsion_.push_back(snf.d(i, i));
            torsion_rows.push_back(i);
        }
    proj_torsion_ = IMat(static_cast<int>(torsion_rows.size()), n);
    for (size_t i = 0; i < torsion_rows.size(); ++i)
        for (int j = 0; j < n; ++j) proj_torsion_(static_cast<int>(i), j) = snf.u(torsion_rows[i], j);

    lift_ = free_rank_ > 0 ? right_inverse(proj_free_) : IMat(n, 0);
}

std::vector<Int> ClassGroup::project_free(const std::vector<Int>& coeffs) const {
    return mat_vec(proj_free_, coeffs);
}

std::vector<Int> ClassGroup::project_torsion(const std::vector<Int>& coeffs) const {
    std::vector<Int> t = mat_vec(proj_torsion_, coeffs);
    for (size_t i = 0; i < t.size(); ++i) t[i] = positive_mod(t[i], torsion_[i]);
    return t;
}

std::vector<Int> ClassGroup::lift(const std::vector<Int>& cls) const {
    if (static_cast<int>(cls.size()) != free_rank_)
        throw std::invalid_argument("class coordinates have wrong length");
    return mat_vec(lift_, cls);
}

DivisorClass make_divisor(const ClassGroup& cg, std::vector<Int> coeffs) {
    if (static_cast<int>(coeffs.size()) != cg.n_rays())
        throw std::invalid_argument("divisor coefficient vector has wrong length");
    DivisorClass d;
    d.cls = cg.project_free(coeffs);
    d.tors = cg.project_torsion(coeffs);
    d.coeffs = std::move(coeffs);
    return d;
}

DivisorClass divisor_from_class(const ClassGroup& cg, const std::vector<Int>& cls) {
    return make_divisor(cg, cg.lift(cls));
}

DivisorClass add(const ClassGroup& cg, const DivisorClass& a, const DivisorClass& b) {
    std::vector<Int> c(a.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] + b.coeffs[i];
    return make_divisor(cg, std::move(c));
}

DivisorClass sub(const ClassGroup& cg, const DivisorClass& a, const DivisorClass& b) {
    std::vector<Int> c(a.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] - b.coeffs[i];
    return make_divisor(cg, std::move(c));
}

DivisorClass scale(const ClassGroup& cg, const Int& k, const DivisorClass& a) {
    std::vector<Int> c(a.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs[i];
    return make_divisor(cg, std::move(c));
}

bool is_zero_class(const DivisorClass& a) {
    for (const Int& x : a.cls)
        if (x != 0) return false;
    for (const Int& x : a.tors)
        if (x != 0) return false;
    return true;
}

DivisorClass anticanonical_class(const ClassGroup& cg) {
    return make_divisor(cg, std::vector<Int>(cg.n_rays(), Int(1)));
}

CartierData cartier_data(const Fan& fan, const std::vector<Int>& coeffs) {
    CartierData cd;
    cd.cartier = true;
    for (int c = 0; c < fan.n_cones(); ++c) {
        const auto& cone = fan.max_cones[c];
        QMat a(fan.dim, fan.dim);
        std::vector<Rat> rhs(fan.dim);
        for (int i = 0; i < fan.dim; ++i) {
            for (int j = 0; j < fan.dim; ++j) a(i, j) = Rat(fan.rays[cone[i]][j]);
            rhs[i] = Rat(-coeffs[cone[i]]);
        }
        std::vector<Rat> m;
        if (!solve_rational(a, rhs, m))
            throw std::invalid_argument("cartier_data: degenerate cone " + std::to_string(c));
        bool integral = true;
        for (const Rat& x : m)
            if (x.get_den() != 1) integral = false;
        if (!integral && cd.cartier) {
            cd.cartier = false;
            cd.first_non_cartier_cone = c;
        }
        cd.m.push_back(std::move(m));
    }
    return cd;
}

bool is_cartier(const Fan& fan, const DivisorClass& d) {
    return cartier_data(fan, d.coeffs).cartier;
}

Rat intersection_number(const Fan& fan, const std::vector<Int>& coeffs, const Wall& w) {
    auto local = [&](int cone) {
        const auto& rays = fan.max_cones[cone];
        QMat a(fan.dim, fan.dim);
        std::vector<Rat> rhs(fan.dim);
        for (int i = 0; i < fan.dim; ++i) {
            for (int j = 0; j < fan.dim; ++j) a(i, j) = Rat(fan.rays[rays[i]][j]);
            rhs[i] = Rat(-coeffs[rays[i]]);
        }
        std::vector<Rat> m;
        if (!solve_rational(a, rhs, m))
            throw std::invalid_argument("intersection_number: degenerate cone");
        return m;
    };
    std::vector<Rat> ma = local(w.cone_a), mb = local(w.cone_b);
    Rat pairing = 0;
    for (int j = 0; j < fan.dim; ++j) pairing += (ma[j] - mb[j]) * Rat(fan.rays[w.off_b][j]);
    Int mult_b = cone_lattice_index(fan, fan.max_cones[w.cone_b]);
    Rat val = pairing * Rat(w.lattice_index) / Rat(mult_b);

    // the same number computed from the other side; guards the orientation
    Rat pairing_sym = 0;
    for (int j = 0; j < fan.dim; ++j) pairing_sym += (mb[j] - ma[j]) * Rat(fan.rays[w.off_a][j]);
    Int mult_a = cone_lattice_index(fan, fan.max_cones[w.cone_a]);
    assert(val == pairing_sym * Rat(w.lattice_index) / Rat(mult_a));
    return val;
}

Rat intersection_number(const Fan& fan, const DivisorClass& d, const Wall& w) {
    return intersection_number(fan, d.coeffs, w);
}

Positivity nef_ample_test(const Fan& fan, const std::vector<Wall>& ws, const DivisorClass& d) {
    CartierData cd = cartier_data(fan, d.coeffs);
    if (!cd.cartier)
        throw std::invalid_argument("nef_ample_test: divisor is not Cartier on cone " +
                                    std::to_string(cd.first_non_cartier_cone));
    bool strict = true;
    for (const Wall& w : ws) {
        Rat v = intersection_number(fan, d.coeffs, w);
        if (v < 0) return Positivity::not_nef;
        if (v == 0) strict = false;
    }
    return strict ? Positivity::ample : Positivity::nef_not_ample;
}

bool is_nef_weil(const Fan& fan, const std::vector<Wall>& ws, const DivisorClass& d) {
    for (const Wall& w : ws)
        if (intersection_number(fan, d.coeffs, w) < 0) return false;
    return true;
}

std::vector<Rat> wall_curve_class(const Fan& fan, const ClassGroup& cg, const Wall& w) {
    std::vector<Rat> kappa(cg.free_rank());
    for (int i = 0; i < cg.free_rank(); ++i) {
        std::vector<Int> e(cg.free_rank(), Int(0));
        e[i] = 1;
        kappa[i] = intersection_number(fan, cg.lift(e), w);
    }
    return kappa;
}

namespace {

std::vector<Int> primitive_direction(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (l / v[i].get_den());
    make_primitive(w);
    return w;
}

Rat dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i] * b[i]);
    return s;
}

// Extremal rays of { x : x . v >= 0 for all v }, for pointed full-dim dual
// cones in rank <= 3. Candidates come from supporting hyperplane
// intersections; rank 3 uses pairwise cross products.
std::vector<std::vector<Int>> dual_cone_rays(std::vector<std::vector<Int>> vs, int f) {
    std::set<std::vector<Int>> cands;
    if (f == 1) {
        cands.insert({Int(1)});
        cands.insert({Int(-1)});
    } else if (f == 2) {
        for (const auto& v : vs) {
            cands.insert({-v[1], v[0]});
            cands.insert({v[1], -v[0]});
        }
    } else if (f == 3) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                std::vector<Int> c = {vs[i][1] * vs[j][2] - vs[i][2] * vs[j][1],
                                      vs[i][2] * vs[j][0] - vs[i][0] * vs[j][2],
                                      vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0]};
                std::vector<Int> cn = {-c[0], -c[1], -c[2]};
                cands.insert(c);
                cands.insert(cn);
            }
    } else {
        throw std::invalid_argument("dual cone enumeration implemented for rank <= 3 only");
    }
    std::vector<std::vector<Int>> rays;
    for (auto cand : cands) {
        if (vec_content(cand) == 0) continue;
        make_primitive(cand);
        bool ok = true;
        bool tight = (f == 1);
        for (const auto& v : vs) {
            Rat p = dot(cand, v);
            if (p < 0) { ok = false; break; }
            if (p == 0) tight = true;
        }
        // an extremal ray of a full-dimensional pointed cone lies on a
        // supporting hyperplane (rank 1: the whole boundary is the origin)
        if (ok && tight && std::find(rays.begin(), rays.end(), cand) == rays.end())
            rays.push_back(cand);
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

std::vector<std::vector<Int>> curve_vectors(const Fan& fan, const ClassGroup& cg,
                                            const std::vector<Wall>& ws) {
    std::vector<std::vector<Int>> vs;
    for (const Wall& w : ws) {
        std::vector<Int> v = primitive_direction(wall_curve_class(fan, cg, w));
        if (vec_content(v) != 0 && std::find(vs.begin(), vs.end(), v) == vs.end())
            vs.push_back(v);
    }
    return vs;
}

void require_small_free_rank(const ClassGroup& cg) {
    if (!cg.torsion().empty())
        throw std::invalid_argument("cone generators require a torsion-free class group");
    if (cg.free_rank() < 1 || cg.free_rank() > 3)
        throw std::invalid_argument("cone generators implemented for rank 1..3 only");
}

}  // namespace

std::vector<std::vector<Int>> nef_cone_generators(const Fan& fan, const ClassGroup& cg,
                                                  const std::vector<Wall>& ws) {
    require_small_free_rank(cg);
    return dual_cone_rays(curve_vectors(fan, cg, ws), cg.free_rank());
}

std::vector<std::vector<Int>> mori_generators(const Fan& fan, const ClassGroup& cg,
                                              const std::vector<Wall>& ws) {
    require_small_free_rank(cg);
    // the Mori cone is the dual of the nef cone
    return dual_cone_rays(nef_cone_generators(fan, cg, ws), cg.free_rank());
}

PicardLattice::PicardLattice(const Fan& fan, const ClassGroup& cg) {
    if (!cg.torsion().empty())
        throw std::invalid_argument("Picard lattice implemented for torsion-free class groups");
    const int n = fan.n_rays(), r = fan.dim, f = cg.free_rank();

    // integrality conditions:  (adj(R_sigma)/det) * a_sigma  in Z^r per cone
    std::vector<QMat> blocks;
    Int common = 1;
    for (const auto& cone : fan.max_cones) {
        QMat a(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) a(i, j) = Rat(fan.rays[cone[i]][j]);
        QMat inv(r, r);
        // invert by solving against unit vectors
        for (int k = 0; k < r; ++k) {
            std::vector<Rat> e(r, Rat(0)), col;
            e[k] = 1;
            if (!solve_rational(a, e, col))
                throw std::invalid_argument("Picard lattice: degenerate cone");
            for (int i = 0; i < r; ++i) inv(i, k) = col[i];
        }
        QMat g(r, n);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) g(i, cone[k]) = -inv(i, k);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j)
                mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), g(i, j).get_den().get_mpz_t());
        blocks.push_back(std::move(g));
    }

    IMat cmat(static_cast<int>(blocks.size()) * r, n);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) {
                Rat scaled = blocks[b](i, j) * Rat(common);
                assert(scaled.get_den() == 1);
                cmat(static_cast<int>(b) * r + i, j) = scaled.get_num();
            }

    // solve  cmat * a == 0 (mod common):  a = v y with d_i y_i == 0 (mod common)
    SnfResult snf = smith_normal_form(cmat);
    IMat gens(n, n);
    for (int c = 0; c < n; ++c) {
        Int d = (c < std::min(cmat.rows(), n)) ? snf.d(c, c) : Int(0);
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), common.get_mpz_t());
        Int s = common / g;
        for (int i = 0; i < n; ++i) gens(i, c) = snf.v(i, c) * s;
    }

    // project the Cartier lattice generators into class coordinates
    IMat proj_gens(n, f);
    for (int c = 0; c < n; ++c) {
        std::vector<Int> col(n);
        for (int i = 0; i < n; ++i) col[i] = gens(i, c);
        std::vector<Int> cls = cg.project_free(col);
        for (int i = 0; i < f; ++i) proj_gens(c, i) = cls[i];
    }
    basis_ = hermite_rows(proj_gens);
    if (basis_.rows() != f)
        throw std::logic_error("Picard lattice does not have full rank in the class group");
}

Int PicardLattice::index_in_class_group() const {
    Int idx = 1;
    IMat sq(basis_.rows(), basis_.rows());
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < basis_.rows(); ++j) sq(i, j) = basis_(i, j);
    idx = abs(determinant(sq));
    return idx;
}

std::optional<std::vector<Int>> PicardLattice::coordinates(const std::vector<Int>& cls) const {
    const int f = basis_.rows();
    QMat a(f, f);
    std::vector<Rat> rhs(f);
    for (int i = 0; i < f; ++i) {
        for (int j = 0; j < f; ++j) a(i, j) = Rat(basis_(j, i));  // columns = basis rows
        rhs[i] = Rat(cls[i]);
    }
    std::vector<Rat> z;
    if (!solve_rational(a, rhs, z)) return std::nullopt;
    std::vector<Int> out(f);
    for (int i = 0; i < f; ++i) {
        if (z[i].get_den() != 1) return std::nullopt;
        out[i] = z[i].get_num();
    }
    return out;
}

bool PicardLattice::is_primitive(const std::vector<Int>& cls) const {
    auto z = coordinates(cls);
    return z && vec_content(*z) == 1;
}

}  // namespace nltoric
