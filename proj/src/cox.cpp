#include "nltoric/cox.hpp"

#include <algorithm>
#include <random>

namespace nltoric {

GradedBasis graded_basis(const Fan& fan, const ClassGroup&, const DivisorClass& gamma) {
    GradedBasis b;
    b.degree = gamma;
    std::vector<std::vector<Int>> pts;
    try {
        pts = lattice_points(divisor_polytope(fan, gamma.coeffs));
    } catch (const PolytopeUnbounded&) {
        throw std::invalid_argument("graded_basis: unbounded section polytope (incomplete fan?)");
    }
    for (const auto& m : pts) {
        std::vector<Int> a(gamma.coeffs);
        for (int i = 0; i < fan.n_rays(); ++i)
            for (int j = 0; j < fan.dim; ++j) a[i] += fan.rays[i][j] * m[j];
        for (const Int& e : a)
            if (e < 0) throw std::logic_error("graded_basis: negative exponent from a polytope point");
        b.exponents.push_back(std::move(a));
    }
    std::sort(b.exponents.begin(), b.exponents.end());
    return b;
}

CoxPolynomial random_section(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta,
                             std::uint64_t seed) {
    GradedBasis basis = graded_basis(fan, cg, beta);
    if (basis.exponents.empty())
        throw std::invalid_argument("random_section: the degree has no monomials");
    std::mt19937_64 rng(seed);
    CoxPolynomial f;
    f.degree = beta;
    f.quasi_smoothness = "assumed (generic)";
    for (const auto& e : basis.exponents) {
        long k = static_cast<long>(rng() % 18);  // 0..17 -> -9..-1, 1..9
        long c = k < 9 ? k - 9 : k - 8;
        f.terms[e] = Rat(c);
    }
    return f;
}

CoxPolynomial fermat_section(const Fan& fan, const ClassGroup& cg, const DivisorClass& beta) {
    CoxPolynomial f;
    f.degree = beta;
    f.quasi_smoothness = "classical (fermat)";
    for (int ray = 0; ray < fan.n_rays(); ++ray) {
        std::vector<Int> e(fan.n_rays(), Int(0));
        e[ray] = 1;
        DivisorClass d_ray = make_divisor(cg, e);
        // t * [D_ray] = beta for a positive integer t?
        std::optional<Int> t;
        for (int i = 0; i < cg.free_rank(); ++i) {
            if (d_ray.cls[i] == 0) {
                if (beta.cls[i] != 0) { t.reset(); break; }
                continue;
            }
            if (beta.cls[i] % d_ray.cls[i] != 0) { t.reset(); break; }
            Int cand = beta.cls[i] / d_ray.cls[i];
            if (t && *t != cand) { t.reset(); break; }
            t = cand;
        }
        if (!t || *t <= 0) continue;
        DivisorClass check = scale(cg, *t, d_ray);
        if (!(check == beta)) continue;
        std::vector<Int> mono(fan.n_rays(), Int(0));
        mono[ray] = *t;
        f.terms[mono] = Rat(1);
    }
    if (f.terms.empty())
        throw std::invalid_argument("fermat_section: no pure power lands in the given degree");
    return f;
}

CoxPolynomial derivative(const ClassGroup& cg, const CoxPolynomial& f, int ray) {
    CoxPolynomial d;
    d.quasi_smoothness = f.quasi_smoothness;
    std::vector<Int> e_ray(cg.n_rays(), Int(0));
    e_ray[ray] = 1;
    d.degree = sub(cg, f.degree, make_divisor(cg, e_ray));
    for (const auto& [e, c] : f.terms) {
        if (e[ray] == 0) continue;
        std::vector<Int> de = e;
        Rat dc = c * Rat(e[ray]);
        de[ray] -= 1;
        d.terms[de] += dc;
        if (d.terms[de] == 0) d.terms.erase(de);
    }
    return d;
}

namespace {

struct Slice {
    std::vector<std::vector<Int>> basis;          // sorted monomials of S_gamma
    std::map<std::vector<Int>, int> index;        // monomial -> column
};

Slice make_slice(const Fan& fan, const ClassGroup& cg, const DivisorClass& gamma) {
    Slice s;
    s.basis = graded_basis(fan, cg, gamma).exponents;
    for (size_t i = 0; i < s.basis.size(); ++i) s.index[s.basis[i]] = static_cast<int>(i);
    return s;
}

// rows spanning J(f)_gamma in the coordinates of S_gamma, restricted to the
// columns listed in `cols` (identity order); integer rows after scaling.
IMat jacobian_rows(const Fan& fan, const ClassGroup& cg, const CoxPolynomial& f,
                   const DivisorClass& gamma, const Slice& slice, const std::vector<int>& cols) {
    std::vector<int> col_pos(slice.basis.size(), -1);
    for (size_t i = 0; i < cols.size(); ++i) col_pos[cols[i]] = static_cast<int>(i);

    std::vector<std::vector<Rat>> rows;
    for (int ray = 0; ray < fan.n_rays(); ++ray) {
        CoxPolynomial df = derivative(cg, f, ray);
        if (df.terms.empty()) continue;
        // degree of df: deg f - [D_ray]
        std::vector<Int> e(fan.n_rays(), Int(0));
        e[ray] = 1;
        DivisorClass d_ray = make_divisor(cg, e);
        DivisorClass df_deg = sub(cg, f.degree, d_ray);
        DivisorClass mult_deg = sub(cg, gamma, df_deg);
        GradedBasis mults = graded_basis(fan, cg, mult_deg);
        for (const auto& m : mults.exponents) {
            std::vector<Rat> row(cols.size(), Rat(0));
            bool nonzero = false;
            for (const auto& [de, dc] : df.terms) {
                std::vector<Int> prod(de.size());
                for (size_t i = 0; i < de.size(); ++i) prod[i] = de[i] + m[i];
                auto it = slice.index.find(prod);
                if (it == slice.index.end())
                    throw std::logic_error("jacobian row product left the graded slice");
                int cp = col_pos[it->second];
                if (cp >= 0) {
                    row[cp] += dc;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    IMat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        Int l = 1;
        for (const Rat& x : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        for (size_t j = 0; j < cols.size(); ++j)
            out(static_cast<int>(i), static_cast<int>(j)) =
                rows[i][j].get_num() * (l / rows[i][j].get_den());
    }
    return out;
}

}  // namespace

Int jacobian_slice_dimension(const Fan& fan, const ClassGroup& cg, const CoxPolynomial& f,
                             const DivisorClass& gamma) {
    Slice slice = make_slice(fan, cg, gamma);
    std::vector<int> all_cols(slice.basis.size());
    for (size_t i = 0; i < all_cols.size(); ++i) all_cols[i] = static_cast<int>(i);
    IMat rows = jacobian_rows(fan, cg, f, gamma, slice, all_cols);
    return Int(rank_int(rows));
}

Int jacobian_ring_dimension(const Fan& fan, const ClassGroup& cg, const CoxPolynomial& f,
                            const DivisorClass& gamma) {
    Slice slice = make_slice(fan, cg, gamma);
    Int dim_s(static_cast<long>(slice.basis.size()));
    return dim_s - jacobian_slice_dimension(fan, cg, f, gamma);
}

MultMapResult mult_map_surjective(const Fan& fan, const ClassGroup& cg,
                                  const std::optional<CoxPolynomial>& f,
                                  const DivisorClass& g1, const DivisorClass& g2) {
    DivisorClass gsum = add(cg, g1, g2);
    Slice slice = make_slice(fan, cg, gsum);
    GradedBasis b1 = graded_basis(fan, cg, g1);
    GradedBasis b2 = graded_basis(fan, cg, g2);

    std::vector<char> covered(slice.basis.size(), 0);
    std::vector<Int> prod(fan.n_rays());
    for (const auto& e1 : b1.exponents)
        for (const auto& e2 : b2.exponents) {
            for (int i = 0; i < fan.n_rays(); ++i) prod[i] = e1[i] + e2[i];
            auto it = slice.index.find(prod);
            if (it == slice.index.end())
                throw std::logic_error("monomial product left the graded slice");
            covered[it->second] = 1;
        }

    std::vector<int> uncovered;
    for (size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) uncovered.push_back(static_cast<int>(i));

    MultMapResult res;
    if (!f) {
        res.cokernel_dim = Int(static_cast<long>(uncovered.size()));
        res.surjective = uncovered.empty();
        return res;
    }
    if (uncovered.empty()) {
        res.cokernel_dim = 0;
        res.surjective = true;
        return res;
    }
    // the products span the covered coordinates; only J(f) can reach the rest
    IMat rest = jacobian_rows(fan, cg, *f, gsum, slice, uncovered);
    int extra = rank_int(rest);
    res.cokernel_dim = Int(static_cast<long>(uncovered.size()) - extra);
    res.surjective = (res.cokernel_dim == 0);
    return res;
}

}  // namespace nltoric
