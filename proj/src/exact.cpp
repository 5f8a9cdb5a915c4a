#include "nltoric/exact.hpp"

#include <algorithm>

namespace nltoric {

Int vec_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<Int>& v) {
    Int g = vec_content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    assert(a.cols() == b.rows());
    IMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Int> mat_vec(const IMat& a, const std::vector<Int>& x) {
    assert(static_cast<int>(x.size()) == a.cols());
    std::vector<Int> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

IMat transpose(const IMat& a) {
    IMat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Int determinant(IMat a) {
    assert(a.rows() == a.cols());
    const int n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

int rank_int(IMat a) {
    const int m = a.rows(), n = a.cols();
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = r + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(r, col) - a(i, col) * a(r, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(r, col);
        ++r;
    }
    return r;
}

int rank_rat(QMat a) {
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = r + 1; i < m; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) / a(r, col);
            for (int j = col; j < n; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) > 1) f.push_back(d(i, i));
    return f;
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t,t); ties go
// to the lowest row, then lowest column.
bool find_pivot(const IMat& a, int t, int& pi, int& pj) {
    pi = -1;
    Int best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (pi < 0 || v < best) {
                best = v;
                pi = i;
                pj = j;
            }
        }
    return pi >= 0;
}

}  // namespace

SnfResult smith_normal_form(const IMat& a_in) {
    SnfResult res;
    res.d = a_in;
    const int m = a_in.rows(), n = a_in.cols();
    res.u = IMat::identity(m);
    res.v = IMat::identity(n);
    IMat& a = res.d;
    IMat& u = res.u;
    IMat& v = res.v;

    auto add_row = [&](int dst, int src, const Int& f) {  // row_dst += f * row_src
        for (int j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (int j = 0; j < m; ++j) u(dst, j) += f * u(src, j);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < m; ++i) a(i, dst) += f * a(i, src);
        for (int i = 0; i < n; ++i) v(i, dst) += f * v(i, src);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) a(i, j) = -a(i, j);
        for (int j = 0; j < m; ++j) u(i, j) = -u(i, j);
    };

    int t = 0;
    while (t < std::min(m, n)) {
        int pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }
        if (a(t, t) < 0) negate_row(t);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t below the pivot
            for (int i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = floor_div(a(i, t), a(t, t));
                add_row(i, t, -q);
                if (a(i, t) != 0) {  // remainder becomes the new, smaller pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            // clear row t to the right of the pivot
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = floor_div(a(t, j), a(t, t));
                add_col(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: the pivot must divide every remaining entry
            for (int i = t + 1; i < m && clean; ++i)
                for (int j = t + 1; j < n && clean; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
        }
        ++t;
    }
    res.rank = 0;
    for (int i = 0; i < std::min(m, n); ++i)
        if (a(i, i) != 0) ++res.rank;
    return res;
}

CokernelStructure cokernel_structure(const IMat& a) {
    SnfResult snf = smith_normal_form(a);
    CokernelStructure c;
    c.free_rank = a.rows() - snf.rank;
    c.torsion = snf.invariant_factors();
    return c;
}

IMat hermite_rows(const IMat& a_in) {
    IMat a = a_in;
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // euclidean reduction within the column
        while (true) {
            int piv = -1;
            Int best;
            for (int i = r; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int v = abs(a(i, col));
                if (piv < 0 || v < best) { best = v; piv = i; }
            }
            if (piv < 0) break;
            a.swap_rows(r, piv);
            if (a(r, col) < 0)
                for (int j = 0; j < n; ++j) a(r, j) = -a(r, j);
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int q = floor_div(a(i, col), a(r, col));
                for (int j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
                if (a(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, col) == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(a(i, col), a(r, col));
            if (q != 0)
                for (int j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
        }
        ++r;
    }
    IMat h(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = a(i, j);
    return h;
}

IMat integer_kernel(const IMat& a) {
    SnfResult snf = smith_normal_form(a);
    const int n = a.cols();
    const int k = n - snf.rank;
    IMat ker(n, k);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) ker(i, c) = snf.v(i, snf.rank + c);
    return ker;
}

IMat right_inverse(const IMat& p) {
    SnfResult snf = smith_normal_form(p);
    const int f = p.rows(), n = p.cols();
    if (snf.rank != f)
        throw std::invalid_argument("right_inverse: matrix does not have full row rank");
    for (int i = 0; i < f; ++i)
        if (snf.d(i, i) != 1)
            throw std::invalid_argument("right_inverse: matrix is not surjective over Z");
    // p = u^-1 d v^-1, so w = v d^+ u satisfies p w = id
    IMat vd(n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < f; ++j) vd(i, j) = snf.v(i, j);
    return mat_mul(vd, snf.u);
}

bool solve_rational(const QMat& a_in, const std::vector<Rat>& b, std::vector<Rat>& x) {
    assert(a_in.rows() == a_in.cols());
    const int n = a_in.rows();
    QMat a(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = a_in(i, j);
        a(i, n) = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) return false;
        a.swap_rows(col, piv);
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col) / a(col, col);
            for (int j = col; j <= n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    x.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) x[i] = a(i, n) / a(i, i);
    return true;
}

}  // namespace nltoric
