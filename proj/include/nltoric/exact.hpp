#ifndef NLTORIC_EXACT_HPP
#define NLTORIC_EXACT_HPP

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer and rational linear algebra. Everything in this layer is
// arbitrary precision; no floating point is used anywhere in the project.

namespace nltoric {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor/ceil of a canonical rational (denominator > 0)
inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

Int vec_content(const std::vector<Int>& v);   // gcd of entries, 0 for zero vector
void make_primitive(std::vector<Int>& v);     // divide by content (no-op on zero)

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

IMat mat_mul(const IMat& a, const IMat& b);
std::vector<Int> mat_vec(const IMat& a, const std::vector<Int>& x);
IMat transpose(const IMat& a);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(IMat a);

// Rank over Q of an integer matrix, fraction-free elimination.
int rank_int(IMat a);
int rank_rat(QMat a);

// Smith normal form  u * a * v = d  with u, v unimodular, d diagonal with
// nonnegative entries and d_1 | d_2 | ...  The pivot rule (smallest nonzero
// absolute value, ties broken by lowest row then column) is deterministic so
// u and v are reproducible.
struct SnfResult {
    IMat u, d, v;
    int rank = 0;
    std::vector<Int> invariant_factors() const;  // the d_i > 1
};

SnfResult smith_normal_form(const IMat& a);

// Structure of coker(Z^cols --a--> Z^rows): free rank and torsion factors
// (each > 1, forming a divisibility chain).
struct CokernelStructure {
    int free_rank = 0;
    std::vector<Int> torsion;
};

CokernelStructure cokernel_structure(const IMat& a);

// Row-style Hermite normal form: unimodular row operations only, pivots
// positive, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped from the result.
IMat hermite_rows(const IMat& a);

// Columns form a basis of { x in Z^cols : a x = 0 }. The basis is saturated
// (it spans the full kernel lattice, not a finite-index sublattice).
IMat integer_kernel(const IMat& a);

// For a surjective p : Z^n -> Z^f, a right inverse w with p w = id. Throws
// if p is not surjective over Z.
IMat right_inverse(const IMat& p);

// Solve a x = b exactly over Q for square a; empty result if a is singular.
bool solve_rational(const QMat& a, const std::vector<Rat>& b, std::vector<Rat>& x);

inline QMat to_rational(const IMat& a) {
    QMat q(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
    return q;
}

}  // namespace nltoric

#endif
