#include "nltoric/lp.hpp"

#include <algorithm>

namespace nltoric {

namespace {

// Dictionary simplex in standard form: maximize c.y subject to a.y <= b,
// y >= 0. Variable ids: 0..n-1 decision, n..n+m-1 slack, n+m auxiliary.
class Simplex {
  public:
    Simplex(const QMat& a, const std::vector<Rat>& b, const std::vector<Rat>& c)
        : m_(a.rows()), n_(a.cols()), t_(m_, n_ + 1), rhs_(b), obj_(n_ + 1), basic_(m_), nonbasic_(n_) {
        // t_(i,j) holds the coefficient of nonbasic j in the expression of
        // basic i:  x_basic[i] = rhs_[i] - sum_j t_(i,j) x_nonbasic[j]
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) t_(i, j) = a(i, j);
        for (int j = 0; j < n_; ++j) {
            obj_[j] = c[j];
            nonbasic_[j] = j;
        }
        for (int i = 0; i < m_; ++i) basic_[i] = n_ + i;
    }

    enum Outcome { kInfeasible, kUnbounded, kOptimal };

    Outcome run() {
        if (!phase1()) return kInfeasible;
        return phase2() ? kOptimal : kUnbounded;
    }

    Rat objective_value() const { return obj0_; }

    // value of decision variable v in the current dictionary
    Rat value_of(int v) const {
        for (int i = 0; i < m_; ++i)
            if (basic_[i] == v) return rhs_[i];
        return Rat(0);
    }

    // improving ray recorded when phase 2 detected unboundedness
    const std::vector<Rat>& ray() const { return ray_; }

  private:
    int m_, n_;
    QMat t_;
    std::vector<Rat> rhs_;
    std::vector<Rat> obj_;
    Rat obj0_ = 0;
    std::vector<int> basic_, nonbasic_;
    std::vector<Rat> ray_;
    int ncols_ = 0;  // active nonbasic count (n_ or n_+1 with auxiliary)

    void pivot(int row, int col) {
        const Rat piv = t_(row, col);
        std::swap(basic_[row], nonbasic_[col]);
        // rewrite the pivot row
        rhs_[row] /= piv;
        for (int j = 0; j < ncols_; ++j) t_(row, j) /= piv;
        t_(row, col) = Rat(1) / piv;
        // substitute into the other rows
        for (int i = 0; i < m_; ++i) {
            if (i == row || t_(i, col) == 0) continue;
            const Rat f = t_(i, col);
            rhs_[i] -= f * rhs_[row];
            for (int j = 0; j < ncols_; ++j) t_(i, j) -= f * t_(row, j);
            t_(i, col) = -f / piv;
        }
        if (obj_[col] != 0) {
            const Rat f = obj_[col];
            obj0_ += f * rhs_[row];
            for (int j = 0; j < ncols_; ++j) obj_[j] -= f * t_(row, j);
            obj_[col] = -f / piv;
        }
    }

    // Bland: entering = smallest-id nonbasic with positive reduced cost;
    // leaving = tightest ratio, ties by smallest variable id.
    bool simplex_loop() {
        while (true) {
            int ecol = -1;
            for (int j = 0; j < ncols_; ++j)
                if (obj_[j] > 0 && (ecol < 0 || nonbasic_[j] < nonbasic_[ecol])) ecol = j;
            if (ecol < 0) return true;  // optimal
            int lrow = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (t_(i, ecol) <= 0) continue;
                Rat ratio = rhs_[i] / t_(i, ecol);
                if (lrow < 0 || ratio < best || (ratio == best && basic_[i] < basic_[lrow])) {
                    best = ratio;
                    lrow = i;
                }
            }
            if (lrow < 0) {  // unbounded: record the improving ray
                ray_.assign(n_, Rat(0));
                int ev = nonbasic_[ecol];
                if (ev < n_) ray_[ev] = 1;
                for (int i = 0; i < m_; ++i)
                    if (basic_[i] < n_) ray_[basic_[i]] = -t_(i, ecol);
                return false;
            }
            pivot(lrow, ecol);
        }
    }

    bool phase1() {
        ncols_ = n_;
        int worst = -1;
        for (int i = 0; i < m_; ++i)
            if (rhs_[i] < 0 && (worst < 0 || rhs_[i] < rhs_[worst])) worst = i;
        if (worst < 0) return true;  // y = 0 already feasible

        // auxiliary variable x0: rows become x_basic = rhs - t.y + x0
        const int aux = n_ + m_;
        ncols_ = n_ + 1;
        for (int i = 0; i < m_; ++i) t_(i, n_) = Rat(-1);
        nonbasic_.push_back(aux);
        std::vector<Rat> saved_obj = obj_;
        Rat saved_obj0 = obj0_;
        for (int j = 0; j < n_; ++j) obj_[j] = 0;
        obj_[n_] = Rat(-1);  // maximize -x0
        obj0_ = 0;
        pivot(worst, n_);  // makes the dictionary feasible
        simplex_loop();
        if (obj0_ != 0) return false;  // optimum of -x0 is negative: infeasible

        // drive the auxiliary variable out of the basis if needed
        for (int i = 0; i < m_; ++i)
            if (basic_[i] == aux) {
                int col = -1;
                for (int j = 0; j < ncols_; ++j)
                    if (t_(i, j) != 0 && nonbasic_[j] != aux) { col = j; break; }
                assert(col >= 0);
                pivot(i, col);
                break;
            }
        // delete the auxiliary column
        int acol = -1;
        for (int j = 0; j < ncols_; ++j)
            if (nonbasic_[j] == aux) acol = j;
        assert(acol >= 0);
        for (int j = acol; j + 1 < ncols_; ++j) {
            for (int i = 0; i < m_; ++i) t_(i, j) = t_(i, j + 1);
            nonbasic_[j] = nonbasic_[j + 1];
        }
        nonbasic_.pop_back();
        ncols_ = n_;

        // restore the original objective, substituting basic variables
        obj_ = saved_obj;
        obj_.resize(n_ + 1, Rat(0));
        obj0_ = saved_obj0;
        std::vector<Rat> expr = obj_;
        obj_.assign(n_ + 1, Rat(0));
        for (int i = 0; i < m_; ++i) {
            int v = basic_[i];
            if (v < n_ && expr[v] != 0) {
                obj0_ += expr[v] * rhs_[i];
                for (int j = 0; j < ncols_; ++j) obj_[j] -= expr[v] * t_(i, j);
            }
        }
        for (int j = 0; j < ncols_; ++j) {
            int v = nonbasic_[j];
            if (v < n_ && expr[v] != 0) obj_[j] += expr[v];
        }
        return true;
    }

    bool phase2() { return simplex_loop(); }
};

// Free variables are split x = u - v with u, v >= 0.
struct StandardForm {
    QMat a;
    std::vector<Rat> b;
    int dim;
};

StandardForm to_standard(const std::vector<Halfspace>& hs, int dim) {
    StandardForm sf;
    sf.dim = dim;
    const int m = static_cast<int>(hs.size());
    sf.a = QMat(m, 2 * dim);
    sf.b.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < dim; ++j) {
            sf.a(i, j) = -hs[i].normal[j];
            sf.a(i, dim + j) = hs[i].normal[j];
        }
        sf.b[i] = -hs[i].rhs;
    }
    return sf;
}

std::vector<Rat> split_to_point(const Simplex& s, int dim) {
    std::vector<Rat> x(dim);
    for (int j = 0; j < dim; ++j) x[j] = s.value_of(j) - s.value_of(dim + j);
    return x;
}

std::vector<Rat> split_to_dir(const std::vector<Rat>& y, int dim) {
    std::vector<Rat> d(dim);
    for (int j = 0; j < dim; ++j) d[j] = y[j] - y[dim + j];
    return d;
}

}  // namespace

LpOptimum lp_maximize(const std::vector<Halfspace>& halfspaces,
                      const std::vector<Rat>& objective, int dim) {
    assert(dim >= 1);
    StandardForm sf = to_standard(halfspaces, dim);
    std::vector<Rat> c(2 * dim);
    for (int j = 0; j < dim; ++j) {
        c[j] = objective[j];
        c[dim + j] = -objective[j];
    }
    Simplex s(sf.a, sf.b, c);
    LpOptimum out;
    switch (s.run()) {
        case Simplex::kInfeasible:
            out.kind = LpOptimum::infeasible;
            break;
        case Simplex::kUnbounded:
            out.kind = LpOptimum::unbounded;
            out.point = split_to_point(s, dim);
            out.ray = split_to_dir(s.ray(), dim);
            break;
        case Simplex::kOptimal:
            out.kind = LpOptimum::optimal;
            out.value = s.objective_value();
            out.point = split_to_point(s, dim);
            break;
    }
    return out;
}

LpVerdict lp_classify(const std::vector<Halfspace>& halfspaces, int dim) {
    if (dim < 1) throw std::invalid_argument("lp_classify: ambient dimension must be >= 1");
    LpVerdict v;
    std::vector<Rat> zero(dim, Rat(0));
    LpOptimum feas = lp_maximize(halfspaces, zero, dim);
    if (feas.kind == LpOptimum::infeasible) {
        v.status = LpStatus::empty;
        return v;
    }
    v.point = feas.point;
    std::vector<Rat> obj(dim, Rat(0));
    for (int j = 0; j < dim; ++j) {
        for (int s = 0; s < 2; ++s) {
            obj[j] = s == 0 ? Rat(1) : Rat(-1);
            LpOptimum o = lp_maximize(halfspaces, obj, dim);
            if (o.kind == LpOptimum::unbounded) {
                v.status = LpStatus::unbounded;
                v.point = o.point;
                v.ray = o.ray;
                return v;
            }
        }
        obj[j] = 0;
    }
    v.status = LpStatus::bounded_nonempty;
    return v;
}

std::optional<CoordinateBox> coordinate_box(const std::vector<Halfspace>& halfspaces, int dim) {
    CoordinateBox box;
    box.lo.resize(dim);
    box.hi.resize(dim);
    std::vector<Rat> obj(dim, Rat(0));
    for (int j = 0; j < dim; ++j) {
        obj[j] = 1;
        LpOptimum hi = lp_maximize(halfspaces, obj, dim);
        if (hi.kind != LpOptimum::optimal) return std::nullopt;
        obj[j] = -1;
        LpOptimum lo = lp_maximize(halfspaces, obj, dim);
        if (lo.kind != LpOptimum::optimal) return std::nullopt;
        obj[j] = 0;
        box.hi[j] = hi.value;
        box.lo[j] = -lo.value;
    }
    return box;
}

}  // namespace nltoric
