#include "torlink/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace torlink::exact {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Int& b = o(k, j);
                if (b != 0) r(i, j) += a * b;
            }
        }
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply shape");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Int& a = (*this)(i, j);
            if (a != 0 && x[j] != 0) r[i] += a * x[j];
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

namespace {

// Elementary operations on a working matrix with optional transform
// tracking. Maintains u * a_orig * v = a  (and the inverses).
struct SnfWork {
    IntMatrix a;
    IntMatrix *u = nullptr, *u_inv = nullptr, *v = nullptr, *v_inv = nullptr;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (u)
            for (std::size_t c = 0; c < u->cols(); ++c)
                std::swap((*u)(i, c), (*u)(j, c));
        if (u_inv)
            for (std::size_t r = 0; r < u_inv->rows(); ++r)
                std::swap((*u_inv)(r, i), (*u_inv)(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (v)
            for (std::size_t r = 0; r < v->rows(); ++r)
                std::swap((*v)(r, i), (*v)(r, j));
        if (v_inv)
            for (std::size_t c = 0; c < v_inv->cols(); ++c)
                std::swap((*v_inv)(i, c), (*v_inv)(j, c));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(i, c) != 0) a(i, c) = -a(i, c);
        if (u)
            for (std::size_t c = 0; c < u->cols(); ++c)
                if ((*u)(i, c) != 0) (*u)(i, c) = -(*u)(i, c);
        if (u_inv)
            for (std::size_t r = 0; r < u_inv->rows(); ++r)
                if ((*u_inv)(r, i) != 0) (*u_inv)(r, i) = -(*u_inv)(r, i);
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(j, c) != 0) a(i, c) -= q * a(j, c);
        if (u)
            for (std::size_t c = 0; c < u->cols(); ++c)
                if ((*u)(j, c) != 0) (*u)(i, c) -= q * (*u)(j, c);
        if (u_inv)  // inverse op: col_j += q * col_i
            for (std::size_t r = 0; r < u_inv->rows(); ++r)
                if ((*u_inv)(r, i) != 0) (*u_inv)(r, j) += q * (*u_inv)(r, i);
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, j) != 0) a(r, i) -= q * a(r, j);
        if (v)
            for (std::size_t r = 0; r < v->rows(); ++r)
                if ((*v)(r, j) != 0) (*v)(r, i) -= q * (*v)(r, j);
        if (v_inv)  // inverse op: row_j += q * row_i
            for (std::size_t c = 0; c < v_inv->cols(); ++c)
                if ((*v_inv)(i, c) != 0) (*v_inv)(j, c) += q * (*v_inv)(i, c);
    }
    void negate_col(std::size_t i) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, i) != 0) a(r, i) = -a(r, i);
        if (v)
            for (std::size_t r = 0; r < v->rows(); ++r)
                if ((*v)(r, i) != 0) (*v)(r, i) = -(*v)(r, i);
        if (v_inv)
            for (std::size_t c = 0; c < v_inv->cols(); ++c)
                if ((*v_inv)(i, c) != 0) (*v_inv)(i, c) = -(*v_inv)(i, c);
    }
};

// Smallest-absolute-nonzero pivot in a[t.., t..], first occurrence in
// row-major order; early exit on magnitude one.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    return found;
}

std::size_t snf_core(SnfWork& w) {
    IntMatrix& a = w.a;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t t = 0;
    Int q, r;
    while (t < m && t < n) {
        std::size_t pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            // clear column t below the pivot
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                            a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                w.row_sub(i, t, q);
                if (r != 0) dirty = true;
            }
            // clear row t right of the pivot
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                            a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                w.col_sub(j, t, q);
                if (r != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi, qj;
                find_pivot(a, t, qi, qj);
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            // divisibility: pivot must divide every remaining entry
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(),
                                         a(t, t).get_mpz_t())) {
                        w.row_sub(t, i, Int(-1));  // row_t += row_i
                        fixed = false;
                        break;
                    }
                }
            if (fixed) break;
        }
        if (a(t, t) < 0) w.negate_row(t);
        ++t;
    }
    return t;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    SnfWork w{a, &u, nullptr, &v, nullptr};
    s.rank = snf_core(w);
    s.u = std::move(u);
    s.v = std::move(v);
    s.d = std::move(w.a);
    return s;
}

SmithTransforms smith_with_inverses(const IntMatrix& a, bool track_u,
                                    bool track_v) {
    SmithTransforms s;
    IntMatrix u, ui, v, vi;
    if (track_u) {
        u = IntMatrix::identity(a.rows());
        ui = IntMatrix::identity(a.rows());
    }
    if (track_v) {
        v = IntMatrix::identity(a.cols());
        vi = IntMatrix::identity(a.cols());
    }
    SnfWork w{a, track_u ? &u : nullptr, track_u ? &ui : nullptr,
              track_v ? &v : nullptr, track_v ? &vi : nullptr};
    s.rank = snf_core(w);
    s.u = std::move(u);
    s.u_inv = std::move(ui);
    s.v = std::move(v);
    s.v_inv = std::move(vi);
    s.d = std::move(w.a);
    return s;
}

std::vector<Int> smith_divisors(const IntMatrix& a) {
    SnfWork w{a, nullptr, nullptr, nullptr, nullptr};
    std::size_t rank = snf_core(w);
    std::vector<Int> d(rank);
    for (std::size_t i = 0; i < rank; ++i) d[i] = w.a(i, i);
    return d;
}

HermiteColumnForm hermite_column_form(const IntMatrix& a) {
    HermiteColumnForm hf;
    IntMatrix v = IntMatrix::identity(a.cols());
    SnfWork w{a, nullptr, nullptr, &v, nullptr};
    IntMatrix& h = w.a;
    const std::size_t m = h.rows(), n = h.cols();
    std::size_t r = 0;
    Int q, rem;
    for (std::size_t row = 0; row < m && r < n; ++row) {
        // gcd-reduce the columns >= r along this row
        for (;;) {
            std::size_t best = n;
            Int bestabs;
            for (std::size_t j = r; j < n; ++j) {
                if (h(row, j) == 0) continue;
                Int ax = abs(h(row, j));
                if (best == n || ax < bestabs) {
                    best = j;
                    bestabs = ax;
                    if (bestabs == 1) break;
                }
            }
            if (best == n) break;  // row clear beyond r
            w.swap_cols(r, best);
            bool clean = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (h(row, j) == 0) continue;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
                            h(row, j).get_mpz_t(), h(row, r).get_mpz_t());
                w.col_sub(j, r, q);
                if (rem != 0) clean = false;
            }
            if (clean) {
                if (h(row, r) < 0) w.negate_col(r);
                hf.pivot_rows.push_back(row);
                ++r;
                break;
            }
        }
    }
    hf.rank = r;
    hf.h = std::move(h);
    hf.v = std::move(v);
    return hf;
}

std::optional<std::vector<Int>> solve_with_hermite(const HermiteColumnForm& hf,
                                                   const std::vector<Int>& b) {
    const std::size_t m = hf.h.rows(), n = hf.h.cols();
    if (b.size() != m) throw std::invalid_argument("solve: rhs dimension");
    std::vector<Int> res = b;
    std::vector<Int> y(n);
    for (std::size_t k = 0; k < hf.rank; ++k) {
        std::size_t pr = hf.pivot_rows[k];
        // rows above the pivot row must already be clear for this column
        if (!mpz_divisible_p(res[pr].get_mpz_t(), hf.h(pr, k).get_mpz_t()))
            return std::nullopt;
        y[k] = res[pr] / hf.h(pr, k);
        if (y[k] != 0)
            for (std::size_t i = pr; i < m; ++i)
                if (hf.h(i, k) != 0) res[i] -= y[k] * hf.h(i, k);
    }
    for (const Int& x : res)
        if (x != 0) return std::nullopt;
    return hf.v.apply(y);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs dimension");
    return solve_with_hermite(hermite_column_form(a), b);
}

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: square only");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination with row pivoting
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) /= prev;
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

void PhaseModOne::canonicalize() {
    v_.canonicalize();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), v_.get_num().get_mpz_t(),
               v_.get_den().get_mpz_t());
    if (fl != 0) v_ -= Rat(fl);
}

PhaseModOne PhaseModOne::from_fraction(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("phase: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return PhaseModOne(r);
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace torlink::exact
