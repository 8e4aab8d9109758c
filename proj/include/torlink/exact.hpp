#pragma once

// Exact integer / rational linear algebra: dense arbitrary-precision
// matrices, Hermite and Smith normal forms, integer linear solves, and
// mod-1 rational phases. Everything here is deterministic and exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torlink::exact {

using Int = mpz_class;
using Rat = mpq_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const {
        for (const Int& x : e_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // A*x
    IntMatrix transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// U * A * V = D with U, V unimodular, D diagonal with positive divisors
// d1 | d2 | ... | d_rank followed by zeros.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::size_t rank = 0;
};

// Same plus the inverse transforms, for homology coordinate maps.
struct SmithTransforms {
    IntMatrix u, u_inv, v, v_inv, d;
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);
// Untracked sides are left as empty matrices.
SmithTransforms smith_with_inverses(const IntMatrix& a, bool track_u = true,
                                    bool track_v = true);
// Divisors only (no transforms); cheaper, used for homology groups.
std::vector<Int> smith_divisors(const IntMatrix& a);

// Column-style Hermite form: H = A * V with V unimodular, H in column
// echelon form (pivot rows strictly increasing, pivots positive).
struct HermiteColumnForm {
    IntMatrix h, v;
    std::vector<std::size_t> pivot_rows;  // one per pivot column
    std::size_t rank = 0;
};

HermiteColumnForm hermite_column_form(const IntMatrix& a);

// Some integer solution of A x = b, or nullopt when none exists over Z.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_with_hermite(const HermiteColumnForm& hf,
                                                   const std::vector<Int>& b);

Int det(const IntMatrix& a);  // square matrices, Bareiss

// Exact rational residue in R/Z, canonical representative in [0, 1).
class PhaseModOne {
public:
    PhaseModOne() : v_(0) {}
    explicit PhaseModOne(const Rat& r) : v_(r) { canonicalize(); }
    static PhaseModOne from_fraction(const Int& num, const Int& den);

    const Rat& value() const { return v_; }

    PhaseModOne operator+(const PhaseModOne& o) const {
        return PhaseModOne(v_ + o.v_);
    }
    PhaseModOne operator-() const { return PhaseModOne(-v_); }
    PhaseModOne scaled(const Rat& f) const { return PhaseModOne(v_ * f); }
    PhaseModOne scaled(const Int& n) const { return scaled(Rat(n)); }

    bool operator==(const PhaseModOne& o) const { return v_ == o.v_; }
    bool operator!=(const PhaseModOne& o) const { return v_ != o.v_; }

private:
    void canonicalize();
    Rat v_;
};

inline PhaseModOne phase_add(const PhaseModOne& a, const PhaseModOne& b) {
    return a + b;
}
inline PhaseModOne phase_scale(const PhaseModOne& p, const Rat& f) {
    return p.scaled(f);
}

std::string to_string(const Rat& r);   // "num/den", or "n" when integral
std::string to_string(const Int& n);

}  // namespace torlink::exact
