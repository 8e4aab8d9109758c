#pragma once

// Chain groups, boundary operators and integral homology of a finite
// complex. Chains are sparse; boundary matrices dense.

#include "torlink/exact.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace torlink::chain {

using exact::Int;
using exact::IntMatrix;

// Formal Z-linear combination of basis cells in a fixed degree.
struct IntegerChain {
    int degree = 0;
    std::map<std::size_t, Int> coeffs;  // basis index -> nonzero coefficient

    void add(std::size_t idx, const Int& c) {
        if (c == 0) return;
        Int& v = coeffs[idx];
        v += c;
        if (v == 0) coeffs.erase(idx);
    }
    bool is_zero() const { return coeffs.empty(); }

    IntegerChain scaled(const Int& f) const {
        IntegerChain r;
        r.degree = degree;
        if (f != 0)
            for (auto& [i, c] : coeffs) r.coeffs[i] = c * f;
        return r;
    }
    IntegerChain operator+(const IntegerChain& o) const {
        IntegerChain r = *this;
        for (auto& [i, c] : o.coeffs) r.add(i, c);
        return r;
    }
    IntegerChain operator-(const IntegerChain& o) const {
        IntegerChain r = *this;
        for (auto& [i, c] : o.coeffs) r.add(i, -c);
        return r;
    }
    bool operator==(const IntegerChain& o) const {
        return degree == o.degree && coeffs == o.coeffs;
    }

    std::vector<Int> dense(std::size_t n) const {
        std::vector<Int> v(n);
        for (auto& [i, c] : coeffs) v.at(i) = c;
        return v;
    }
    static IntegerChain from_dense(int degree, const std::vector<Int>& v) {
        IntegerChain r;
        r.degree = degree;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) r.coeffs[i] = v[i];
        return r;
    }
};

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // divisor chain, each entry > 1
    bool operator==(const HomologyGroup& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
};

// Coordinates of a cycle class in H_k: one entry per listed modulus.
// modulus > 1: torsion coordinate reduced to [0, modulus); modulus 0: free.
struct ClassProjection {
    IntMatrix pi;               // (#moduli) x n_k
    std::vector<Int> moduli;
};

class ChainComplex {
public:
    // boundaries[k-1] is d_k : C_k -> C_{k-1}, for k = 1..dim.
    ChainComplex(std::vector<std::size_t> basis_sizes,
                 std::vector<IntMatrix> boundaries);
    ChainComplex(ChainComplex&&) noexcept;
    ChainComplex& operator=(ChainComplex&&) noexcept;
    ~ChainComplex();

    std::size_t dimension() const { return basis_sizes_.size() - 1; }
    std::size_t basis_size(std::size_t k) const { return basis_sizes_.at(k); }
    const IntMatrix& boundary_matrix(std::size_t k) const;  // d_k, k >= 1

    IntegerChain boundary(const IntegerChain& c) const;
    bool is_cycle(const IntegerChain& c) const;

    HomologyGroup homology(std::size_t k) const;
    // Torsion exponent of H_k (1 when torsion-free).
    Int torsion_exponent(std::size_t k) const;

    std::vector<IntegerChain> torsion_generators(std::size_t k) const;
    const ClassProjection& class_projection(std::size_t k) const;
    // Class coordinates of a cycle; torsion entries reduced mod modulus.
    std::vector<Int> class_coords(const IntegerChain& z) const;

    void validate() const;  // throws unless d_{k-1} o d_k == 0 for all k

private:
    struct DegreeCache;
    struct Caches;
    const DegreeCache& degree_cache(std::size_t k) const;

    std::vector<std::size_t> basis_sizes_;
    std::vector<IntMatrix> boundaries_;
    mutable std::unique_ptr<Caches> caches_;  // lazily filled, guarded
};

}  // namespace torlink::chain
