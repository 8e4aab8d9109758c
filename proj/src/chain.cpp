#include "torlink/chain.hpp"

#include <stdexcept>

namespace torlink::chain {

using exact::smith_divisors;
using exact::smith_with_inverses;
using exact::SmithTransforms;

struct ChainComplex::DegreeCache {
    ClassProjection proj;
    std::vector<IntegerChain> generators;
};

struct ChainComplex::Caches {
    std::mutex mu;
    std::vector<std::vector<Int>> divisors;  // per d_k
    std::vector<bool> divisors_done;
    std::vector<std::shared_ptr<DegreeCache>> deg;
};

ChainComplex::ChainComplex(std::vector<std::size_t> basis_sizes,
                           std::vector<IntMatrix> boundaries)
    : basis_sizes_(std::move(basis_sizes)), boundaries_(std::move(boundaries)) {
    if (basis_sizes_.empty())
        throw std::invalid_argument("chain complex needs at least degree 0");
    if (boundaries_.size() != basis_sizes_.size() - 1)
        throw std::invalid_argument("chain complex: one boundary map per degree >= 1");
    for (std::size_t k = 1; k < basis_sizes_.size(); ++k) {
        const IntMatrix& d = boundaries_[k - 1];
        if (d.rows() != basis_sizes_[k - 1] || d.cols() != basis_sizes_[k])
            throw std::invalid_argument("chain complex: boundary shape mismatch");
    }
    caches_ = std::make_unique<Caches>();
    caches_->divisors.resize(basis_sizes_.size());
    caches_->divisors_done.assign(basis_sizes_.size(), false);
    caches_->deg.resize(basis_sizes_.size());
}

ChainComplex::ChainComplex(ChainComplex&&) noexcept = default;
ChainComplex& ChainComplex::operator=(ChainComplex&&) noexcept = default;
ChainComplex::~ChainComplex() = default;

const IntMatrix& ChainComplex::boundary_matrix(std::size_t k) const {
    if (k < 1 || k > dimension())
        throw std::out_of_range("boundary_matrix: degree out of range");
    return boundaries_[k - 1];
}

IntegerChain ChainComplex::boundary(const IntegerChain& c) const {
    if (c.degree < 1)
        throw std::invalid_argument("boundary: degree 0 chain has no boundary");
    const IntMatrix& d = boundary_matrix(static_cast<std::size_t>(c.degree));
    IntegerChain r;
    r.degree = c.degree - 1;
    for (auto& [j, coef] : c.coeffs) {
        if (j >= d.cols()) throw std::out_of_range("boundary: index out of range");
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (d(i, j) != 0) r.add(i, d(i, j) * coef);
    }
    return r;
}

bool ChainComplex::is_cycle(const IntegerChain& c) const {
    if (c.degree == 0) return true;
    return boundary(c).is_zero();
}

void ChainComplex::validate() const {
    for (std::size_t k = 2; k <= dimension(); ++k) {
        if (!(boundaries_[k - 2] * boundaries_[k - 1]).is_zero())
            throw std::runtime_error("chain complex: d o d != 0");
    }
}

HomologyGroup ChainComplex::homology(std::size_t k) const {
    if (k > dimension()) throw std::out_of_range("homology: degree out of range");
    auto divisors_of = [&](std::size_t deg) -> std::vector<Int> {
        // elementary divisors of d_deg; empty for deg 0 or deg > dim
        if (deg < 1 || deg > dimension()) return {};
        std::lock_guard<std::mutex> lk(caches_->mu);
        if (!caches_->divisors_done[deg]) {
            caches_->divisors[deg] = smith_divisors(boundaries_[deg - 1]);
            caches_->divisors_done[deg] = true;
        }
        return caches_->divisors[deg];
    };
    std::vector<Int> dk = divisors_of(k);
    std::vector<Int> dk1 = divisors_of(k + 1);
    HomologyGroup h;
    h.betti = basis_sizes_[k] - dk.size() - dk1.size();
    for (const Int& d : dk1)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

Int ChainComplex::torsion_exponent(std::size_t k) const {
    HomologyGroup h = homology(k);
    return h.torsion.empty() ? Int(1) : h.torsion.back();
}

const ChainComplex::DegreeCache& ChainComplex::degree_cache(std::size_t k) const {
    if (k > dimension()) throw std::out_of_range("degree out of range");
    std::lock_guard<std::mutex> lk(caches_->mu);
    if (caches_->deg[k]) return *caches_->deg[k];

    auto cache = std::make_shared<DegreeCache>();
    const std::size_t nk = basis_sizes_[k];

    // kernel of d_k in the coordinates given by V of its Smith form
    IntMatrix v1, v1_inv;
    std::size_t r1;
    if (k >= 1) {
        SmithTransforms s1 =
            smith_with_inverses(boundaries_[k - 1], false, true);
        v1 = std::move(s1.v);
        v1_inv = std::move(s1.v_inv);
        r1 = s1.rank;
    } else {
        v1 = IntMatrix::identity(nk);
        v1_inv = IntMatrix::identity(nk);
        r1 = 0;
    }
    const std::size_t m = nk - r1;  // kernel rank

    // image of d_{k+1} expressed in kernel coordinates
    IntMatrix b(m, k + 1 <= dimension() ? basis_sizes_[k + 1] : 0);
    if (k + 1 <= dimension()) {
        IntMatrix prod = v1_inv * boundaries_[k];
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (prod(i, j) != 0)
                    throw std::logic_error("image not contained in kernel");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                b(i, j) = prod(r1 + i, j);
    }
    SmithTransforms s2 = smith_with_inverses(b, true, false);

    // kernel-coordinate rows of v1_inv
    IntMatrix kproj(m, nk);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nk; ++j) kproj(i, j) = v1_inv(r1 + i, j);
    IntMatrix full = s2.u * kproj;  // m x nk, row i has modulus d_i (or 0)

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m; ++i) {
        Int mod = i < s2.rank ? s2.d(i, i) : Int(0);
        if (mod == 1) continue;  // trivial factor
        keep.push_back(i);
        cache->proj.moduli.push_back(mod);
    }
    cache->proj.pi = IntMatrix(keep.size(), nk);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t j = 0; j < nk; ++j)
            cache->proj.pi(r, j) = full(keep[r], j);

    // torsion generators: kernel basis columns combined through u_inv
    for (std::size_t i = 0; i < s2.rank; ++i) {
        if (s2.d(i, i) <= 1) continue;
        IntegerChain g;
        g.degree = static_cast<int>(k);
        for (std::size_t row = 0; row < nk; ++row) {
            Int acc = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (s2.u_inv(j, i) != 0 && v1(row, r1 + j) != 0)
                    acc += v1(row, r1 + j) * s2.u_inv(j, i);
            g.add(row, acc);
        }
        cache->generators.push_back(std::move(g));
    }

    caches_->deg[k] = std::move(cache);
    return *caches_->deg[k];
}

std::vector<IntegerChain> ChainComplex::torsion_generators(std::size_t k) const {
    return degree_cache(k).generators;
}

const ClassProjection& ChainComplex::class_projection(std::size_t k) const {
    return degree_cache(k).proj;
}

std::vector<Int> ChainComplex::class_coords(const IntegerChain& z) const {
    const ClassProjection& p = class_projection(static_cast<std::size_t>(z.degree));
    std::vector<Int> out(p.moduli.size());
    for (std::size_t r = 0; r < p.moduli.size(); ++r) {
        Int acc = 0;
        for (auto& [j, c] : z.coeffs) acc += p.pi(r, j) * c;
        if (p.moduli[r] > 1)
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), p.moduli[r].get_mpz_t());
        out[r] = acc;
    }
    return out;
}

}  // namespace torlink::chain
