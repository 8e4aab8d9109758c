#pragma once

// Oriented simplicial closed 3-manifolds: validated tetrahedral gluings,
// derived face/edge tables, the boundary chain complex, and closed walks
// in the dual 1-skeleton.
//
// Conventions fixed here and relied on everywhere else:
//  - faces are keyed by their sorted vertex triple; each face carries the
//    orientation induced from its FIRST-listed cobounding tetrahedron
//  - local face i of a tetrahedron is the face opposite its i-th vertex
//  - a dual walk crossing a face counts +1 when it exits the face's
//    first-listed tetrahedron

#include "torlink/chain.hpp"
#include "torlink/errors.hpp"

#include <array>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torlink::manifold {

using chain::ChainComplex;
using chain::HomologyGroup;
using chain::IntegerChain;
using exact::Int;

struct DualStep {
    std::size_t tet = 0;
    int exit_face = 0;  // local index 0..3
    int sign = 0;       // +1 when exiting the face's first-listed tet
    bool operator==(const DualStep&) const = default;
};

// Closed walk in the dual 1-skeleton; step i leads to step i+1's tet.
struct DualCycle {
    std::vector<DualStep> steps;

    std::size_t length() const { return steps.size(); }
    std::vector<std::size_t> tets() const {
        std::vector<std::size_t> t;
        t.reserve(steps.size());
        for (const DualStep& s : steps) t.push_back(s.tet);
        return t;
    }
    bool operator==(const DualCycle&) const = default;
};

class Triangulation {
public:
    Triangulation(std::string name, std::size_t vertex_count,
                  std::vector<std::array<int, 4>> tets);

    Triangulation(Triangulation&&) noexcept;
    Triangulation& operator=(Triangulation&&) noexcept;
    ~Triangulation();

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return nverts_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t face_count() const { return faces_.size(); }
    std::size_t tet_count() const { return tets_.size(); }

    const std::array<int, 4>& tet(std::size_t t) const { return tets_.at(t); }
    std::pair<int, int> edge(std::size_t e) const { return edges_.at(e); }
    const std::array<int, 3>& face(std::size_t f) const { return faces_.at(f); }

    std::size_t tet_face(std::size_t t, int local) const;
    std::size_t tet_neighbor(std::size_t t, int local) const;
    // +1 when t is the face's first-listed cobounding tet, -1 second.
    int face_side(std::size_t f, std::size_t t) const;
    // The two cobounding tets of a face, first-listed first.
    std::pair<std::size_t, std::size_t> face_tets(std::size_t f) const;

    const ChainComplex& complex() const { return *complex_; }
    HomologyGroup homology(std::size_t k) const { return complex_->homology(k); }

    // Closed tet walk -> DualCycle with derived signs.
    DualCycle cycle_from_tets(const std::vector<std::size_t>& walk) const;
    // Throws ValidationError unless closed, face-adjacent, signs correct.
    void validate_cycle(const DualCycle& z) const;

    // Primal 1-cycle homologous to a dual cycle.
    IntegerChain dual_to_primal(const DualCycle& z) const;

    // Signed crossings of a dual cycle through the support of a 2-chain.
    Int crossing_sum(const IntegerChain& surface, const DualCycle& z) const;

    // 2-chain with boundary mult * (primal image of z1), if one exists.
    std::optional<IntegerChain> bounding_surface(const IntegerChain& z1,
                                                 const Int& mult) const;

    const std::map<std::string, DualCycle>& designated_cycles() const;
    void set_designated(const std::string& cname, DualCycle z);
    void set_designated_provider(
        std::function<std::map<std::string, DualCycle>(const Triangulation&)> p);

private:
    struct Caches;

    std::string name_;
    std::size_t nverts_ = 0;
    std::vector<std::array<int, 4>> tets_;
    std::vector<std::array<int, 3>> faces_;             // sorted triples
    std::vector<std::pair<int, int>> edges_;            // sorted pairs
    std::vector<std::array<std::size_t, 4>> tet_faces_;
    std::vector<std::array<std::pair<std::size_t, int>, 2>> face_tets_;
    std::map<std::pair<int, int>, std::size_t> edge_index_;
    std::unique_ptr<ChainComplex> complex_;
    std::unique_ptr<Caches> caches_;

    void build_tables();
    void validate_structure();
};

Triangulation build_s3();
Triangulation build_rp3();
Triangulation build_lens(int p);  // 2 <= p <= 8
// Refined 3-sphere carrying the designated Hopf pair "hopf_a" / "hopf_b".
Triangulation build_s3_fine();

Triangulation load_triangulation(const std::filesystem::path& path);
Triangulation triangulation_from_json_text(const std::string& text,
                                           const std::string& fallback_name);
std::string triangulation_to_json_text(const Triangulation& m);

// Resolves s3, rp3, lens-2 .. lens-8, s3fine; nullopt for anything else.
std::optional<Triangulation> builtin_manifold(const std::string& name);

// Fundamental cycles of the dual graph restricted to `allowed` tets
// (empty mask: all tets), as simple closed tet walks, deterministically
// ordered. Spanning-forest construction, one cycle per chord.
std::vector<std::vector<std::size_t>> fundamental_dual_cycles(
    const Triangulation& m, const std::vector<char>& allowed);

}  // namespace torlink::manifold
