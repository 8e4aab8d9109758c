#pragma once

// Cycle classification, transverse intersection, rational linking numbers
// and framed self-linking for dual cycles on a closed oriented 3-manifold.
//
// All chains bounding a cycle live in the primal 2-skeleton while the
// cycles themselves are walks in the dual 1-skeleton; the intersection
// pairing between the two is a finite signed crossing count.

#include "torlink/manifold.hpp"

#include <optional>
#include <string>

namespace torlink::linking {

using chain::IntegerChain;
using exact::Int;
using exact::Rat;
using manifold::DualCycle;
using manifold::Triangulation;

struct CycleClass {
    enum class Kind { trivial, torsion, free_cycle };
    Kind kind = Kind::trivial;
    // Minimal p >= 1 with p*z bounding; 0 for free classes.
    Int degree = 0;
    // 2-chain with boundary degree * z; absent for free classes.
    std::optional<IntegerChain> witness;
};

std::string to_string(const CycleClass& c);  // "trivial", "torsion(p)", "free"

struct FramedCycle {
    const Triangulation* space = nullptr;
    DualCycle cycle;
    DualCycle pushoff;
};

struct LinkingNumber {
    Rat value;
    bool operator==(const LinkingNumber& o) const { return value == o.value; }
};

// No shared tetrahedra (hence no shared face crossings).
bool disjoint(const DualCycle& a, const DualCycle& b);

CycleClass classify(const DualCycle& z, const Triangulation& m);

// Signed count of z's crossings through the faces of c, weighted by the
// face coefficients of c.
Int intersection_number(const IntegerChain& c, const DualCycle& z,
                        const Triangulation& m);

// Resolves the FIRST argument: with witness C, boundary C = p*z1, the
// value is intersection_number(C, z2) / p.
LinkingNumber linking_number(const DualCycle& z1, const DualCycle& z2,
                             const Triangulation& m);

LinkingNumber self_linking(const FramedCycle& fz);

// Throws unless fz satisfies the framed-cycle invariants (valid cycles,
// combinatorial disjointness, matching class kind and degree).
void validate_framed(const FramedCycle& fz);

// Disjoint parallel walk homologous to z whose self-linking changes by
// exactly `twist` relative to the twist-0 pushoff. Requires z simple.
// Tetrahedra listed in `avoid` are kept clear as well (other link
// components, for instance).
DualCycle default_pushoff(const Triangulation& m, const DualCycle& z,
                          const Int& twist,
                          const std::vector<std::size_t>& avoid = {});

}  // namespace torlink::linking
