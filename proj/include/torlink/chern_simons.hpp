#pragma once

// Level/charge admissibility and Wilson-line expectation values as exact
// roots of unity. The expectation of a link with components (Z_i, q_i)
// at level k has phase
//     -(1/4k) * [ sum_i q_i^2 SL_i  +  2 sum_{i<j} q_i q_j L_ij ]  (mod 1)
// with SL_i the framed self-linking and L_ij the pairwise linking.

#include "torlink/linking.hpp"

#include <string>
#include <vector>

namespace torlink::cs {

using exact::Int;
using exact::PhaseModOne;
using exact::Rat;
using linking::CycleClass;
using linking::FramedCycle;
using manifold::Triangulation;

struct CSLevel {
    Int k;
};

struct WilsonComponent {
    std::string name;
    FramedCycle framed;
    Int charge;
};

struct WilsonLink {
    const Triangulation* space = nullptr;
    std::vector<WilsonComponent> components;
};

struct Admissibility {
    bool admissible = false;
    std::string reason;  // empty when admissible
};

struct ExpectationValue {
    PhaseModOne phase;  // the value is exp{2 i pi phase}
};

// Admissible iff p | k for p the torsion exponent of H_1; manifolds with
// free H_1 are outside the supported class.
Admissibility check_level(const CSLevel& level, const Triangulation& m);

// Trivial classes accept every charge; torsion degree p requires p | q.
Admissibility check_charge(const Int& q, const CycleClass& cls,
                           const Triangulation& m);

ExpectationValue wilson_expectation(const WilsonLink& link,
                                    const CSLevel& level);

// Evaluates a trivial framed cycle both through its degree-1 witness and
// through an independently solved degree-2 witness of the doubled cycle;
// the two phases must agree.
bool consistency_check_doubled_witness(const FramedCycle& fz, const Int& q,
                                       const CSLevel& level);

// Full result record for reporting.
struct ComponentReport {
    std::string name;
    CycleClass cls;
    Int charge;
    Rat self_linking;
};

struct WilsonReport {
    std::string manifold_name;
    Int level;
    std::vector<ComponentReport> components;
    std::vector<std::vector<Rat>> linking_matrix;  // diagonal: self-linking
    PhaseModOne phase;
};

WilsonReport wilson_report(const WilsonLink& link, const CSLevel& level);

}  // namespace torlink::cs
