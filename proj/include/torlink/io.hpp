#pragma once

// Link declaration files and report rendering.
//
// Link file schema (JSON):
//   {
//     "cycles": {
//       "name": {"steps": [[tet, face, sign], ...]},
//       "other": {"designated": "tau1"}
//     },
//     "components": [
//       {"cycle": "name", "pushoff": "other", "charge": 1},
//       {"cycle": "name", "twist": 0, "charge": 2}
//     ]
//   }
// A component frames its cycle either with a named pushoff cycle or with
// a default pushoff at the given twist. Unknown fields are rejected.

#include "torlink/chern_simons.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torlink::io {

using exact::Int;
using manifold::DualCycle;
using manifold::Triangulation;

struct CycleDef {
    std::optional<DualCycle> steps;
    std::optional<std::string> designated;
};

struct ComponentDef {
    std::string cycle;
    std::optional<std::string> pushoff;
    std::optional<Int> twist;
    Int charge = 0;
};

struct LinkFile {
    std::map<std::string, CycleDef> cycles;
    std::vector<ComponentDef> components;
};

LinkFile parse_link_text(const std::string& text);
LinkFile load_link_file(const std::filesystem::path& path);

// Named concrete cycles from a declaration, designated references
// resolved against the manifold.
std::map<std::string, DualCycle> resolve_cycles(const LinkFile& lf,
                                                const Triangulation& m);

// Fully framed link; default pushoffs are routed around every other
// declared component.
cs::WilsonLink resolve_link(const LinkFile& lf, const Triangulation& m);

// Optional override of the component charges, in declaration order.
void apply_charges(cs::WilsonLink& link, const std::vector<Int>& charges);

// Reports. Every exact value prints as a canonical rational.
// decimal_digits > 0 additionally renders the complex value (display only).
std::string homology_report_text(const Triangulation& m);
std::string homology_report_json(const Triangulation& m);
std::string classify_report_text(const Triangulation& m,
                                 const std::map<std::string, DualCycle>& cycles);
std::string classify_report_json(const Triangulation& m,
                                 const std::map<std::string, DualCycle>& cycles);
std::string linking_report_text(const Triangulation& m,
                                const cs::WilsonLink& link);
std::string linking_report_json(const Triangulation& m,
                                const cs::WilsonLink& link);
std::string wilson_report_text(const cs::WilsonReport& rep, int decimal_digits);
std::string wilson_report_json(const cs::WilsonReport& rep, int decimal_digits);

}  // namespace torlink::io
