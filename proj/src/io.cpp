#include "torlink/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace torlink::io {

using jsonv = nlohmann::ordered_json;
using linking::CycleClass;

namespace {

DualCycle steps_from_json(const jsonv& arr) {
    if (!arr.is_array()) throw ParseError("\"steps\" must be a list");
    DualCycle z;
    for (const auto& st : arr) {
        if (!st.is_array() || st.size() != 3 || !st[0].is_number_integer() ||
            !st[1].is_number_integer() || !st[2].is_number_integer())
            throw ParseError("cycle step must be [tetrahedron, face, sign]");
        z.steps.push_back({st[0].get<std::size_t>(), st[1].get<int>(),
                           st[2].get<int>()});
    }
    return z;
}

}  // namespace

LinkFile parse_link_text(const std::string& text) {
    jsonv j;
    try {
        j = jsonv::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("link file: ") + ex.what());
    }
    if (!j.is_object()) throw ParseError("link file: expected an object");
    for (auto& [key, _] : j.items())
        if (key != "cycles" && key != "components")
            throw ParseError("link file: unknown field \"" + key + "\"");

    LinkFile lf;
    if (j.contains("cycles")) {
        if (!j["cycles"].is_object())
            throw ParseError("\"cycles\" must be an object");
        for (auto& [cname, def] : j["cycles"].items()) {
            if (!def.is_object())
                throw ParseError("cycle \"" + cname + "\" must be an object");
            CycleDef cd;
            for (auto& [key, _] : def.items())
                if (key != "steps" && key != "designated")
                    throw ParseError("cycle \"" + cname +
                                     "\": unknown field \"" + key + "\"");
            if (def.contains("steps")) cd.steps = steps_from_json(def["steps"]);
            if (def.contains("designated")) {
                if (!def["designated"].is_string())
                    throw ParseError("\"designated\" must be a cycle name");
                cd.designated = def["designated"].get<std::string>();
            }
            if (cd.steps.has_value() == cd.designated.has_value())
                throw ParseError("cycle \"" + cname +
                                 "\" needs exactly one of steps/designated");
            lf.cycles.emplace(cname, std::move(cd));
        }
    }
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("\"components\" must be a list");
    for (const auto& comp : j["components"]) {
        if (!comp.is_object()) throw ParseError("component must be an object");
        ComponentDef cd;
        for (auto& [key, _] : comp.items())
            if (key != "cycle" && key != "pushoff" && key != "twist" &&
                key != "charge")
                throw ParseError("component: unknown field \"" + key + "\"");
        if (!comp.contains("cycle") || !comp["cycle"].is_string())
            throw ParseError("component needs a \"cycle\" name");
        cd.cycle = comp["cycle"].get<std::string>();
        if (comp.contains("pushoff")) {
            if (!comp["pushoff"].is_string())
                throw ParseError("\"pushoff\" must be a cycle name");
            cd.pushoff = comp["pushoff"].get<std::string>();
        }
        if (comp.contains("twist")) {
            if (!comp["twist"].is_number_integer())
                throw ParseError("\"twist\" must be an integer");
            cd.twist = Int(comp["twist"].get<long>());
        }
        if (cd.pushoff.has_value() == cd.twist.has_value())
            throw ParseError(
                "component needs exactly one of pushoff/twist");
        if (!comp.contains("charge") || !comp["charge"].is_number_integer())
            throw ParseError("component needs an integer \"charge\"");
        cd.charge = Int(comp["charge"].get<long>());
        lf.components.push_back(std::move(cd));
    }
    return lf;
}

LinkFile load_link_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_link_text(ss.str());
}

std::map<std::string, DualCycle> resolve_cycles(const LinkFile& lf,
                                                const Triangulation& m) {
    std::map<std::string, DualCycle> out;
    for (const auto& [cname, def] : lf.cycles) {
        DualCycle z;
        if (def.steps) {
            z = *def.steps;
        } else {
            const auto& des = m.designated_cycles();
            auto it = des.find(*def.designated);
            if (it == des.end())
                throw ValidationError("manifold " + m.name() +
                                      " has no designated cycle \"" +
                                      *def.designated + "\"");
            z = it->second;
        }
        m.validate_cycle(z);
        out.emplace(cname, std::move(z));
    }
    return out;
}

cs::WilsonLink resolve_link(const LinkFile& lf, const Triangulation& m) {
    std::map<std::string, DualCycle> cyc = resolve_cycles(lf, m);
    cs::WilsonLink link;
    link.space = &m;
    // everything already placed must be kept clear of default pushoffs
    std::vector<std::vector<std::size_t>> occupied;
    for (const auto& cd : lf.components) {
        if (!cyc.count(cd.cycle))
            throw ParseError("component references undeclared cycle \"" +
                             cd.cycle + "\"");
        occupied.push_back(cyc.at(cd.cycle).tets());
        if (cd.pushoff) {
            if (!cyc.count(*cd.pushoff))
                throw ParseError("component references undeclared cycle \"" +
                                 *cd.pushoff + "\"");
            occupied.push_back(cyc.at(*cd.pushoff).tets());
        }
    }
    for (std::size_t i = 0; i < lf.components.size(); ++i) {
        const ComponentDef& cd = lf.components[i];
        cs::WilsonComponent comp;
        comp.name = cd.cycle;
        comp.charge = cd.charge;
        comp.framed.space = &m;
        comp.framed.cycle = cyc.at(cd.cycle);
        if (cd.pushoff) {
            comp.framed.pushoff = cyc.at(*cd.pushoff);
        } else {
            std::vector<std::size_t> avoid;
            std::vector<std::size_t> own_tets = comp.framed.cycle.tets();
            std::set<std::size_t> own(own_tets.begin(), own_tets.end());
            for (std::size_t j = 0; j < occupied.size(); ++j)
                for (std::size_t t : occupied[j])
                    if (!own.count(t)) avoid.push_back(t);
            comp.framed.pushoff =
                linking::default_pushoff(m, comp.framed.cycle, *cd.twist,
                                         avoid);
            occupied.push_back(comp.framed.pushoff.tets());
        }
        link.components.push_back(std::move(comp));
    }
    return link;
}

void apply_charges(cs::WilsonLink& link, const std::vector<Int>& charges) {
    if (charges.size() != link.components.size())
        throw ParseError("charge list length does not match component count");
    for (std::size_t i = 0; i < charges.size(); ++i)
        link.components[i].charge = charges[i];
}

namespace {

std::string group_string(const chain::HomologyGroup& h) {
    std::vector<std::string> parts;
    if (h.betti == 1) parts.push_back("Z");
    if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
    for (const Int& d : h.torsion) parts.push_back("Z_" + exact::to_string(d));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::pair<std::string, std::string> decimal_value(const exact::PhaseModOne& ph,
                                                  int digits) {
    int d = std::min(std::max(digits, 1), 15);
    long double x = 2.0L * std::acos(-1.0L) * ph.value().get_d();
    char re[64], im[64];
    std::snprintf(re, sizeof re, "%.*Lf", d, std::cos(x));
    std::snprintf(im, sizeof im, "%.*Lf", d, std::sin(x));
    return {re, im};
}

}  // namespace

std::string homology_report_text(const Triangulation& m) {
    std::ostringstream out;
    out << "manifold: " << m.name() << "\n";
    for (std::size_t k = 0; k <= 3; ++k)
        out << "H_" << k << " = " << group_string(m.homology(k)) << "\n";
    return out.str();
}

std::string homology_report_json(const Triangulation& m) {
    jsonv j;
    j["manifold"] = m.name();
    j["homology"] = jsonv::array();
    for (std::size_t k = 0; k <= 3; ++k) {
        chain::HomologyGroup h = m.homology(k);
        jsonv g;
        g["degree"] = k;
        g["betti"] = h.betti;
        g["torsion"] = jsonv::array();
        for (const Int& d : h.torsion) g["torsion"].push_back(exact::to_string(d));
        g["group"] = group_string(h);
        j["homology"].push_back(std::move(g));
    }
    return j.dump(2) + "\n";
}

std::string classify_report_text(
    const Triangulation& m, const std::map<std::string, DualCycle>& cycles) {
    std::ostringstream out;
    out << "manifold: " << m.name() << "\n";
    for (const auto& [cname, z] : cycles) {
        CycleClass c = linking::classify(z, m);
        out << cname << ": " << linking::to_string(c);
        if (c.witness)
            out << " (witness with " << c.witness->coeffs.size()
                << " faces, boundary = " << exact::to_string(c.degree)
                << " * cycle)";
        out << "\n";
    }
    return out.str();
}

std::string classify_report_json(
    const Triangulation& m, const std::map<std::string, DualCycle>& cycles) {
    jsonv j;
    j["manifold"] = m.name();
    j["cycles"] = jsonv::array();
    for (const auto& [cname, z] : cycles) {
        CycleClass c = linking::classify(z, m);
        jsonv e;
        e["name"] = cname;
        e["class"] = linking::to_string(c);
        e["degree"] = exact::to_string(c.degree);
        j["cycles"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

namespace {

// Linking matrix of a framed link: self-linking on the diagonal.
std::vector<std::vector<exact::Rat>> matrix_of(const cs::WilsonLink& link) {
    const auto& m = *link.space;
    std::size_t n = link.components.size();
    std::vector<std::vector<exact::Rat>> mat(n, std::vector<exact::Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mat[i][i] = linking::self_linking(link.components[i].framed).value;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            mat[i][j] = linking::linking_number(link.components[i].framed.cycle,
                                                link.components[j].framed.cycle,
                                                m)
                            .value;
        }
    }
    return mat;
}

}  // namespace

std::string linking_report_text(const Triangulation& m,
                                const cs::WilsonLink& link) {
    auto mat = matrix_of(link);
    std::ostringstream out;
    out << "manifold: " << m.name() << "\n";
    for (std::size_t i = 0; i < link.components.size(); ++i) {
        CycleClass c = linking::classify(link.components[i].framed.cycle, m);
        out << link.components[i].name << ": " << linking::to_string(c) << "\n";
    }
    out << "linking matrix (diagonal: framed self-linking):\n";
    for (const auto& row : mat) {
        out << "  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? ", " : "") << exact::to_string(row[j]);
        out << "]\n";
    }
    return out.str();
}

std::string linking_report_json(const Triangulation& m,
                                const cs::WilsonLink& link) {
    auto mat = matrix_of(link);
    jsonv j;
    j["manifold"] = m.name();
    j["components"] = jsonv::array();
    for (const auto& comp : link.components) {
        CycleClass c = linking::classify(comp.framed.cycle, m);
        jsonv e;
        e["name"] = comp.name;
        e["class"] = linking::to_string(c);
        j["components"].push_back(std::move(e));
    }
    j["linking_matrix"] = jsonv::array();
    for (const auto& row : mat) {
        jsonv r = jsonv::array();
        for (const auto& v : row) r.push_back(exact::to_string(v));
        j["linking_matrix"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string wilson_report_text(const cs::WilsonReport& rep,
                               int decimal_digits) {
    std::ostringstream out;
    out << "manifold: " << rep.manifold_name << "\n";
    out << "level: " << exact::to_string(rep.level) << "\n";
    out << "components:\n";
    for (const auto& c : rep.components)
        out << "  " << c.name << ": class " << linking::to_string(c.cls)
            << ", charge " << exact::to_string(c.charge) << ", self-linking "
            << exact::to_string(c.self_linking) << "\n";
    out << "linking matrix:\n";
    for (const auto& row : rep.linking_matrix) {
        out << "  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? ", " : "") << exact::to_string(row[j]);
        out << "]\n";
    }
    out << "phase: " << exact::to_string(rep.phase.value()) << "\n";
    out << "value: exp(2*i*pi * " << exact::to_string(rep.phase.value())
        << ")\n";
    if (decimal_digits > 0) {
        auto [re, im] = decimal_value(rep.phase, decimal_digits);
        out << "value ~ " << re << " + " << im << "i\n";
    }
    return out.str();
}

std::string wilson_report_json(const cs::WilsonReport& rep,
                               int decimal_digits) {
    jsonv j;
    j["manifold"] = rep.manifold_name;
    j["level"] = exact::to_string(rep.level);
    j["components"] = jsonv::array();
    for (const auto& c : rep.components) {
        jsonv e;
        e["name"] = c.name;
        e["class"] = linking::to_string(c.cls);
        e["charge"] = exact::to_string(c.charge);
        e["self_linking"] = exact::to_string(c.self_linking);
        j["components"].push_back(std::move(e));
    }
    j["linking_matrix"] = jsonv::array();
    for (const auto& row : rep.linking_matrix) {
        jsonv r = jsonv::array();
        for (const auto& v : row) r.push_back(exact::to_string(v));
        j["linking_matrix"].push_back(std::move(r));
    }
    j["phase"] = exact::to_string(rep.phase.value());
    if (decimal_digits > 0) {
        auto [re, im] = decimal_value(rep.phase, decimal_digits);
        j["value_decimal"] = {{"re", re}, {"im", im}};
    }
    return j.dump(2) + "\n";
}

}  // namespace torlink::io
