#include "torlink/chern_simons.hpp"

namespace torlink::cs {

Admissibility check_level(const CSLevel& level, const Triangulation& m) {
    if (level.k == 0) return {false, "level k must be nonzero"};
    chain::HomologyGroup h1 = m.homology(1);
    if (h1.betti != 0)
        throw UnsupportedError(
            "unsupported manifold class: first homology has a free part");
    Int p = h1.torsion.empty() ? Int(1) : h1.torsion.back();
    if (p == 1) return {true, ""};
    if (level.k % p == 0) return {true, ""};
    return {false, "level constraint violated: k = " + exact::to_string(p) +
                       "l required, got k = " + exact::to_string(level.k)};
}

Admissibility check_charge(const Int& q, const CycleClass& cls,
                           const Triangulation&) {
    if (q == 0) return {false, "charge q must be nonzero"};
    switch (cls.kind) {
        case CycleClass::Kind::trivial:
            return {true, ""};
        case CycleClass::Kind::torsion: {
            if (q % cls.degree == 0) return {true, ""};
            return {false, "charge constraint violated: q = " +
                               exact::to_string(cls.degree) +
                               "m required, got q = " + exact::to_string(q)};
        }
        case CycleClass::Kind::free_cycle:
            throw UnsupportedError("unsupported cycle class: free");
    }
    return {false, "unknown cycle class"};
}

namespace {

PhaseModOne phase_from(const Rat& pairing_total, const Int& k) {
    Rat scale(-1, 1);
    scale /= Rat(4 * k);
    return PhaseModOne(pairing_total * scale);
}

}  // namespace

WilsonReport wilson_report(const WilsonLink& link, const CSLevel& level) {
    if (!link.space) throw ValidationError("link has no manifold");
    const Triangulation& m = *link.space;
    if (link.components.empty())
        throw ValidationError("link needs at least one component");

    Admissibility lvl = check_level(level, m);
    if (!lvl.admissible) throw ConstraintError(lvl.reason);

    WilsonReport rep;
    rep.manifold_name = m.name();
    rep.level = level.k;

    const std::size_t n = link.components.size();
    for (std::size_t i = 0; i < n; ++i) {
        const WilsonComponent& comp = link.components[i];
        if (comp.framed.space != &m)
            throw ValidationError("component cycle lives on another manifold");
        linking::validate_framed(comp.framed);
        CycleClass cls = linking::classify(comp.framed.cycle, m);
        Admissibility ch = check_charge(comp.charge, cls, m);
        if (!ch.admissible) throw ConstraintError(ch.reason);
        ComponentReport cr;
        cr.name = comp.name.empty() ? "component-" + std::to_string(i + 1)
                                    : comp.name;
        cr.cls = std::move(cls);
        cr.charge = comp.charge;
        cr.self_linking = linking::self_linking(comp.framed).value;
        rep.components.push_back(std::move(cr));
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = link.components[i].framed;
            const auto& b = link.components[j].framed;
            for (const auto* x : {&a.cycle, &a.pushoff})
                for (const auto* y : {&b.cycle, &b.pushoff})
                    if (!linking::disjoint(*x, *y))
                        throw ValidationError(
                            "link components are not pairwise disjoint");
        }

    rep.linking_matrix.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        rep.linking_matrix[i][i] = rep.components[i].self_linking;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            rep.linking_matrix[i][j] =
                linking::linking_number(link.components[i].framed.cycle,
                                        link.components[j].framed.cycle, m)
                    .value;
            rep.linking_matrix[j][i] =
                linking::linking_number(link.components[j].framed.cycle,
                                        link.components[i].framed.cycle, m)
                    .value;
        }

    Rat total(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rat qi(rep.components[i].charge);
        total += qi * qi * rep.components[i].self_linking;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat qj(rep.components[j].charge);
            total += Rat(2) * qi * qj * rep.linking_matrix[i][j];
        }
    }
    rep.phase = phase_from(total, level.k);
    return rep;
}

ExpectationValue wilson_expectation(const WilsonLink& link,
                                    const CSLevel& level) {
    return {wilson_report(link, level).phase};
}

bool consistency_check_doubled_witness(const FramedCycle& fz, const Int& q,
                                       const CSLevel& level) {
    if (!fz.space) throw ValidationError("framed cycle has no manifold");
    const Triangulation& m = *fz.space;
    linking::validate_framed(fz);
    CycleClass cls = linking::classify(fz.cycle, m);
    if (cls.kind != CycleClass::Kind::trivial)
        throw ValidationError("doubled-witness check needs a trivial cycle");

    Int i1 = m.crossing_sum(*cls.witness, fz.pushoff);
    PhaseModOne direct = phase_from(Rat(q * q) * Rat(i1), level.k);

    auto c2 = m.bounding_surface(m.dual_to_primal(fz.cycle), 2);
    if (!c2) throw std::logic_error("doubled trivial cycle fails to bound");
    Int i2 = m.crossing_sum(*c2, fz.pushoff);
    Rat half(i2, 2);
    half.canonicalize();
    PhaseModOne via_double = phase_from(Rat(q * q) * half, level.k);

    return direct == via_double;
}

}  // namespace torlink::cs
