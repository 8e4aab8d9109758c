#include "torlink/linking.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace torlink::linking {

using exact::IntMatrix;

std::string to_string(const CycleClass& c) {
    switch (c.kind) {
        case CycleClass::Kind::trivial:
            return "trivial";
        case CycleClass::Kind::torsion:
            return "torsion(" + exact::to_string(c.degree) + ")";
        case CycleClass::Kind::free_cycle:
            return "free";
    }
    return "?";
}

bool disjoint(const DualCycle& a, const DualCycle& b) {
    std::set<std::size_t> ta;
    for (const auto& s : a.steps) ta.insert(s.tet);
    for (const auto& s : b.steps)
        if (ta.count(s.tet)) return false;
    return true;
}

CycleClass classify(const DualCycle& z, const Triangulation& m) {
    m.validate_cycle(z);
    IntegerChain z1 = m.dual_to_primal(z);
    Int bound = m.complex().torsion_exponent(1);
    for (Int p = 1; p <= bound; ++p) {
        auto s = m.bounding_surface(z1, p);
        if (s) {
            CycleClass c;
            c.kind = p == 1 ? CycleClass::Kind::trivial
                            : CycleClass::Kind::torsion;
            c.degree = p;
            c.witness = std::move(*s);
            return c;
        }
    }
    if (m.homology(1).betti == 0)
        throw std::logic_error("cycle order exceeds the torsion exponent");
    CycleClass c;
    c.kind = CycleClass::Kind::free_cycle;
    return c;
}

Int intersection_number(const IntegerChain& c, const DualCycle& z,
                        const Triangulation& m) {
    return m.crossing_sum(c, z);
}

LinkingNumber linking_number(const DualCycle& z1, const DualCycle& z2,
                             const Triangulation& m) {
    if (!disjoint(z1, z2))
        throw ValidationError("cycles are not combinatorially disjoint");
    CycleClass c1 = classify(z1, m);
    if (c1.kind == CycleClass::Kind::free_cycle)
        throw UnsupportedError("free cycle has no defined linking number");
    m.validate_cycle(z2);
    Rat v(m.crossing_sum(*c1.witness, z2), c1.degree);
    v.canonicalize();
    return {v};
}

void validate_framed(const FramedCycle& fz) {
    if (!fz.space) throw ValidationError("framed cycle has no manifold");
    fz.space->validate_cycle(fz.cycle);
    fz.space->validate_cycle(fz.pushoff);
    if (!disjoint(fz.cycle, fz.pushoff))
        throw ValidationError("pushoff shares a tetrahedron with its cycle");
    CycleClass a = classify(fz.cycle, *fz.space);
    CycleClass b = classify(fz.pushoff, *fz.space);
    if (a.kind != b.kind || a.degree != b.degree)
        throw ValidationError("pushoff is not homologous to its cycle");
}

LinkingNumber self_linking(const FramedCycle& fz) {
    validate_framed(fz);
    return linking_number(fz.cycle, fz.pushoff, *fz.space);
}

namespace {

// Directed Euler circuit through every arc, starting at `base`.
std::vector<std::size_t> euler_circuit(
    std::map<std::size_t, std::vector<std::size_t>>& adj, std::size_t base) {
    std::vector<std::size_t> stack{base}, circuit;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        auto& out = adj[v];
        if (out.empty()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            stack.push_back(out.back());
            out.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    for (auto& [v, out] : adj)
        if (!out.empty())
            throw ValidationError("no disjoint parallel route exists");
    circuit.pop_back();  // closed: last equals first
    return circuit;
}

}  // namespace

DualCycle default_pushoff(const Triangulation& m, const DualCycle& z,
                          const Int& twist,
                          const std::vector<std::size_t>& avoid) {
    m.validate_cycle(z);
    {
        std::set<std::size_t> seen;
        for (const auto& s : z.steps)
            if (!seen.insert(s.tet).second)
                throw ValidationError("default pushoff needs a simple cycle");
    }
    CycleClass cls = classify(z, m);
    if (cls.kind == CycleClass::Kind::free_cycle)
        throw UnsupportedError("free cycle has no defined self-linking");
    const Int p = cls.degree;
    const IntegerChain& witness = *cls.witness;

    std::vector<char> allowed(m.tet_count(), 1);
    for (const auto& s : z.steps) allowed[s.tet] = 0;
    for (std::size_t t : avoid) allowed.at(t) = 0;
    std::vector<std::vector<std::size_t>> walks =
        manifold::fundamental_dual_cycles(m, allowed);
    const std::size_t n = walks.size();

    const auto& moduli = m.complex().class_projection(1).moduli;
    std::vector<Int> target =
        m.complex().class_coords(m.dual_to_primal(z));
    std::size_t slack = 0;
    for (const Int& md : moduli)
        if (md > 1) ++slack;

    // Row 0: intersection with the witness; remaining rows: homology
    // class per listed modulus, torsion rows with a modulus slack column.
    IntMatrix a(1 + moduli.size(), n + slack);
    std::vector<std::vector<Int>> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
        DualCycle zi = m.cycle_from_tets(walks[i]);
        a(0, i) = m.crossing_sum(witness, zi);
        coords[i] = m.complex().class_coords(m.dual_to_primal(zi));
        for (std::size_t j = 0; j < moduli.size(); ++j)
            a(1 + j, i) = coords[i][j];
    }
    {
        std::size_t col = n;
        for (std::size_t j = 0; j < moduli.size(); ++j)
            if (moduli[j] > 1) a(1 + j, col++) = moduli[j];
    }
    exact::HermiteColumnForm hf = exact::hermite_column_form(a);

    auto try_total = [&](const Int& total) {
        std::vector<Int> b(1 + moduli.size());
        b[0] = total;
        for (std::size_t j = 0; j < moduli.size(); ++j) b[1 + j] = target[j];
        return exact::solve_with_hermite(hf, b);
    };

    // Base crossing count at twist zero: smallest residue in [0, p).
    std::optional<Int> base_residue;
    for (Int r = 0; r < p; ++r)
        if (try_total(r)) {
            base_residue = r;
            break;
        }
    if (!base_residue)
        throw ValidationError("no disjoint parallel route exists");
    auto sol = try_total(p * twist + *base_residue);
    if (!sol) throw ValidationError("no disjoint parallel route exists");

    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < n; ++i)
        if ((*sol)[i] != 0) selected.push_back(i);

    if (selected.empty()) {
        // Null route: out and back through one free face.
        for (std::size_t t = 0; t < m.tet_count(); ++t) {
            if (!allowed[t]) continue;
            for (int l = 0; l < 4; ++l) {
                std::size_t o = m.tet_neighbor(t, l);
                if (allowed[o]) return m.cycle_from_tets({t, o});
            }
        }
        throw ValidationError("no disjoint parallel route exists");
    }

    std::map<std::size_t, std::vector<std::size_t>> adj;
    auto add_loop = [&](const std::vector<std::size_t>& tets, bool reversed) {
        std::vector<std::size_t> w = tets;
        if (reversed) std::reverse(w.begin(), w.end());
        for (std::size_t i = 0; i < w.size(); ++i)
            adj[w[i]].push_back(w[(i + 1) % w.size()]);
    };
    for (std::size_t i : selected) {
        Int c = (*sol)[i];
        unsigned long reps = mpz_get_ui(Int(abs(c)).get_mpz_t());
        for (unsigned long k = 0; k < reps; ++k) add_loop(walks[i], c < 0);
    }

    // Tree paths joining every selected loop to the first one; traversed
    // in both directions they leave crossings and homology untouched.
    std::size_t base = walks[selected[0]][0];
    std::vector<std::size_t> parent(m.tet_count(), m.tet_count());
    {
        std::queue<std::size_t> q;
        q.push(base);
        parent[base] = base;
        while (!q.empty()) {
            std::size_t t = q.front();
            q.pop();
            for (int l = 0; l < 4; ++l) {
                std::size_t o = m.tet_neighbor(t, l);
                if (allowed[o] && parent[o] == m.tet_count()) {
                    parent[o] = t;
                    q.push(o);
                }
            }
        }
    }
    for (std::size_t i : selected) {
        std::size_t s = walks[i][0];
        if (s == base) continue;
        if (parent[s] == m.tet_count())
            throw ValidationError("no disjoint parallel route exists");
        std::vector<std::size_t> path{s};
        while (path.back() != base) path.push_back(parent[path.back()]);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            adj[path[k]].push_back(path[k + 1]);
            adj[path[k + 1]].push_back(path[k]);
        }
    }

    return m.cycle_from_tets(euler_circuit(adj, base));
}

}  // namespace torlink::linking
