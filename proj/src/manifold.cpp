#include "torlink/manifold.hpp"

#include "rp3_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace torlink::manifold {

using exact::HermiteColumnForm;
using exact::IntMatrix;
using json = nlohmann::json;

namespace {

// Sign of the sorted face triple relative to the orientation it inherits
// from the given tetrahedron tuple when the vertex at `local` is omitted.
int induced_face_sign(const std::array<int, 4>& tet, int local) {
    std::array<int, 3> tri;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != local) tri[k++] = tet[i];
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (tri[i] > tri[j]) ++inv;
    int parity = (inv % 2 == 0) ? 1 : -1;
    return (local % 2 == 0) ? parity : -parity;
}

std::array<int, 3> face_key(const std::array<int, 4>& tet, int local) {
    std::array<int, 3> tri;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != local) tri[k++] = tet[i];
    std::sort(tri.begin(), tri.end());
    return tri;
}

// Flip tetrahedra along face adjacencies until all shared faces carry
// opposite induced orientations; throws when no such assignment exists.
void orient_coherently(std::vector<std::array<int, 4>>& tets) {
    std::map<std::array<int, 3>, std::vector<std::size_t>> at;
    for (std::size_t t = 0; t < tets.size(); ++t)
        for (int l = 0; l < 4; ++l) at[face_key(tets[t], l)].push_back(t);

    auto local_of = [&](std::size_t t, const std::array<int, 3>& key) {
        for (int l = 0; l < 4; ++l)
            if (face_key(tets[t], l) == key) return l;
        throw std::logic_error("face not on tetrahedron");
    };

    std::vector<char> seen(tets.size(), 0);
    for (std::size_t start = 0; start < tets.size(); ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            std::size_t t = q.front();
            q.pop();
            for (int l = 0; l < 4; ++l) {
                std::array<int, 3> key = face_key(tets[t], l);
                auto& inc = at[key];
                if (inc.size() != 2) continue;  // caught by validation later
                std::size_t t2 = inc[0] == t ? inc[1] : inc[0];
                int s1 = induced_face_sign(tets[t], l);
                int s2 = induced_face_sign(tets[t2], local_of(t2, key));
                if (!seen[t2]) {
                    if (s1 == s2) std::swap(tets[t2][2], tets[t2][3]);
                    seen[t2] = 1;
                    q.push(t2);
                } else if (s1 == s2) {
                    throw ValidationError("orientation mismatch");
                }
            }
        }
    }
}

}  // namespace

struct Triangulation::Caches {
    std::mutex mu;
    std::optional<HermiteColumnForm> h2;
    bool designated_done = false;
    std::map<std::string, DualCycle> designated;
    std::function<std::map<std::string, DualCycle>(const Triangulation&)>
        provider;
};

Triangulation::Triangulation(Triangulation&&) noexcept = default;
Triangulation& Triangulation::operator=(Triangulation&&) noexcept = default;
Triangulation::~Triangulation() = default;

Triangulation::Triangulation(std::string name, std::size_t vertex_count,
                             std::vector<std::array<int, 4>> tets)
    : name_(std::move(name)),
      nverts_(vertex_count),
      tets_(std::move(tets)),
      caches_(std::make_unique<Caches>()) {
    build_tables();
    validate_structure();
}

void Triangulation::build_tables() {
    if (tets_.empty()) throw ValidationError("empty triangulation");
    std::set<std::array<int, 4>> vertex_sets;
    for (const auto& t : tets_) {
        std::array<int, 4> s = t;
        std::sort(s.begin(), s.end());
        for (int v : s)
            if (v < 0 || static_cast<std::size_t>(v) >= nverts_)
                throw ValidationError("tetrahedron vertex out of range");
        if (s[0] == s[1] || s[1] == s[2] || s[2] == s[3])
            throw ValidationError("degenerate tetrahedron");
        if (!vertex_sets.insert(s).second)
            throw ValidationError("duplicate tetrahedron");
    }

    std::map<std::array<int, 3>, std::size_t> face_index;
    tet_faces_.assign(tets_.size(), {});
    for (std::size_t t = 0; t < tets_.size(); ++t)
        for (int l = 0; l < 4; ++l) {
            std::array<int, 3> key = face_key(tets_[t], l);
            auto it = face_index.find(key);
            std::size_t f;
            if (it == face_index.end()) {
                f = faces_.size();
                face_index.emplace(key, f);
                faces_.push_back(key);
                face_tets_.push_back({std::pair<std::size_t, int>{t, l},
                                      std::pair<std::size_t, int>{t, l}});
                face_tets_.back()[1].first = tets_.size();  // unfilled marker
            } else {
                f = it->second;
                if (face_tets_[f][1].first != tets_.size())
                    throw ValidationError("non-manifold face");
                face_tets_[f][1] = {t, l};
            }
            tet_faces_[t][l] = f;
        }

    std::set<std::pair<int, int>> edge_set;
    for (const auto& tri : faces_) {
        edge_set.insert({tri[0], tri[1]});
        edge_set.insert({tri[0], tri[2]});
        edge_set.insert({tri[1], tri[2]});
    }
    edges_.assign(edge_set.begin(), edge_set.end());
    for (std::size_t e = 0; e < edges_.size(); ++e) edge_index_[edges_[e]] = e;
}

void Triangulation::validate_structure() {
    const std::size_t V = nverts_, E = edges_.size(), F = faces_.size(),
                      T = tets_.size();

    for (std::size_t f = 0; f < F; ++f) {
        if (face_tets_[f][1].first == T) throw ValidationError("boundary face");
        auto [t1, l1] = face_tets_[f][0];
        auto [t2, l2] = face_tets_[f][1];
        if (induced_face_sign(tets_[t1], l1) == induced_face_sign(tets_[t2], l2))
            throw ValidationError("orientation mismatch");
    }

    // edge links must be single cycles, vertex links 2-spheres
    std::vector<std::vector<std::size_t>> edge_faces(E);
    for (std::size_t f = 0; f < F; ++f) {
        const auto& tri = faces_[f];
        edge_faces[edge_index_.at({tri[0], tri[1]})].push_back(f);
        edge_faces[edge_index_.at({tri[0], tri[2]})].push_back(f);
        edge_faces[edge_index_.at({tri[1], tri[2]})].push_back(f);
    }
    for (std::size_t e = 0; e < E; ++e) {
        std::set<std::size_t> tets_at;
        for (std::size_t f : edge_faces[e]) {
            tets_at.insert(face_tets_[f][0].first);
            tets_at.insert(face_tets_[f][1].first);
        }
        if (edge_faces[e].size() != tets_at.size())
            throw ValidationError("non-manifold link");
        // walk the cycle of tets around e
        std::set<std::size_t> reached;
        std::queue<std::size_t> q;
        q.push(*tets_at.begin());
        reached.insert(*tets_at.begin());
        while (!q.empty()) {
            std::size_t t = q.front();
            q.pop();
            for (std::size_t f : edge_faces[e]) {
                std::size_t a = face_tets_[f][0].first,
                            b = face_tets_[f][1].first;
                if (a != t && b != t) continue;
                std::size_t o = (a == t) ? b : a;
                if (reached.insert(o).second) q.push(o);
            }
        }
        if (reached.size() != tets_at.size())
            throw ValidationError("non-manifold link");
    }

    std::vector<std::size_t> v_edges(V, 0), v_faces(V, 0);
    std::vector<std::vector<std::size_t>> v_tets(V);
    for (const auto& e : edges_) {
        ++v_edges[e.first];
        ++v_edges[e.second];
    }
    for (const auto& tri : faces_)
        for (int v : tri) ++v_faces[v];
    for (std::size_t t = 0; t < T; ++t) {
        std::set<int> vs(tets_[t].begin(), tets_[t].end());
        for (int v : vs) v_tets[v].push_back(t);
    }
    for (std::size_t v = 0; v < V; ++v) {
        if (v_tets[v].empty()) throw ValidationError("isolated vertex");
        long chi = static_cast<long>(v_edges[v]) -
                   static_cast<long>(v_faces[v]) +
                   static_cast<long>(v_tets[v].size());
        if (chi != 2) throw ValidationError("non-manifold link");
        std::set<std::size_t> members(v_tets[v].begin(), v_tets[v].end());
        std::set<std::size_t> reached{v_tets[v][0]};
        std::queue<std::size_t> q;
        q.push(v_tets[v][0]);
        while (!q.empty()) {
            std::size_t t = q.front();
            q.pop();
            for (int l = 0; l < 4; ++l) {
                if (tets_[t][l] == static_cast<int>(v)) continue;  // face misses v
                std::size_t o = tet_neighbor(t, l);
                if (members.count(o) && reached.insert(o).second) q.push(o);
            }
        }
        if (reached.size() != members.size())
            throw ValidationError("non-manifold link");
    }

    // boundary maps
    IntMatrix d1(V, E), d2(E, F), d3(F, T);
    for (std::size_t e = 0; e < E; ++e) {
        d1(edges_[e].second, e) = 1;
        d1(edges_[e].first, e) = -1;
    }
    for (std::size_t f = 0; f < F; ++f) {
        auto [t1, l1] = face_tets_[f][0];
        int eps = induced_face_sign(tets_[t1], l1);
        const auto& tri = faces_[f];
        d2(edge_index_.at({tri[1], tri[2]}), f) = eps;
        d2(edge_index_.at({tri[0], tri[2]}), f) = -eps;
        d2(edge_index_.at({tri[0], tri[1]}), f) = eps;
    }
    for (std::size_t f = 0; f < F; ++f) {
        d3(f, face_tets_[f][0].first) += 1;
        d3(f, face_tets_[f][1].first) -= 1;
    }
    complex_ = std::make_unique<ChainComplex>(
        std::vector<std::size_t>{V, E, F, T},
        std::vector<IntMatrix>{std::move(d1), std::move(d2), std::move(d3)});
    try {
        complex_->validate();
    } catch (const std::exception& ex) {
        throw ValidationError(ex.what());
    }
}

std::size_t Triangulation::tet_face(std::size_t t, int local) const {
    if (local < 0 || local > 3) throw std::out_of_range("local face index");
    return tet_faces_.at(t)[local];
}

std::size_t Triangulation::tet_neighbor(std::size_t t, int local) const {
    std::size_t f = tet_face(t, local);
    std::size_t a = face_tets_[f][0].first, b = face_tets_[f][1].first;
    return a == t ? b : a;
}

int Triangulation::face_side(std::size_t f, std::size_t t) const {
    if (face_tets_.at(f)[0].first == t) return 1;
    if (face_tets_.at(f)[1].first == t) return -1;
    throw std::invalid_argument("tetrahedron not on face");
}

std::pair<std::size_t, std::size_t> Triangulation::face_tets(
    std::size_t f) const {
    return {face_tets_.at(f)[0].first, face_tets_.at(f)[1].first};
}

DualCycle Triangulation::cycle_from_tets(
    const std::vector<std::size_t>& walk) const {
    if (walk.size() < 2) throw ValidationError("dual walk too short");
    DualCycle z;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        std::size_t t = walk[i], nxt = walk[(i + 1) % walk.size()];
        int local = -1;
        for (int l = 0; l < 4; ++l)
            if (tet_neighbor(t, l) == nxt && nxt != t) local = l;
        if (local < 0) throw ValidationError("walk not face-adjacent");
        std::size_t f = tet_face(t, local);
        z.steps.push_back({t, local, face_side(f, t)});
    }
    return z;
}

void Triangulation::validate_cycle(const DualCycle& z) const {
    if (z.steps.empty()) throw ValidationError("empty dual cycle");
    for (std::size_t i = 0; i < z.steps.size(); ++i) {
        const DualStep& s = z.steps[i];
        if (s.tet >= tets_.size()) throw ValidationError("dual cycle: bad tet");
        if (s.exit_face < 0 || s.exit_face > 3)
            throw ValidationError("dual cycle: bad face index");
        std::size_t f = tet_face(s.tet, s.exit_face);
        if (s.sign != face_side(f, s.tet))
            throw ValidationError("dual cycle: wrong crossing sign");
        std::size_t nxt = z.steps[(i + 1) % z.steps.size()].tet;
        if (tet_neighbor(s.tet, s.exit_face) != nxt)
            throw ValidationError("dual cycle: walk not face-adjacent");
    }
}

IntegerChain Triangulation::dual_to_primal(const DualCycle& z) const {
    IntegerChain c;
    c.degree = 1;
    auto add_segment = [&](int a, int b) {
        if (a == b) return;
        if (a < b)
            c.add(edge_index_.at({a, b}), 1);
        else
            c.add(edge_index_.at({b, a}), -1);
    };
    auto base_vertex = [&](std::size_t t) {
        return *std::min_element(tets_[t].begin(), tets_[t].end());
    };
    for (std::size_t i = 0; i < z.steps.size(); ++i) {
        const DualStep& s = z.steps[i];
        std::size_t f = tet_face(s.tet, s.exit_face);
        std::size_t nxt = z.steps[(i + 1) % z.steps.size()].tet;
        int mid = faces_[f][0];  // sorted triple, min vertex
        add_segment(static_cast<int>(base_vertex(s.tet)), mid);
        add_segment(mid, static_cast<int>(base_vertex(nxt)));
    }
    return c;
}

Int Triangulation::crossing_sum(const IntegerChain& surface,
                                const DualCycle& z) const {
    if (surface.degree != 2)
        throw std::invalid_argument("crossing_sum needs a 2-chain");
    Int total = 0;
    for (const DualStep& s : z.steps) {
        std::size_t f = tet_face(s.tet, s.exit_face);
        auto it = surface.coeffs.find(f);
        if (it != surface.coeffs.end()) total += Int(s.sign) * it->second;
    }
    return total;
}

std::optional<IntegerChain> Triangulation::bounding_surface(
    const IntegerChain& z1, const Int& mult) const {
    if (z1.degree != 1)
        throw std::invalid_argument("bounding_surface needs a 1-cycle");
    {
        std::lock_guard<std::mutex> lk(caches_->mu);
        if (!caches_->h2)
            caches_->h2 = exact::hermite_column_form(complex_->boundary_matrix(2));
    }
    std::vector<Int> b = z1.scaled(mult).dense(edges_.size());
    auto x = exact::solve_with_hermite(*caches_->h2, b);
    if (!x) return std::nullopt;
    return IntegerChain::from_dense(2, *x);
}

const std::map<std::string, DualCycle>& Triangulation::designated_cycles()
    const {
    {
        std::lock_guard<std::mutex> lk(caches_->mu);
        if (caches_->designated_done) return caches_->designated;
    }
    std::map<std::string, DualCycle> found;
    std::function<std::map<std::string, DualCycle>(const Triangulation&)> prov;
    {
        std::lock_guard<std::mutex> lk(caches_->mu);
        prov = caches_->provider;
    }
    if (prov) found = prov(*this);
    std::lock_guard<std::mutex> lk(caches_->mu);
    if (!caches_->designated_done) {
        for (auto& [n, z] : found) caches_->designated.emplace(n, std::move(z));
        caches_->designated_done = true;
    }
    return caches_->designated;
}

void Triangulation::set_designated(const std::string& cname, DualCycle z) {
    validate_cycle(z);
    std::lock_guard<std::mutex> lk(caches_->mu);
    caches_->designated[cname] = std::move(z);
}

void Triangulation::set_designated_provider(
    std::function<std::map<std::string, DualCycle>(const Triangulation&)> p) {
    std::lock_guard<std::mutex> lk(caches_->mu);
    caches_->provider = std::move(p);
    caches_->designated_done = false;
}

// ---------------------------------------------------------------------------
// builders

Triangulation build_s3() {
    std::vector<std::array<int, 4>> tets;
    for (int skip = 0; skip < 5; ++skip) {
        std::array<int, 4> t;
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != skip) t[k++] = v;
        if (skip % 2 == 1) std::swap(t[2], t[3]);
        tets.push_back(t);
    }
    return Triangulation("s3", 5, std::move(tets));
}

namespace {

using Simplex = std::vector<int>;

// Barycentric subdivision of the join of two m-gon circles, optionally
// divided by the cyclic group generated by a simultaneous rotation.
struct SubdividedJoin {
    std::size_t nverts = 0;
    std::vector<std::array<int, 4>> tets;
    std::vector<int> family;          // 0: flag starts on first circle
    std::map<Simplex, int> orbit_id;  // base simplex -> quotient vertex
};

SubdividedJoin subdivided_join(int m, int shift, int group) {
    auto act_label = [&](int l) {
        return l < m ? (l + shift) % m : m + (l - m + shift) % m;
    };
    auto act = [&](const Simplex& s) {
        Simplex r;
        r.reserve(s.size());
        for (int l : s) r.push_back(act_label(l));
        std::sort(r.begin(), r.end());
        return r;
    };
    auto orbit_min = [&](Simplex s) {
        Simplex best = s;
        for (int g = 1; g < group; ++g) {
            s = act(s);
            if (s < best) best = s;
        }
        return best;
    };

    SubdividedJoin out;
    int next_id = 0;
    auto id_of = [&](const Simplex& s) {
        Simplex rep = orbit_min(s);
        auto it = out.orbit_id.find(rep);
        if (it != out.orbit_id.end()) return it->second;
        out.orbit_id.emplace(rep, next_id);
        return next_id++;
    };

    using Flag = std::array<Simplex, 4>;
    auto act_flag = [&](const Flag& fl) {
        Flag r;
        for (int i = 0; i < 4; ++i) r[i] = act(fl[i]);
        return r;
    };
    auto flag_min = [&](Flag fl) {
        Flag best = fl;
        for (int g = 1; g < group; ++g) {
            fl = act_flag(fl);
            if (fl < best) best = fl;
        }
        return best;
    };

    std::size_t total_flags = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Simplex top = {i, (i + 1) % m, m + j, m + (j + 1) % m};
            std::sort(top.begin(), top.end());
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    if (b == a) continue;
                    for (int c = 0; c < 4; ++c) {
                        if (c == a || c == b) continue;
                        ++total_flags;
                        Flag fl;
                        fl[0] = {top[a]};
                        fl[1] = fl[0];
                        fl[1].push_back(top[b]);
                        std::sort(fl[1].begin(), fl[1].end());
                        fl[2] = fl[1];
                        fl[2].push_back(top[c]);
                        std::sort(fl[2].begin(), fl[2].end());
                        fl[3] = top;
                        if (flag_min(fl) != fl) continue;
                        std::array<int, 4> tt;
                        for (int k = 0; k < 4; ++k) tt[k] = id_of(fl[k]);
                        out.tets.push_back(tt);
                        out.family.push_back(top[a] < m ? 0 : 1);
                    }
                }
        }
    if (out.tets.size() * static_cast<std::size_t>(group) != total_flags)
        throw ValidationError("group action not free on the subdivision");
    out.nverts = static_cast<std::size_t>(next_id);
    orient_coherently(out.tets);
    return out;
}

std::vector<std::vector<std::size_t>> fundamental_cycles(
    const Triangulation& M, const std::vector<char>& allowed);

}  // namespace

std::vector<std::vector<std::size_t>> fundamental_dual_cycles(
    const Triangulation& m, const std::vector<char>& allowed) {
    const Triangulation& M = m;
    const std::size_t T = M.tet_count();
    auto ok = [&](std::size_t t) { return allowed.empty() || allowed[t]; };
    std::vector<std::size_t> parent(T, T);
    std::vector<char> seen(T, 0);
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t root = 0; root < T; ++root) {
        if (!ok(root) || seen[root]) continue;
        seen[root] = 1;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t t = q.front();
            q.pop();
            for (int l = 0; l < 4; ++l) {
                std::size_t o = M.tet_neighbor(t, l);
                if (!ok(o)) continue;
                if (!seen[o]) {
                    seen[o] = 1;
                    parent[o] = t;
                    q.push(o);
                } else if (parent[t] != o && t < o) {
                    chords.push_back({t, o});
                }
            }
        }
    }
    auto ancestors = [&](std::size_t t) {
        std::vector<std::size_t> up{t};
        while (parent[up.back()] != T) up.push_back(parent[up.back()]);
        return up;
    };
    std::vector<std::vector<std::size_t>> cycles;
    for (auto [a, b] : chords) {
        std::vector<std::size_t> ua = ancestors(a), ub = ancestors(b);
        std::set<std::size_t> in_b(ub.begin(), ub.end());
        std::size_t ia = 0;
        while (ia < ua.size() && !in_b.count(ua[ia])) ++ia;
        if (ia == ua.size()) continue;  // different components
        std::size_t lca = ua[ia];
        std::vector<std::size_t> walk{a};
        for (std::size_t t : ub) {
            walk.push_back(t);
            if (t == lca) break;
        }
        for (std::size_t k = ia; k-- > 1;) walk.push_back(ua[k]);
        if (walk.back() == walk.front()) walk.pop_back();
        if (walk.size() >= 3) cycles.push_back(std::move(walk));
    }
    return cycles;
}

namespace {

std::vector<std::vector<std::size_t>> fundamental_cycles(
    const Triangulation& M, const std::vector<char>& allowed) {
    return fundamental_dual_cycles(M, allowed);
}

// First fundamental cycle within `allowed` whose class has full order p.
std::optional<DualCycle> find_order_p_cycle(const Triangulation& M,
                                            const Int& p,
                                            const std::vector<char>& allowed) {
    for (const auto& walk : fundamental_cycles(M, allowed)) {
        DualCycle z = M.cycle_from_tets(walk);
        std::vector<Int> coords = M.complex().class_coords(M.dual_to_primal(z));
        if (coords.size() != 1) throw std::logic_error("unexpected H1 shape");
        Int g = gcd(coords[0], p);
        if (g == 1) return z;
    }
    return std::nullopt;
}

std::map<std::string, DualCycle> torsion_pair_provider(const Triangulation& M,
                                                       int p) {
    auto tau1 = find_order_p_cycle(M, p, {});
    if (!tau1) throw ValidationError("no torsion generator cycle found");
    std::vector<char> allowed(M.tet_count(), 1);
    for (std::size_t t : tau1->tets()) allowed[t] = 0;
    auto tau2 = find_order_p_cycle(M, p, allowed);
    if (!tau2) throw ValidationError("no disjoint second torsion cycle found");
    return {{"tau1", std::move(*tau1)}, {"tau2", std::move(*tau2)}};
}

Triangulation make_lens(int p, const std::string& name) {
    SubdividedJoin sj = subdivided_join(2 * p, 2, p);
    Triangulation M(name, sj.nverts, std::move(sj.tets));
    M.set_designated_provider([p](const Triangulation& m) {
        return torsion_pair_provider(m, p);
    });
    return M;
}

// Closed edge path through alternating quotient vertices.
IntegerChain edge_path_cycle(const std::vector<int>& verts,
                             const Triangulation& M) {
    IntegerChain c;
    c.degree = 1;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (std::size_t e = 0; e < M.edge_count(); ++e) idx[M.edge(e)] = e;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int a = verts[i], b = verts[(i + 1) % verts.size()];
        if (a < b)
            c.add(idx.at({a, b}), 1);
        else
            c.add(idx.at({b, a}), -1);
    }
    return c;
}

}  // namespace

Triangulation build_lens(int p) {
    if (p < 2 || p > 8)
        throw UnsupportedError("lens parameter out of supported range 2..8");
    return make_lens(p, "lens-" + std::to_string(p));
}

Triangulation build_s3_fine() {
    const int m = 3;
    SubdividedJoin sj = subdivided_join(m, 0, 1);
    auto family = sj.family;
    auto ids = sj.orbit_id;
    Triangulation M("s3fine", sj.nverts, std::move(sj.tets));

    M.set_designated_provider(
        [family, ids, m](const Triangulation& m2)
            -> std::map<std::string, DualCycle> {
            auto circle_chain = [&](int offset) {
                std::vector<int> path;
                for (int i = 0; i < m; ++i) {
                    Simplex e{offset + i, offset + (i + 1) % m};
                    std::sort(e.begin(), e.end());
                    path.push_back(ids.at({offset + i}));
                    path.push_back(ids.at(e));
                }
                return edge_path_cycle(path, m2);
            };
            IntegerChain core_u = circle_chain(0);
            IntegerChain core_v = circle_chain(m);
            auto span_u = m2.bounding_surface(core_u, 1);
            auto span_v = m2.bounding_surface(core_v, 1);
            if (!span_u || !span_v)
                throw ValidationError("core circles fail to bound");
            auto pick = [&](int fam, const IntegerChain& span)
                -> std::optional<DualCycle> {
                std::vector<char> allowed(m2.tet_count(), 0);
                for (std::size_t t = 0; t < m2.tet_count(); ++t)
                    if (family[t] == fam) allowed[t] = 1;
                for (const auto& walk : fundamental_cycles(m2, allowed)) {
                    DualCycle z = m2.cycle_from_tets(walk);
                    Int x = m2.crossing_sum(span, z);
                    if (x == 1 || x == -1) return z;
                }
                return std::nullopt;
            };
            auto a = pick(0, *span_v);
            auto b = pick(1, *span_u);
            if (!a || !b) throw ValidationError("no linked cycle pair found");
            return {{"hopf_a", std::move(*a)}, {"hopf_b", std::move(*b)}};
        });
    return M;
}

Triangulation build_rp3() {
    std::vector<std::array<int, 4>> tets(rp3_data::tets,
                                         rp3_data::tets + rp3_data::tet_count);
    Triangulation M("rp3", rp3_data::vertex_count, std::move(tets));
    M.set_designated(
        "tau1", M.cycle_from_tets({rp3_data::tau1_walk,
                                   rp3_data::tau1_walk + rp3_data::tau1_len}));
    M.set_designated(
        "tau2", M.cycle_from_tets({rp3_data::tau2_walk,
                                   rp3_data::tau2_walk + rp3_data::tau2_len}));
    chain::HomologyGroup h1 = M.homology(1);
    if (h1.betti != 0 || h1.torsion != std::vector<Int>{2})
        throw ValidationError("embedded data has wrong first homology");
    chain::HomologyGroup h2 = M.homology(2);
    if (h2.betti != 0 || !h2.torsion.empty())
        throw ValidationError("embedded data has wrong second homology");
    return M;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

Triangulation from_json(const json& j, const std::string& fallback_name) {
    if (!j.is_object()) throw ParseError("triangulation: expected an object");
    for (auto& [key, _] : j.items())
        if (key != "name" && key != "vertices" && key != "tetrahedra" &&
            key != "designated_cycles")
            throw ParseError("triangulation: unknown field \"" + key + "\"");
    std::string name = fallback_name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw ParseError("\"vertices\" must be an integer");
    long nv = j["vertices"].get<long>();
    if (nv <= 0) throw ParseError("\"vertices\" must be positive");
    if (!j.contains("tetrahedra") || !j["tetrahedra"].is_array())
        throw ParseError("\"tetrahedra\" must be a list");
    std::vector<std::array<int, 4>> tets;
    for (const auto& row : j["tetrahedra"]) {
        if (!row.is_array() || row.size() != 4)
            throw ParseError("each tetrahedron needs exactly 4 vertex indices");
        std::array<int, 4> t;
        for (int i = 0; i < 4; ++i) {
            if (!row[i].is_number_integer())
                throw ParseError("tetrahedron vertices must be integers");
            t[i] = row[i].get<int>();
        }
        tets.push_back(t);
    }
    Triangulation M(name, static_cast<std::size_t>(nv), std::move(tets));
    if (j.contains("designated_cycles")) {
        const auto& dc = j["designated_cycles"];
        if (!dc.is_object())
            throw ParseError("\"designated_cycles\" must be an object");
        for (auto& [cname, steps] : dc.items()) {
            if (!steps.is_array())
                throw ParseError("designated cycle must be a list of steps");
            DualCycle z;
            for (const auto& st : steps) {
                if (!st.is_array() || st.size() != 3 ||
                    !st[0].is_number_integer() || !st[1].is_number_integer() ||
                    !st[2].is_number_integer())
                    throw ParseError(
                        "cycle step must be [tetrahedron, face, sign]");
                z.steps.push_back({st[0].get<std::size_t>(), st[1].get<int>(),
                                   st[2].get<int>()});
            }
            M.set_designated(cname, std::move(z));
        }
    }
    return M;
}

}  // namespace

Triangulation triangulation_from_json_text(const std::string& text,
                                           const std::string& fallback_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("triangulation: ") + ex.what());
    }
    return from_json(j, fallback_name);
}

Triangulation load_triangulation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return triangulation_from_json_text(ss.str(), path.stem().string());
}

std::string triangulation_to_json_text(const Triangulation& m) {
    json j;
    j["name"] = m.name();
    j["vertices"] = m.vertex_count();
    json tets = json::array();
    for (std::size_t t = 0; t < m.tet_count(); ++t) {
        const auto& tt = m.tet(t);
        tets.push_back({tt[0], tt[1], tt[2], tt[3]});
    }
    j["tetrahedra"] = std::move(tets);
    if (!m.designated_cycles().empty()) {
        json dc = json::object();
        for (const auto& [cname, z] : m.designated_cycles()) {
            json steps = json::array();
            for (const DualStep& s : z.steps)
                steps.push_back({s.tet, s.exit_face, s.sign});
            dc[cname] = std::move(steps);
        }
        j["designated_cycles"] = std::move(dc);
    }
    return j.dump(2) + "\n";
}

std::optional<Triangulation> builtin_manifold(const std::string& name) {
    if (name == "s3") return build_s3();
    if (name == "rp3") return build_rp3();
    if (name == "s3fine") return build_s3_fine();
    if (name.rfind("lens-", 0) == 0) {
        int p = 0;
        try {
            std::size_t used = 0;
            p = std::stoi(name.substr(5), &used);
            if (used != name.size() - 5) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        return build_lens(p);
    }
    return std::nullopt;
}

}  // namespace torlink::manifold
