// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each check pins an externally meaningful property of the engine; the
// randomized suites are seeded and fully deterministic.

#include "oracles.hpp"
#include "torlink/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace torlink;
using chain::HomologyGroup;
using chain::IntegerChain;
using exact::Int;
using exact::IntMatrix;
using exact::PhaseModOne;
using exact::Rat;
using linking::CycleClass;
using linking::FramedCycle;
using manifold::DualCycle;
using manifold::Triangulation;

namespace {

struct Gate {
    int failures = 0;
    int index = 0;

    void run(const std::string& label, const std::function<void()>& body) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        if (error.empty()) {
            std::printf("[criterion %d] %s: PASS (%.2fs)\n", index,
                        label.c_str(), secs);
        } else {
            ++failures;
            std::printf("[criterion %d] %s: FAIL (%s)\n", index, label.c_str(),
                        error.c_str());
        }
    }
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

void require_time(double secs, double budget) {
    if (secs > budget) {
        std::ostringstream s;
        s << "took " << secs << "s, budget " << budget << "s";
        throw CheckFailure(s.str());
    }
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

cs::WilsonLink single_link(const Triangulation& m, const DualCycle& z,
                           const DualCycle& pushoff, const Int& q) {
    cs::WilsonLink link;
    link.space = &m;
    cs::WilsonComponent comp;
    comp.name = "z";
    comp.charge = q;
    comp.framed.space = &m;
    comp.framed.cycle = z;
    comp.framed.pushoff = pushoff;
    link.components.push_back(std::move(comp));
    return link;
}

IntegerChain random_theta(const Triangulation& m, std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-2, 2);
    IntegerChain theta;
    theta.degree = 3;
    for (std::size_t t = 0; t < m.tet_count(); ++t) theta.add(t, coeff(rng));
    return theta;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long max_abs) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> val(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    return m;
}

}  // namespace

int main() {
    Gate gate;

    gate.run("homology of shipped models", [] {
        auto t0 = std::chrono::steady_clock::now();
        Triangulation s3 = manifold::build_s3();
        require(s3.homology(1) == HomologyGroup{0, {}}, "sphere H_1");
        require(s3.homology(2) == HomologyGroup{0, {}}, "sphere H_2");
        Triangulation rp3 = manifold::build_rp3();
        require(rp3.homology(1) == HomologyGroup{0, {Int(2)}},
                "projective space H_1");
        require(rp3.homology(2) == HomologyGroup{0, {}},
                "projective space H_2");
        for (int p : {3, 4, 5})
            require(manifold::build_lens(p).homology(1) ==
                        HomologyGroup{0, {Int(p)}},
                    "lens H_1, p = " + std::to_string(p));
        require_time(elapsed(t0), 5.0);
    });

    gate.run("torsion cycle dichotomy", [] {
        auto t0 = std::chrono::steady_clock::now();
        Triangulation rp3 = manifold::build_rp3();
        const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
        CycleClass cls = linking::classify(tau1, rp3);
        require(cls.kind == CycleClass::Kind::torsion && cls.degree == 2,
                "tau1 class");
        require(cls.witness.has_value(), "tau1 witness present");
        IntegerChain z = rp3.dual_to_primal(tau1);
        require(rp3.complex().boundary(*cls.witness) == z.scaled(2),
                "witness boundary is twice the cycle");
        auto direct = exact::solve_integer(
            rp3.complex().boundary_matrix(2),
            z.dense(rp3.complex().basis_size(1)));
        require(!direct.has_value(), "no degree-1 witness may exist");
        require_time(elapsed(t0), 1.0);
    });

    gate.run("half-integer torsion linking", [] {
        Triangulation rp3 = manifold::build_rp3();
        const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
        const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
        Rat l = linking::linking_number(tau1, tau2, rp3).value;
        Rat doubled = l * 2;
        require(doubled.get_den() == 1 && doubled.get_num() % 2 != 0,
                "value must lie in 1/2 + Z");
        PhaseModOne residue{l};
        require(residue.value() == Rat(1, 2), "mod-1 residue must be 1/2");

        CycleClass cls = linking::classify(tau1, rp3);
        Int base = linking::intersection_number(*cls.witness, tau2, rp3);
        std::mt19937 rng(711);
        IntegerChain z2 = rp3.dual_to_primal(tau1).scaled(2);
        for (int trial = 0; trial < 5; ++trial) {
            IntegerChain alt =
                *cls.witness + rp3.complex().boundary(random_theta(rp3, rng));
            require(rp3.complex().boundary(alt) == z2, "perturbed witness");
            require(linking::intersection_number(alt, tau2, rp3) == base,
                    "witness substitution changed the intersection");
        }
        require(Rat(base, 2) == l * 1, "linking equals intersection over 2");
    });

    gate.run("trivial-cycle expectation grid", [] {
        Triangulation fine = manifold::build_s3_fine();
        const DualCycle& a = fine.designated_cycles().at("hopf_a");
        int combos = 0;
        for (long n = -2; n <= 2; ++n) {
            DualCycle pushoff = linking::default_pushoff(fine, a, n);
            require(linking::self_linking({&fine, a, pushoff}).value == n,
                    "framed self-linking must equal the twist");
            for (long q = 1; q <= 3; ++q)
                for (long k : {2L, 4L}) {
                    auto val = cs::wilson_expectation(
                        single_link(fine, a, pushoff, q), {Int(k)});
                    require(val.phase == PhaseModOne(Rat(-q * q * n, 4 * k)),
                            "phase mismatch at n=" + std::to_string(n) +
                                " q=" + std::to_string(q) +
                                " k=" + std::to_string(k));
                    ++combos;
                }
        }
        require(combos == 30, "combination count");
    });

    gate.run("torsion-cycle expectation closed form", [] {
        Triangulation rp3 = manifold::build_rp3();
        const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
        CycleClass cls = linking::classify(tau1, rp3);
        for (long twist : {0L, 1L}) {
            DualCycle pushoff = linking::default_pushoff(rp3, tau1, twist);
            Int i = rp3.crossing_sum(*cls.witness, pushoff);
            for (long q : {2L, 4L})
                for (long k : {2L, 4L}) {
                    auto val = cs::wilson_expectation(
                        single_link(rp3, tau1, pushoff, q), {Int(k)});
                    PhaseModOne expect(Rat(-q * q, 4 * k) * Rat(i, 2));
                    require(val.phase == expect,
                            "phase mismatch at twist=" + std::to_string(twist) +
                                " q=" + std::to_string(q) +
                                " k=" + std::to_string(k));
                }
        }
    });

    gate.run("level and charge constraint enforcement", [] {
        Triangulation rp3 = manifold::build_rp3();
        Triangulation s3 = manifold::build_s3();
        require(!cs::check_level({Int(3)}, rp3).admissible,
                "odd level must be rejected on the torsion manifold");
        require(cs::check_level({Int(4)}, rp3).admissible,
                "even level must pass on the torsion manifold");
        require(cs::check_level({Int(3)}, s3).admissible,
                "any level must pass on the sphere");
        CycleClass torsion2 =
            linking::classify(rp3.designated_cycles().at("tau1"), rp3);
        require(!cs::check_charge(1, torsion2, rp3).admissible,
                "odd charge must be rejected on a torsion component");
        require(cs::check_charge(2, torsion2, rp3).admissible,
                "even charge must pass on a torsion component");
        CycleClass trivial;
        require(cs::check_charge(3, trivial, rp3).admissible,
                "any charge must pass on a trivial component");
    });

    gate.run("doubled-witness consistency on randomized trivial cycles", [] {
        std::vector<Triangulation> models;
        models.push_back(manifold::build_s3());
        models.push_back(manifold::build_s3_fine());
        models.push_back(manifold::build_rp3());
        models.push_back(manifold::build_lens(3));
        std::mt19937 rng(20240815);
        int checked = 0;
        for (const Triangulation& m : models) {
            // short cycles drawn from small dual-graph balls: contractible
            // and with plenty of room left for the pushoff
            std::vector<DualCycle> trivial;
            std::uniform_int_distribution<std::size_t> seed_pick(
                0, m.tet_count() - 1);
            for (int ball = 0; ball < 12 && trivial.size() < 40; ++ball) {
                std::vector<char> allowed(m.tet_count(), 0);
                std::vector<std::size_t> queue{seed_pick(rng)};
                allowed[queue[0]] = 1;
                std::size_t grown = 1;
                for (std::size_t qi = 0; qi < queue.size() && grown < 12;
                     ++qi)
                    for (int f = 0; f < 4 && grown < 12; ++f) {
                        std::size_t nb = m.tet_neighbor(queue[qi], f);
                        if (allowed[nb]) continue;
                        allowed[nb] = 1;
                        queue.push_back(nb);
                        ++grown;
                    }
                for (const auto& walk :
                     manifold::fundamental_dual_cycles(m, allowed)) {
                    DualCycle z = m.cycle_from_tets(walk);
                    if (linking::classify(z, m).kind ==
                        CycleClass::Kind::trivial)
                        trivial.push_back(std::move(z));
                }
            }
            std::shuffle(trivial.begin(), trivial.end(), rng);
            for (const DualCycle& z : trivial) {
                if (checked >= 50) break;
                DualCycle pushoff;
                try {
                    pushoff = linking::default_pushoff(m, z, 0);
                } catch (const ValidationError&) {
                    continue;  // no disjoint route around this cycle
                }
                FramedCycle fz{&m, z, pushoff};
                require(cs::consistency_check_doubled_witness(
                            fz, 1 + checked % 3, {Int(2 * (1 + checked % 2))}),
                        "doubled-witness disagreement on " + m.name());
                ++checked;
            }
        }
        require(checked >= 50, "needed 50 checks, got " +
                                   std::to_string(checked));
    });

    gate.run("bounding-chain independence", [] {
        Triangulation rp3 = manifold::build_rp3();
        const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
        const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
        DualCycle pushoff = linking::default_pushoff(rp3, tau1, 0);
        CycleClass cls = linking::classify(tau1, rp3);
        Int base_link = linking::intersection_number(*cls.witness, tau2, rp3);
        Int base_self = rp3.crossing_sum(*cls.witness, pushoff);
        PhaseModOne base_phase(Rat(-4, 8) * Rat(base_self, 2));

        std::mt19937 rng(20240816);
        IntegerChain z2 = rp3.dual_to_primal(tau1).scaled(2);
        for (int trial = 0; trial < 20; ++trial) {
            IntegerChain alt =
                *cls.witness + rp3.complex().boundary(random_theta(rp3, rng));
            require(rp3.complex().boundary(alt) == z2,
                    "perturbation must preserve the witness property");
            require(linking::intersection_number(alt, tau2, rp3) == base_link,
                    "linking changed under witness substitution");
            Int self = rp3.crossing_sum(alt, pushoff);
            require(PhaseModOne(Rat(-4, 8) * Rat(self, 2)) == base_phase,
                    "phase changed under witness substitution");
        }
    });

    gate.run("exact linear algebra property suite", [] {
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937 rng(20240817);
        for (int trial = 0; trial < 200; ++trial) {
            IntMatrix a = random_matrix(rng, 8, 10);
            auto s = exact::smith_normal_form(a);
            require(s.u * a * s.v == s.d, "U*A*V = D");
            Int du = exact::det(s.u), dv = exact::det(s.v);
            require((du == 1 || du == -1) && (dv == 1 || dv == -1),
                    "transforms must be unimodular");
            for (std::size_t i = 0; i + 1 < s.rank; ++i)
                require(s.d(i, i) > 0 && s.d(i + 1, i + 1) % s.d(i, i) == 0,
                        "divisor chain");
            require(s.rank == oracles::rank_oracle(a), "rank oracle");
        }
        std::uniform_int_distribution<long> val(-4, 4);
        for (int trial = 0; trial < 100; ++trial) {
            IntMatrix a = random_matrix(rng, 4, 3);
            std::vector<Int> b(a.rows());
            for (auto& x : b) x = val(rng);
            auto got = exact::solve_integer(a, b);
            auto brute = oracles::bounded_solution_search(a, b, 12);
            if (got)
                require(a.apply(*got) == b, "solution must verify");
            else
                require(!brute.has_value(),
                        "missed a solution found by exhaustive search");
        }
        require_time(elapsed(t0), 60.0);
    });

    gate.run("intersection oracle agreement", [] {
        std::vector<Triangulation> models;
        models.push_back(manifold::build_s3());
        models.push_back(manifold::build_s3_fine());
        models.push_back(manifold::build_rp3());
        for (int p : {3, 4, 5}) models.push_back(manifold::build_lens(p));
        std::mt19937 rng(20240818);
        for (const Triangulation& m : models) {
            std::vector<DualCycle> cycles;
            for (const auto& walk : manifold::fundamental_dual_cycles(m, {}))
                cycles.push_back(m.cycle_from_tets(walk));
            std::uniform_int_distribution<std::size_t> pick(0,
                                                            cycles.size() - 1);
            std::uniform_int_distribution<std::size_t> face(
                0, m.face_count() - 1);
            std::uniform_int_distribution<long> coeff(-3, 3);
            for (int trial = 0; trial < 100; ++trial) {
                IntegerChain c;
                c.degree = 2;
                for (int j = 0; j < 10; ++j) c.add(face(rng), coeff(rng));
                const DualCycle& z = cycles[pick(rng)];
                require(linking::intersection_number(c, z, m) ==
                            oracles::crossing_count_oracle(c, z, m),
                        "oracle disagreement on " + m.name());
            }
        }
    });

    if (gate.failures) {
        std::printf("%d criterion(s) failed\n", gate.failures);
        return 1;
    }
    std::printf("all %d criteria passed\n", gate.index);
    return 0;
}
