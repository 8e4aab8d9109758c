#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "torlink/linking.hpp"

#include <random>

using namespace torlink;
using chain::IntegerChain;
using exact::Int;
using exact::Rat;
using linking::CycleClass;
using linking::FramedCycle;
using manifold::DualCycle;
using manifold::Triangulation;

namespace {

DualCycle doubled(const Triangulation& m, const DualCycle& z) {
    std::vector<std::size_t> walk = z.tets();
    std::vector<std::size_t> twice = walk;
    twice.insert(twice.end(), walk.begin(), walk.end());
    return m.cycle_from_tets(twice);
}

// A witness perturbed by a boundary of a random 3-chain; still a witness.
IntegerChain perturbed_witness(const Triangulation& m, const IntegerChain& c,
                               std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-2, 2);
    IntegerChain theta;
    theta.degree = 3;
    for (std::size_t t = 0; t < m.tet_count(); ++t) theta.add(t, coeff(rng));
    return c + m.complex().boundary(theta);
}

}  // namespace

TEST_CASE("classification dichotomy on the projective space model") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");

    CycleClass cls = linking::classify(tau1, rp3);
    CHECK(cls.kind == CycleClass::Kind::torsion);
    CHECK(cls.degree == 2);
    CHECK(linking::to_string(cls) == "torsion(2)");
    REQUIRE(cls.witness.has_value());
    IntegerChain z = rp3.dual_to_primal(tau1);
    CHECK(rp3.complex().boundary(*cls.witness) == z.scaled(2));

    CycleClass twice = linking::classify(doubled(rp3, tau1), rp3);
    CHECK(twice.kind == CycleClass::Kind::trivial);
    CHECK(twice.degree == 1);
    REQUIRE(twice.witness.has_value());
}

TEST_CASE("closed surfaces intersect every cycle trivially") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
    // boundary of one tetrahedron is a closed surface
    IntegerChain sigma;
    sigma.degree = 3;
    sigma.add(tau2.steps[0].tet, 1);
    IntegerChain closed = rp3.complex().boundary(sigma);
    CHECK(linking::intersection_number(closed, tau2, rp3) == 0);

    // chain with support away from the cycle
    IntegerChain away;
    away.degree = 2;
    std::vector<char> on_cycle(rp3.tet_count(), 0);
    for (std::size_t t : tau2.tets()) on_cycle[t] = 1;
    for (std::size_t f = 0; f < rp3.face_count(); ++f) {
        auto [t1, t2] = rp3.face_tets(f);
        if (!on_cycle[t1] && !on_cycle[t2]) {
            away.add(f, 3);
            break;
        }
    }
    CHECK(linking::intersection_number(away, tau2, rp3) == 0);
}

TEST_CASE("torsion pair has half-integer linking") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
    REQUIRE(linking::disjoint(tau1, tau2));

    CycleClass cls = linking::classify(tau1, rp3);
    Int i = linking::intersection_number(*cls.witness, tau2, rp3);
    CHECK(i % 2 != 0);  // odd, forcing the half-integer below

    linking::LinkingNumber l12 = linking::linking_number(tau1, tau2, rp3);
    CHECK(l12.value == Rat(-1, 2));  // pinned regression value
    CHECK(l12.value.get_den() == 2);

    // symmetry holds modulo 1
    linking::LinkingNumber l21 = linking::linking_number(tau2, tau1, rp3);
    Rat diff = l12.value - l21.value;
    CHECK(diff.get_den() == 1);

    // bilinearity in the first slot
    linking::LinkingNumber twice =
        linking::linking_number(doubled(rp3, tau1), tau2, rp3);
    CHECK(twice.value == l12.value * 2);
}

TEST_CASE("witness substitution never changes intersections") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
    CycleClass cls = linking::classify(tau1, rp3);
    Int base = linking::intersection_number(*cls.witness, tau2, rp3);

    std::mt19937 rng(20240814);
    IntegerChain z2 = rp3.dual_to_primal(tau1).scaled(2);
    for (int trial = 0; trial < 10; ++trial) {
        IntegerChain alt = perturbed_witness(rp3, *cls.witness, rng);
        REQUIRE(rp3.complex().boundary(alt) == z2);
        CHECK(linking::intersection_number(alt, tau2, rp3) == base);
    }
}

TEST_CASE("split unlink in the sphere") {
    Triangulation fine = manifold::build_s3_fine();
    const DualCycle& a = fine.designated_cycles().at("hopf_a");
    const DualCycle& b = fine.designated_cycles().at("hopf_b");

    CHECK(linking::classify(a, fine).kind == CycleClass::Kind::trivial);
    CHECK(linking::classify(b, fine).kind == CycleClass::Kind::trivial);
    CHECK(linking::linking_number(a, b, fine).value == Rat(-1));  // pinned
    CHECK(linking::linking_number(b, a, fine).value == Rat(-1));

    // a against its own twist-0 pushoff: integer by triviality, 0 by routing
    DualCycle pa = linking::default_pushoff(fine, a, 0);
    FramedCycle fa{&fine, a, pa};
    CHECK(linking::self_linking(fa).value == 0);
}

TEST_CASE("default pushoff twist accounting") {
    Triangulation fine = manifold::build_s3_fine();
    const DualCycle& a = fine.designated_cycles().at("hopf_a");
    for (long n = -2; n <= 2; ++n) {
        DualCycle p = linking::default_pushoff(fine, a, n);
        FramedCycle fz{&fine, a, p};
        linking::validate_framed(fz);
        CHECK(linking::self_linking(fz).value == Rat(n));
    }

    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    Rat base;
    for (long n = 0; n <= 2; ++n) {
        DualCycle p = linking::default_pushoff(rp3, tau1, n);
        FramedCycle fz{&rp3, tau1, p};
        linking::validate_framed(fz);
        Rat sl = linking::self_linking(fz).value;
        CHECK(sl.get_den() == 2);  // half-integer on a degree-2 class
        if (n == 0)
            base = sl;
        else
            CHECK(sl == base + n);
    }
}

TEST_CASE("invalid linking queries are rejected") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    CHECK(!linking::disjoint(tau1, tau1));
    CHECK_THROWS_AS(linking::linking_number(tau1, tau1, rp3),
                    ValidationError);

    // framing a torsion cycle with a trivial pushoff is rejected
    std::vector<char> allowed(rp3.tet_count(), 1);
    for (std::size_t t : tau1.tets()) allowed[t] = 0;
    bool found = false;
    for (const auto& walk : manifold::fundamental_dual_cycles(rp3, allowed)) {
        DualCycle w = rp3.cycle_from_tets(walk);
        if (linking::classify(w, rp3).kind != CycleClass::Kind::trivial)
            continue;
        FramedCycle bad{&rp3, tau1, w};
        CHECK_THROWS_AS(linking::validate_framed(bad), ValidationError);
        found = true;
        break;
    }
    CHECK(found);
}

TEST_CASE("intersection oracle spot agreement") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau2 = rp3.designated_cycles().at("tau2");
    CycleClass cls = linking::classify(
        rp3.designated_cycles().at("tau1"), rp3);
    CHECK(linking::intersection_number(*cls.witness, tau2, rp3) ==
          oracles::crossing_count_oracle(*cls.witness, tau2, rp3));
}
