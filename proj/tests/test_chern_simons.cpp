#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlink/io.hpp"

using namespace torlink;
using cs::CSLevel;
using cs::WilsonComponent;
using cs::WilsonLink;
using exact::Int;
using exact::PhaseModOne;
using exact::Rat;
using linking::CycleClass;
using linking::FramedCycle;
using manifold::DualCycle;
using manifold::Triangulation;

namespace {

WilsonLink single(const Triangulation& m, const DualCycle& z, const Int& twist,
                  const Int& q) {
    WilsonLink link;
    link.space = &m;
    WilsonComponent comp;
    comp.name = "z";
    comp.charge = q;
    comp.framed.space = &m;
    comp.framed.cycle = z;
    comp.framed.pushoff = linking::default_pushoff(m, z, twist);
    link.components.push_back(std::move(comp));
    return link;
}

const char* hopf_link_text =
    "{\"cycles\":{"
    "\"a\":{\"designated\":\"hopf_a\"},"
    "\"b\":{\"designated\":\"hopf_b\"}},"
    "\"components\":["
    "{\"cycle\":\"a\",\"twist\":0,\"charge\":1},"
    "{\"cycle\":\"b\",\"twist\":0,\"charge\":1}]}";

}  // namespace

TEST_CASE("level admissibility") {
    Triangulation rp3 = manifold::build_rp3();
    Triangulation s3 = manifold::build_s3();

    CHECK(!cs::check_level({Int(3)}, rp3).admissible);
    CHECK(cs::check_level({Int(3)}, rp3).reason ==
          "level constraint violated: k = 2l required, got k = 3");
    CHECK(cs::check_level({Int(2)}, rp3).admissible);
    CHECK(cs::check_level({Int(4)}, rp3).admissible);
    CHECK(cs::check_level({Int(-2)}, rp3).admissible);
    CHECK(cs::check_level({Int(1)}, s3).admissible);
    CHECK(!cs::check_level({Int(0)}, s3).admissible);

    Triangulation l5 = manifold::build_lens(5);
    CHECK(!cs::check_level({Int(4)}, l5).admissible);
    CHECK(cs::check_level({Int(10)}, l5).admissible);
}

TEST_CASE("charge admissibility") {
    Triangulation rp3 = manifold::build_rp3();
    CycleClass torsion2 =
        linking::classify(rp3.designated_cycles().at("tau1"), rp3);
    REQUIRE(torsion2.kind == CycleClass::Kind::torsion);

    CHECK(!cs::check_charge(1, torsion2, rp3).admissible);
    CHECK(cs::check_charge(1, torsion2, rp3).reason ==
          "charge constraint violated: q = 2m required, got q = 1");
    CHECK(cs::check_charge(2, torsion2, rp3).admissible);
    CHECK(cs::check_charge(-4, torsion2, rp3).admissible);
    CHECK(!cs::check_charge(0, torsion2, rp3).admissible);

    CycleClass trivial;  // trivial classes accept any charge
    CHECK(cs::check_charge(3, trivial, rp3).admissible);

    CycleClass free_cls;
    free_cls.kind = CycleClass::Kind::free_cycle;
    CHECK_THROWS_AS(cs::check_charge(2, free_cls, rp3), UnsupportedError);
}

TEST_CASE("trivial-component expectation closed form") {
    Triangulation fine = manifold::build_s3_fine();
    const DualCycle& a = fine.designated_cycles().at("hopf_a");
    for (long n = -2; n <= 2; ++n)
        for (long q = 1; q <= 3; ++q)
            for (long k : {2L, 4L}) {
                auto val =
                    cs::wilson_expectation(single(fine, a, n, q), {Int(k)});
                CHECK(val.phase ==
                      PhaseModOne(Rat(-q * q * n, 4 * k)));
            }
}

TEST_CASE("torsion-component expectation closed form") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    CycleClass cls = linking::classify(tau1, rp3);
    REQUIRE(cls.degree == 2);

    for (long twist : {0L, 1L})
        for (long q : {2L, 4L})
            for (long k : {2L, 4L}) {
                WilsonLink link = single(rp3, tau1, twist, q);
                Int i = rp3.crossing_sum(*cls.witness,
                                         link.components[0].framed.pushoff);
                PhaseModOne expect(Rat(-q * q, 4 * k) * Rat(i, 2));
                CHECK(cs::wilson_expectation(link, {Int(k)}).phase == expect);
            }

    // pinned regression: twist 0, q = 2, k = 2
    auto rep = cs::wilson_report(single(rp3, tau1, 0, 2), {Int(2)});
    CHECK(rep.phase.value() == Rat(3, 4));
    CHECK(rep.components[0].self_linking == Rat(1, 2));
    CHECK(rep.linking_matrix[0][0] == Rat(1, 2));
}

TEST_CASE("framing shift multiplies by a fixed root of unity") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    for (long q : {2L, 4L})
        for (long k : {2L, 6L}) {
            auto p0 = cs::wilson_expectation(single(rp3, tau1, 0, q), {Int(k)});
            auto p1 = cs::wilson_expectation(single(rp3, tau1, 1, q), {Int(k)});
            CHECK(p1.phase == p0.phase + PhaseModOne(Rat(-q * q, 4 * k)));
        }
}

TEST_CASE("charge reversal leaves the expectation unchanged") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    auto plus = cs::wilson_expectation(single(rp3, tau1, 1, 2), {Int(4)});
    auto minus = cs::wilson_expectation(single(rp3, tau1, 1, -2), {Int(4)});
    CHECK(plus.phase == minus.phase);

    Triangulation fine = manifold::build_s3_fine();
    WilsonLink link = io::resolve_link(io::parse_link_text(hopf_link_text),
                                       fine);
    auto base = cs::wilson_expectation(link, {Int(2)});
    io::apply_charges(link, {Int(-1), Int(-1)});
    CHECK(cs::wilson_expectation(link, {Int(2)}).phase == base.phase);
}

TEST_CASE("two-component link in the sphere") {
    Triangulation fine = manifold::build_s3_fine();
    WilsonLink link = io::resolve_link(io::parse_link_text(hopf_link_text),
                                       fine);
    auto rep = cs::wilson_report(link, {Int(2)});
    REQUIRE(rep.linking_matrix.size() == 2);
    CHECK(rep.linking_matrix[0][0] == 0);
    CHECK(rep.linking_matrix[1][1] == 0);
    CHECK(rep.linking_matrix[0][1] == Rat(-1));
    CHECK(rep.linking_matrix[1][0] == Rat(-1));
    CHECK(rep.phase.value() == Rat(1, 4));  // pinned regression value
}

TEST_CASE("doubled-witness consistency on trivial cycles") {
    Triangulation fine = manifold::build_s3_fine();
    const DualCycle& a = fine.designated_cycles().at("hopf_a");
    for (long twist : {-1L, 0L, 2L}) {
        FramedCycle fz{&fine, a, linking::default_pushoff(fine, a, twist)};
        CHECK(cs::consistency_check_doubled_witness(fz, 3, {Int(2)}));
    }

    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    FramedCycle torsion_fz{&rp3, tau1, linking::default_pushoff(rp3, tau1, 0)};
    CHECK_THROWS_AS(cs::consistency_check_doubled_witness(torsion_fz, 2,
                                                          {Int(2)}),
                    ValidationError);
}

TEST_CASE("constraint violations surface as typed errors") {
    Triangulation rp3 = manifold::build_rp3();
    const DualCycle& tau1 = rp3.designated_cycles().at("tau1");
    CHECK_THROWS_AS(cs::wilson_expectation(single(rp3, tau1, 0, 2), {Int(3)}),
                    ConstraintError);
    CHECK_THROWS_AS(cs::wilson_expectation(single(rp3, tau1, 0, 1), {Int(2)}),
                    ConstraintError);
    WilsonLink empty;
    empty.space = &rp3;
    CHECK_THROWS_AS(cs::wilson_expectation(empty, {Int(2)}), ValidationError);
}
