#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstar/cones.hpp"
#include "dstar/errors.hpp"

using namespace dstar;

TEST_CASE("membership basics") {
    auto pts = members_up_to(cone_C23(), 2);
    CHECK(pts.count({0, 0, 0}));
    CHECK(pts.count({0, 1, 1}));
    CHECK(pts.count({0, 2, 1}));
    CHECK(pts.count({0, 0, 1}));
    CHECK_FALSE(pts.count({1, 0, 0}));
    CHECK_FALSE(cone_C462p().contains({1, 0, 0}));
    for (const ConeSpec* c : {&cone_C134(), &cone_C123(), &cone_C23(), &cone_C34()})
        CHECK(c->contains({0, 0, 0}));
    // Open cones exclude the origin.
    CHECK_FALSE(cone_C145p().contains({0, 0, 0}));
    CHECK_FALSE(cone_Csigma().contains({0, 0, 0}));
}

TEST_CASE("generator and inequality descriptions enumerate the same points") {
    for (const ConeSpec* c : {&cone_C134(), &cone_C145p(), &cone_C456p(), &cone_C462p(),
                              &cone_C34(), &cone_C42p()})
        CHECK(members_up_to(*c, 12) == members_via_generators(*c, 12));
}

TEST_CASE("fundamental domains") {
    std::set<LatticePoint> origin{{0, 0, 0}};
    CHECK(fundamental_domain_points({{kV1, false}, {kV3, false}, {kV4, false}}) == origin);
    CHECK(fundamental_domain_points({{kV1, false}, {kV4, false}, {kV5, false}}) == origin);
    CHECK(fundamental_domain_points({{kV4, false}, {kV5, false}, {kV6, false}}) == origin);
    CHECK(fundamental_domain_points({{kV4, false}, {kV6, false}, {kV2, false}}) == origin);
    std::set<LatticePoint> two{{0, 0, 0}, {0, 1, 1}};
    CHECK(fundamental_domain_points({{kV1, false}, {kV2, false}, {kV3, false}}) == two);
    CHECK(fundamental_domain_points({{kV3, false}, {kV4, false}}) == origin);
    CHECK(fundamental_domain_points({{kV4, false}, {kV2, false}}) == origin);
    CHECK_THROWS_AS(fundamental_domain_points({{kV1, false}, {kV1, false}}),
                    DegenerateGenerators);
}

TEST_CASE("partitions") {
    CHECK(verify_partition({&cone_C134(), &cone_C145p(), &cone_C456p(), &cone_C462p()},
                           cone_C123(), 12));
    CHECK(verify_partition({&cone_C34(), &cone_C42p()}, cone_C23(), 12));
    // Overlapping parts are rejected.
    CHECK_FALSE(verify_partition({&cone_C134(), &cone_C134()}, cone_C123(), 6));
    // C_sigma = C123 minus C23.
    auto whole = members_up_to(cone_C123(), 12);
    auto minus = members_up_to(cone_C23(), 12);
    auto sigma = members_up_to(cone_Csigma(), 12);
    std::set<LatticePoint> diff;
    for (const auto& e : whole)
        if (!minus.count(e)) diff.insert(e);
    CHECK(diff == sigma);
}

TEST_CASE("C123 splits into two translates of the generator span") {
    // C123 is simplicial but not simple: its lattice points are the
    // non-negative combinations of v1, v2, v3 together with the translate
    // by (0,1,1).
    const int bound = 10;
    auto span = members_via_generators(cone_C123(), bound);
    std::set<LatticePoint> shifted;
    for (const auto& e : span) {
        LatticePoint s{e[0], e[1] + 1, e[2] + 1};
        if (s[1] <= bound && s[2] <= bound) shifted.insert(s);
    }
    std::set<LatticePoint> uni;
    for (const auto& e : span) uni.insert(e);
    for (const auto& e : shifted) {
        CHECK_FALSE(span.count(e));  // disjoint
        uni.insert(e);
    }
    CHECK(uni == members_up_to(cone_C123(), bound));

    // And C_sigma is the v1-translate of both pieces.
    std::set<LatticePoint> sigma_expect;
    for (const auto& e : uni) {
        LatticePoint s{e[0] + 1, e[1], e[2]};
        if (s[0] <= bound) sigma_expect.insert(s);
    }
    CHECK(sigma_expect == members_up_to(cone_Csigma(), bound));
}

TEST_CASE("cone generating functions") {
    FactoredRational g42 = cone_gf(cone_C42p(), builtin_weights(cone_C42p()));
    FactoredRational want = frac(Polynomial::from_monomial(parse_mono("X2^2 X3")),
                                 {{parse_mono("X2 X3"), 1}, {parse_mono("X2^2 X3"), 1}});
    CHECK(rational_eq(g42, want));
    CHECK_THROWS_AS(cone_gf(cone_C123(), {parse_mono("X1"), parse_mono("X2"),
                                          parse_mono("X3")}),
                    NotSimple);
    for (const ConeSpec* c : {&cone_C134(), &cone_C145p(), &cone_C456p(), &cone_C462p(),
                              &cone_C34(), &cone_C42p()}) {
        auto w = builtin_weights(*c);
        CHECK(expand(cone_gf(*c, w), 35) == weighted_enumeration(*c, w, 35));
    }
}

TEST_CASE("case map") {
    CHECK(case_of({0, 0, 0}) == CaseTag::Case1);
    CHECK(case_of({0, 1, 1}) == CaseTag::Case1);  // boundary e3 = e2
    CHECK(case_of({1, 2, 1}) == CaseTag::Case2b);
    CHECK_THROWS_AS(case_of({0, 3, 1}), OutsideIntegralCone);
    for (const LatticePoint& e : members_up_to(cone_C123(), 8)) {
        ThetaArgs args(3, e[2] - e[1], e[2], e[0] + e[2]);
        CHECK(case_of(e) == classify(args));
    }
}
