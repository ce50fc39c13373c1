#include <gtest/gtest.h>

#include "golden.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/endomorph.hpp"
#include "test_support.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

struct Pipeline {
    RingPresentation pres;
    GroebnerBasis G;
    EndomorphismAnsatz ansatz;
    ConstraintSystem sys;
};

Pipeline run(const std::string& name, OrderKind kind = OrderKind::lex, bool truncate = true) {
    auto pres = builtin(name).with_order(kind);
    GroebnerOptions opt;
    if (truncate) opt.truncate = pres.max_relation_weight();
    auto G = buchberger(pres.relation_polys(), opt);
    auto a = build_ansatz(pres);
    auto sys = extract_constraints(pres, G, a);
    return {pres, G, a, sys};
}

Parametric kpoly(const std::string& text) { return parse_polynomial(text, k_ring()); }

}  // namespace

TEST(Ansatz, F4C3Shape) {
    auto a = build_ansatz(builtin("F4_C3"));
    EXPECT_EQ(a.unknowns(), (std::vector<std::string>{"c[y4][4,0]", "c[y4][0,1]"}));
    EXPECT_EQ(format_polynomial(a.images[0]), "(k)*y1");
    EXPECT_EQ(format_polynomial(a.images[1]), "(c[y4][4,0])*y1^4 + (c[y4][0,1])*y4");
}

TEST(Ansatz, E6A6AndE7E6Shapes) {
    auto e6 = build_ansatz(builtin("E6_A6"));
    EXPECT_EQ(e6.unknowns(), (std::vector<std::string>{"c[y3][3,0,0]", "c[y3][0,1,0]", "c[y4][4,0,0]",
                                                       "c[y4][1,1,0]", "c[y4][0,0,1]"}));
    auto e7 = build_ansatz(builtin("E7_E6"));
    EXPECT_EQ(e7.unknowns(), (std::vector<std::string>{"c[y5][5,0,0]", "c[y5][0,1,0]", "c[y9][9,0,0]",
                                                       "c[y9][4,1,0]", "c[y9][0,0,1]"}));
    for (const auto& n : builtin_names()) {
        auto a = build_ansatz(builtin(n));
        for (std::size_t i = 0; i < a.pres.ctx().size(); ++i)
            EXPECT_EQ(a.slots[i].size(), monomial_basis(a.pres.ctx(), a.pres.ctx().weight(i)).size()) << n;
    }
}

TEST(Constraints, CaseTwoH8) {
    auto p = run("F4_B3");
    const auto& c = golden::find("F4_B3");
    auto ar = golden::alias_ring(c);
    std::vector<Parametric> want;
    for (const char* t : {"9*a^2 - 3*k^8 + 3*b^2", "6*a*b"})
        want.push_back(golden::to_params(c, parse_polynomial(t, ar), p.sys.params));
    std::vector<Parametric> got;
    for (const auto& con : p.sys.constraints)
        if (con.relation == 0) got.push_back(con.raw);
    ASSERT_EQ(got.size(), 2u);
    EXPECT_TRUE((got[0] == want[0] && got[1] == want[1]) || (got[0] == want[1] && got[1] == want[0]));
}

TEST(Constraints, PrintedResiduesReproduce) {
    for (const auto& c : golden::cases()) {
        if (c.residues.empty()) continue;
        auto p = run(c.name, c.residue_order);
        for (const auto& r : c.residues)
            EXPECT_EQ(p.sys.residues[r.relation], golden::residue(c, r, p.G.ring, p.sys.params))
                << c.name << " h for relation " << r.relation;
    }
}

TEST(Constraints, PrimitiveScaleRecorded) {
    auto p = run("E6_D5");
    ASSERT_FALSE(p.sys.constraints.empty());
    for (const auto& con : p.sys.constraints) {
        EXPECT_EQ(con.primitive, con.raw.scaled(con.scale));
        EXPECT_EQ(normalize_primitive(con.primitive), con.primitive);
    }
}

TEST(Constraints, RoutesAgree) {
    for (const char* name : {"F4_C3", "E6_A6", "E7_E6"}) {
        auto p = run(name);
        auto direct = extract_constraints(p.pres, p.G, p.ansatz, {ResidueRoute::division, false});
        auto parallel = extract_constraints(p.pres, p.G, p.ansatz, {ResidueRoute::cached, true});
        ASSERT_EQ(direct.residues.size(), p.sys.residues.size());
        for (std::size_t j = 0; j < direct.residues.size(); ++j) {
            EXPECT_EQ(direct.residues[j], p.sys.residues[j]) << name << " " << j;
            EXPECT_EQ(parallel.residues[j], p.sys.residues[j]) << name << " " << j;
        }
    }
}

TEST(Constraints, TruncatedMatchesFullBasis) {
    for (const char* name : {"F4_B3", "E6_A6"}) {
        auto t = run(name, OrderKind::lex, true);
        auto f = run(name, OrderKind::lex, false);
        for (std::size_t j = 0; j < t.sys.residues.size(); ++j) EXPECT_EQ(t.sys.residues[j], f.sys.residues[j]);
    }
}

TEST(Constraints, IdentityAnnihilatesEverything) {
    for (const char* name : {"F4_C3", "E6_A6", "E7_E6"}) {
        auto p = run(name);
        auto id = specialize_family(adams_family(p.pres), Rational(1));
        std::vector<Parametric> at{Parametric::constant(k_ring(), Rational(1))};
        for (const auto& u : p.sys.unknowns) at.push_back(id.at(u).in_ring(k_ring()));
        for (const auto& con : p.sys.constraints) EXPECT_TRUE(substitute(con.raw, at, k_ring()).is_zero()) << name;
    }
}

TEST(Constraints, TruncationBelowRelationWeightRejected) {
    auto pres = builtin("F4_C3");
    auto G = buchberger({pres.relations[0].poly}, GroebnerOptions{8});
    EXPECT_THROW(extract_constraints(pres, G), InvalidArgument);
}

TEST(Families, AdamsValues) {
    auto f = adams_family(builtin("F4_C3"));
    EXPECT_EQ(f.at("c[y4][4,0]"), Parametric(k_ring()));
    EXPECT_EQ(f.at("c[y4][0,1]"), kpoly("k^4"));
    auto e7 = adams_family(builtin("E7_E6"));
    for (const char* z : {"c[y5][5,0,0]", "c[y9][9,0,0]", "c[y9][4,1,0]"}) EXPECT_TRUE(e7.at(z).is_zero());
    EXPECT_EQ(e7.at("c[y5][0,1,0]"), kpoly("k^5"));
    EXPECT_EQ(e7.at("c[y9][0,0,1]"), kpoly("k^9"));
}

TEST(Families, AdamsAtOneIsIdentity) {
    auto pres = builtin("E6_A6");
    auto a = build_ansatz(pres);
    auto images = family_images(a, specialize_family(adams_family(pres), Rational(1)));
    for (std::size_t i = 0; i < images.size(); ++i)
        EXPECT_EQ(images[i], ParamPoly::variable(pres.ring, i)) << i;
}

TEST(Families, TauImages) {
    auto pres = builtin("E6_A6");
    auto a = build_ansatz(pres);
    auto images = family_images(a, tau_family());
    EXPECT_EQ(format_polynomial(images[1]), "(k^3)*y1^3 + (-k^3)*y3");
    EXPECT_EQ(format_polynomial(images[2]), "(k^4)*y1^4 + (-2*k^4)*y1*y3 + (k^4)*y4");
}

TEST(Families, TauIsInvolutionAtOne) {
    auto pres = builtin("E6_A6");
    auto tau1 = specialize_family(tau_family(), Rational(1));
    auto sq = compose_families(tau1, tau1, pres);
    // Oracle: expand tau(tau(y3)) by hand. tau(y3) = y1^3 - y3, so
    // tau(tau(y3)) = y1^3 - (y1^3 - y3) = y3.
    EXPECT_EQ(sq, specialize_family(adams_family(pres), Rational(1)));
}

TEST(Families, VerifyAdamsAndTau) {
    for (const char* name : {"F4_C3", "F4_B3", "E6_A6", "E6_D5", "E7_E6"}) {
        auto p = run(name);
        auto v = verify_family(p.sys, adams_family(p.pres));
        EXPECT_TRUE(v.pass) << name;
        EXPECT_TRUE(verify_family_direct(p.pres, p.G, adams_family(p.pres)).pass) << name;
    }
    auto e6 = run("E6_A6");
    EXPECT_TRUE(verify_family(e6.sys, tau_family()).pass);
}

TEST(Families, VerifyRejectsWrongCandidate) {
    auto p = run("F4_C3");
    auto bad = adams_family(p.pres);
    bad.values["c[y4][0,1]"] = kpoly("k^4 + 1");
    auto v = verify_family(p.sys, bad);
    EXPECT_FALSE(v.pass);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_FALSE(v.value.is_zero());
    auto d = verify_family_direct(p.pres, p.G, bad);
    EXPECT_FALSE(d.pass);
    EXPECT_FALSE(d.residue.is_zero());
}

TEST(Families, VerifyNeedsEverySymbol) {
    auto p = run("F4_C3");
    auto partial = adams_family(p.pres);
    partial.values.erase("c[y4][4,0]");
    EXPECT_THROW(verify_family(p.sys, partial), InvalidArgument);
    EXPECT_THROW(verify_family(p.sys, tau_family()), ContextMismatch);
}

TEST(Families, PrintedSolutionsVerify) {
    for (const auto& c : golden::cases()) {
        auto p = run(c.name);
        for (std::size_t i = 0; i < c.solutions.size(); ++i)
            EXPECT_TRUE(verify_family(p.sys, golden::solution(c, i)).pass) << c.name << " solution " << i + 1;
    }
}

TEST(Families, Composition) {
    auto pres = builtin("F4_C3");
    auto adams = adams_family(pres);
    auto two = specialize_family(adams, Rational(2)), three = specialize_family(adams, Rational(3));
    EXPECT_EQ(compose_families(two, three, pres), specialize_family(adams, Rational(6)));
    auto id = specialize_family(adams, Rational(1));
    auto odd = adams;
    odd.values["c[y4][4,0]"] = kpoly("5*k^4 - 1");
    EXPECT_EQ(compose_families(odd, id, pres), odd);
    EXPECT_EQ(compose_families(id, odd, pres), odd);
    EXPECT_THROW(compose_families(tau_family(), id, pres), ContextMismatch);
}

TEST(Families, TextRoundTrip) {
    auto pres = builtin("E6_A6");
    auto a = build_ansatz(pres);
    auto tau = tau_family();
    auto text = format_family(tau, a);
    EXPECT_EQ(parse_family(text, a), tau);
    EXPECT_EQ(parse_family("# tau\nk = k\n" + text, a), tau);
    EXPECT_THROW(parse_family("c[y9][0,0,1] = k\n", a), ParseError);
    EXPECT_THROW(parse_family("c[y4][0,0,1] k\n", a), ParseError);
    EXPECT_THROW(parse_family("c[y4][0,0,1] = k^4 +\n", a), ParseError);
}
