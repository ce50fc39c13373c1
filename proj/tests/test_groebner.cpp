#include <gtest/gtest.h>

#include <algorithm>

#include "rigidity/catalog.hpp"
#include "rigidity/groebner.hpp"
#include "test_support.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

std::vector<ScalarPoly> parse_all(const std::vector<std::string>& texts, const RingPtr& r) {
    std::vector<ScalarPoly> out;
    for (const auto& t : texts) out.push_back(normalize_primitive(P(t, r)));
    return out;
}

bool same_set(std::vector<ScalarPoly> a, std::vector<ScalarPoly> b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a)
        if (std::find(b.begin(), b.end(), p) == b.end()) return false;
    return true;
}

GroebnerBasis basis_of(const std::string& name, std::optional<unsigned> truncate = std::nullopt) {
    auto pres = builtin(name);
    GroebnerOptions opt;
    opt.truncate = truncate;
    return buchberger(pres.relation_polys(), opt);
}

const std::vector<std::string> kCase1 = {"24*y4^2 + y1^8 - 12*y1^4*y4", "3*y1^4*y4^2 - 28*y4^3", "y4^4"};

}  // namespace

TEST(SPolynomial, DisjointLeads) {
    auto r = f4_ring();
    EXPECT_EQ(s_polynomial(P("y1^8 - 3*y4^2", r), P("y4^4", r)), P("-3*y4^6", r));
}

TEST(SPolynomial, SelfAndMonomials) {
    auto r = f4_ring();
    auto f = P("y1^8 - 3*y4^2", r);
    EXPECT_TRUE(s_polynomial(f, f).is_zero());
    EXPECT_TRUE(s_polynomial(P("y1^4*y4^2", r), P("y1^8", r)).is_zero());
    EXPECT_THROW(s_polynomial(f, ScalarPoly(r)), InvalidArgument);
}

TEST(NormalForm, CaseOneExamples) {
    auto r = f4_ring();
    auto G = parse_all(kCase1, r);
    auto pres = builtin("F4_C3");
    EXPECT_TRUE(normal_form(pres.relations[1].poly, G).residue.is_zero());
    EXPECT_TRUE(normal_form(P("y4^4", r), G).residue.is_zero());
    // One step by 3*y1^4*y4^2 - 28*y4^3 leaves 28/3*y4^3.
    auto div = normal_form(P("y1^4*y4^2", r), G);
    EXPECT_EQ(div.residue, P("28/3*y4^3", r));
}

TEST(NormalForm, ReexpansionIdentity) {
    auto r = f4_ring();
    auto G = parse_all(kCase1, r);
    auto f = P("y1^16 - 5*y1^12*y4 + 7*y1^4*y4^3 + 2*y4^4", r);
    auto div = normal_form(f, G);
    ScalarPoly sum = div.residue;
    for (std::size_t i = 0; i < G.size(); ++i) sum += div.quotients[i] * G[i];
    EXPECT_EQ(sum, f);
    for (const auto& t : div.residue.terms())
        for (const auto& g : G) EXPECT_FALSE(g.leading_monomial().divides(t.mono));
}

TEST(NormalForm, ParametricCoefficients) {
    auto r = f4_ring();
    auto params = make_symbol_ring({"k", "a", "b"});
    auto G = parse_all(kCase1, r);
    ParamPoly f = param_poly(r, params, {{"y1^4*y4^2", "a + b"}, {"y4^4", "k"}});
    ParamPoly want = param_poly(r, params, {{"y4^3", "28/3*a + 28/3*b"}});
    EXPECT_EQ(normal_form(f, G).residue, want);
}

TEST(NormalForm, ZeroDivisorRejected) {
    auto r = f4_ring();
    EXPECT_THROW(normal_form(P("y1", r), std::vector<ScalarPoly>{ScalarPoly(r)}), InvalidArgument);
}

TEST(Buchberger, CaseOneGolden) {
    auto G = basis_of("F4_C3");
    EXPECT_TRUE(same_set(G.elements, parse_all(kCase1, G.ring)));
}

TEST(Buchberger, CaseTwoGolden) {
    auto G = basis_of("F4_B3");
    EXPECT_TRUE(same_set(G.elements, parse_all({"y1^8 - 3*y4^2", "15*y4^2*y1^4 - 26*y4^3", "y4^4"}, G.ring)));
}

TEST(Buchberger, CaseFourGolden) {
    auto G = basis_of("E6_D5");
    auto want = parse_all({"2*y1^9 + 3*y1*y4^2 - 6*y1^5*y4", "6*y4*y1^8 - 15*y1^4*y4^2 + 2*y4^3",
                           "3*y4^2*y1^5 - 7*y4^3*y1", "y4^3*y1^4 - 2*y4^4", "y4^4*y1", "y4^5"},
                          G.ring);
    EXPECT_TRUE(same_set(G.elements, want));
}

TEST(Buchberger, MonomialIdeal) {
    auto r = f4_ring();
    auto G = buchberger({P("y1", r), P("y4", r)});
    EXPECT_TRUE(same_set(G.elements, {P("y1", r), P("y4", r)}));
}

TEST(Buchberger, OutputSortedAndPrimitive) {
    auto G = basis_of("E6_D5");
    for (std::size_t i = 0; i + 1 < G.elements.size(); ++i)
        EXPECT_TRUE(G.ring->compare(G.elements[i].leading_monomial(), G.elements[i + 1].leading_monomial()) > 0);
    for (const auto& e : G.elements) EXPECT_EQ(normalize_primitive(e), e);
}

TEST(Buchberger, Errors) {
    auto r = f4_ring();
    EXPECT_THROW(buchberger({}), InvalidArgument);
    EXPECT_THROW(buchberger({P("y1", r), ScalarPoly(r)}), InvalidArgument);
    EXPECT_THROW(buchberger({P("y1", r), P("y1", e6_ring())}), ContextMismatch);
    GroebnerOptions opt;
    opt.truncate = 7;
    EXPECT_THROW(buchberger(builtin("F4_C3").relation_polys(), opt), InvalidArgument);
    opt.truncate = 12;
    EXPECT_THROW(buchberger({P("y1 + y4", r)}, opt), InvalidArgument);
}

TEST(Buchberger, ResourceCeiling) {
    GroebnerOptions opt;
    opt.max_pairs = 1;
    EXPECT_THROW(buchberger(builtin("E6_D5").relation_polys(), opt), ResourceLimitExceeded);
    opt.max_pairs = 500000;
    opt.max_terms = 2;
    EXPECT_THROW(buchberger(builtin("E6_D5").relation_polys(), opt), ResourceLimitExceeded);
}

TEST(Buchberger, PermutationInvariance) {
    for (const char* name : {"F4_C3", "E6_D5", "E6_A6"}) {
        auto gens = builtin(name).relation_polys();
        auto ref = buchberger(gens).elements;
        std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        do {
            EXPECT_EQ(buchberger(gens).elements, ref) << name;
        } while (std::next_permutation(gens.begin(), gens.end(),
                                       [](const auto& a, const auto& b) { return a.size() < b.size(); }));
        // Scaling a generator does not change the normalized basis either.
        gens[0] = gens[0].scaled(Rational(-7, 2));
        EXPECT_EQ(buchberger(gens).elements, ref) << name;
    }
}

TEST(Buchberger, WeightedOrdersAlsoWork) {
    for (auto kind : {OrderKind::wgrlex, OrderKind::wgrevlex}) {
        auto pres = builtin("E6_D5").with_order(kind);
        auto G = buchberger(pres.relation_polys());
        EXPECT_EQ(standard_monomial_count(G), std::optional<std::uint64_t>(27));
    }
}

TEST(Buchberger, TruncatedAgreesWithFull) {
    for (const char* name : {"F4_C3", "F4_B3", "E6_D5", "E6_A6", "E7_E6"}) {
        auto pres = builtin(name);
        unsigned D = pres.max_relation_weight();
        auto full = buchberger(pres.relation_polys());
        auto trunc = buchberger(pres.relation_polys(), GroebnerOptions{D});
        EXPECT_LE(trunc.elements.size(), full.elements.size());
        for (unsigned w = 0; w <= D; ++w)
            for (const auto& m : monomial_basis(pres.ctx(), w)) {
                auto mono = ScalarPoly::monomial(pres.ring, m, Rational(1));
                EXPECT_EQ(residue(mono, trunc), residue(mono, full)) << name << " " << format_polynomial(mono);
            }
    }
}

TEST(Membership, Examples) {
    auto G4 = basis_of("E6_D5");
    auto r = G4.ring;
    auto g9 = builtin("E6_D5").relations[0].poly;
    auto m = ideal_membership(g9, G4);
    EXPECT_TRUE(m.member);
    ScalarPoly sum(r);
    for (std::size_t i = 0; i < G4.elements.size(); ++i) sum += m.quotients[i] * G4.elements[i];
    EXPECT_EQ(sum, g9);
    EXPECT_TRUE(ideal_membership(P("2*y1^9 + 3*y1*y4^2 - 6*y1^5*y4", r), G4).member);

    auto G1 = basis_of("F4_C3");
    auto y4cubed = P("y4^3", G1.ring);
    auto m1 = ideal_membership(y4cubed, G1);
    EXPECT_FALSE(m1.member);
    EXPECT_EQ(m1.residue, y4cubed);
}

TEST(Membership, TruncationBoundEnforced) {
    auto G = basis_of("F4_C3", 12);
    EXPECT_NO_THROW(ideal_membership(P("y4^3", G.ring), G));
    EXPECT_THROW(ideal_membership(P("y4^4", G.ring), G), InvalidArgument);
}

TEST(StandardMonomials, Counts) {
    EXPECT_EQ(standard_monomial_count(basis_of("F4_C3")), std::optional<std::uint64_t>(24));
    EXPECT_EQ(standard_monomial_count(basis_of("F4_B3")), std::optional<std::uint64_t>(24));
    EXPECT_EQ(standard_monomial_count(basis_of("E6_D5")), std::optional<std::uint64_t>(27));
    auto r = f4_ring();
    EXPECT_EQ(standard_monomial_count(buchberger({P("y1", r), P("y4", r)})), std::optional<std::uint64_t>(1));
    EXPECT_EQ(standard_monomial_count(buchberger({P("y1^3", r)})), std::nullopt);
    EXPECT_THROW(standard_monomial_count(basis_of("F4_C3", 12)), InvalidArgument);
}

TEST(StandardMonomials, AgreesAcrossOrders) {
    for (const char* name : {"F4_C3", "E6_A6", "E7_E6"}) {
        auto pres = builtin(name);
        auto lex = standard_monomial_count(buchberger(pres.relation_polys()));
        auto grev = standard_monomial_count(buchberger(pres.with_order(OrderKind::wgrevlex).relation_polys()));
        ASSERT_TRUE(lex.has_value()) << name;
        EXPECT_EQ(lex, grev) << name;
    }
}

TEST(NormalFormCache, MatchesDirectDivision) {
    auto G = basis_of("E6_A6", 12);
    NormalFormCache cache(G);
    auto params = make_symbol_ring({"k", "a"});
    for (unsigned w : {8u, 9u, 12u}) {
        ParamPoly f(G.ring);
        unsigned i = 1;
        for (const auto& m : monomial_basis(G.ring->ctx, w)) {
            auto coeff = parse_polynomial(std::to_string(i++) + "*k^2 - a", params);
            f += ParamPoly::monomial(G.ring, m, coeff);
        }
        EXPECT_EQ(cache.residue(f), residue(f, G));
    }
    EXPECT_GT(cache.size(), 0u);
}
