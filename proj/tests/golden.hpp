#pragma once

// Printed Gröbner bases, residues h_j and solution families for Cases 1-5, typed in
// from the published tables. Residue coefficients are kept in the printed factored
// shape: factor * (inner sum), with the short coefficient names a, b, a1, ... mapped
// onto ansatz symbols through `aliases`.

#include <string>
#include <utility>
#include <vector>

#include "rigidity/endomorph.hpp"
#include "rigidity/text.hpp"

namespace rigidity::golden {

struct ResidueTerm {
    const char* mono;
    const char* factor;
    const char* inner;
};

struct Residue {
    std::size_t relation;
    std::vector<ResidueTerm> terms;
};

struct Case {
    const char* name;
    int number;
    /// Order under which the printed residues reproduce (the printed bases are lex).
    OrderKind residue_order;
    std::vector<std::pair<const char*, const char*>> aliases;
    std::vector<const char*> basis;
    bool basis_complete;
    std::vector<Residue> residues;
    /// Printed solution families, as alias = value-in-k assignments.
    std::vector<std::vector<std::pair<const char*, const char*>>> solutions;
};

inline const std::vector<Case>& cases() {
    static const std::vector<Case> all = {
        {"F4_C3", 1, OrderKind::lex,
         {{"a", "c[y4][4,0]"}, {"b", "c[y4][0,1]"}},
         {"24*y4^2 + y1^8 - 12*y1^4*y4", "3*y1^4*y4^2 - 28*y4^3", "y4^4"},
         true,
         {{0,
           {{"y1^4*y4", "12", "24*a^2 + k^8 - 12*k^4*a + 4*b*a - k^4*b"},
            {"y4^2", "12", "-48*a^2 + 24*k^4*a - 2*k^8 + 2*b^2"}}},
          {1,
           {{"y4^3", "-1",
             "-1344*k^4*b^2 + 1792*b^2*a - 832*k^12 + 53248*a^3 - 25344*k^4*b*a + 64*b^3 - 119808*k^4*a^2 "
             "+ 19968*k^8*a + 2112*k^8*b + 16896*b*a^2"}}}},
         {{{"a", "0"}, {"b", "k^4"}}}},
        {"F4_B3", 2, OrderKind::lex,
         {{"a", "c[y4][4,0]"}, {"b", "c[y4][0,1]"}},
         {"y1^8 - 3*y4^2", "15*y4^2*y1^4 - 26*y4^3", "y4^4"},
         true,
         {{0, {{"y4^2", "3", "3*a^2 - k^8 + b^2"}, {"y1^4*y4", "6", "a*b"}}},
          {1, {{"y4^3", "1/5", "676*a^3 - 130*k^12 + 676*a*b^2 + 1170*a^2*b + 130*b^3"}}}},
         {{{"a", "0"}, {"b", "k^4"}}}},
        {"E6_A6", 3, OrderKind::lex,
         {{"a1", "c[y3][3,0,0]"},
          {"a2", "c[y3][0,1,0]"},
          {"b1", "c[y4][4,0,0]"},
          {"b2", "c[y4][1,1,0]"},
          {"b3", "c[y4][0,0,1]"}},
         {"6*y4^2 - 12*y1*y3*y4 + 9*y1^2*y3^2 + 3*y1^4*y4 - 6*y1^5*y3",
          "y3*y1^6 - 3*y1^3*y3^2 + 3*y3*y1^2*y4 + y3^3 - 3*y4^2*y1",
          "3*y3^2*y1^5 - 8*y3^3*y1^2 - 3*y4^2*y1^3 + 12*y4*y3^2*y1 - 6*y4^2*y3",
          "2*y3^4 - 30*y3^2*y1^2*y4 + 33*y4^2*y3*y1 - y3^3*y1^3 - 22*y4^3 + 12*y1^5*y4*y3"},
         false,
         {},
         {{{"a1", "k^3"}, {"a2", "-k^3"}, {"b1", "k^4"}, {"b2", "-2*k^4"}, {"b3", "k^4"}},
          {{"a1", "0"}, {"a2", "k^3"}, {"b1", "0"}, {"b2", "0"}, {"b3", "k^4"}}}},
        {"E6_D5", 4, OrderKind::lex,
         {{"a", "c[y4][4,0]"}, {"b", "c[y4][0,1]"}},
         {"2*y1^9 + 3*y1*y4^2 - 6*y1^5*y4", "6*y4*y1^8 - 15*y1^4*y4^2 + 2*y4^3", "3*y4^2*y1^5 - 7*y4^3*y1",
          "y4^3*y1^4 - 2*y4^4", "y4^4*y1", "y4^5"},
         true,
         {{0,
           {{"y1*y4^2", "3/2*k", "-2*k^8 + 6*k^4*a - 3*a^2 + 2*b^2"},
            {"y1^5*y4", "3/2*k", "4*k^8 - 12*k^4*a + 6*a^2 - 4*k^4*b + 4*a*b"}}},
          {1,
           {{"y4^3", "1/2", "-2*a^3 - 2*k^12 + 12*k^4*a^2 - 2*a^2*b + 2*b^3 + 8*k^4*a*b"},
            {"y1^4*y4^2", "1/2",
             "12*a^3 + 12*k^12 - 60*k^4*a*b + 6*a*b^2 - 12*k^4*b^2 - 72*k^4*a^2 + 15*a^2*b"}}}},
         {{{"a", "0"}, {"b", "k^4"}}}},
        {"E7_E6", 5, OrderKind::wgrevlex,
         {{"a1", "c[y5][5,0,0]"},
          {"a2", "c[y5][0,1,0]"},
          {"b1", "c[y9][9,0,0]"},
          {"b2", "c[y9][4,1,0]"},
          {"b3", "c[y9][0,0,1]"}},
         {"-2*y5*y9 + 9*y1^4*y5^2 - 6*y1^9*y5 + y1^14", "y9^2 + 10*y1^3*y5^3 - 9*y1^8*y5^2 + 2*y1^13*y5",
          "-y5^2 + 2*y1*y9"},
         false,
         {{0,
           {{"y1*y9", "1", "2*a2^2 - 2*k*b3"},
            {"y1^5*y5", "1", "2*a1*a2 - 2*k*b2"},
            {"y1^10", "1", "a1^2 - 2*k*b1"}}},
          {1,
           {{"y9*y1^5", "2", "81*k^4*a1^2 + 2*a2*b2 - 9*k^4*a2^2 - 18*a1*b1 - 54*k^9*a1 + 9*k^14 + a1*b3"},
            {"y1^9*y5", "2",
             "a1*b2 + a2*b1 + 3*k^9*a2 + 6*a1*b1 - 27*k^4*a1^2 + 18*k^9*a1 - 9*k^4*a1*a2 - 3*k^14"},
            {"y5*y9", "2", "a2*b3 - k^14 + 2*a1*b1 - 9*k^4*a1^2 + 6*k^9*a1"}}},
          {2,
           {{"y9*y1^9", "1",
             "2*b1*b3 + 270*k^3*a1^2*a2 - 162*k^8*a1*a2 + 72*k^13*a1 + 18*b1*b2 + 18*k^13*a2 - 18*k^8*a2^2 "
             "+ 360*k^3*a1^3 - 324*k^8*a1^2 + 60*k^3*a1*a2^2 + 2*b2^2 + 36*b1^2"},
            {"y9*y5*y1^4", "1",
             "522*k^8*a1^2 - 580*k^3*a1^3 + 2*b2*b3 - 300*k^3*a1^2*a2 - 58*b1^2 - 116*k^13*a1 "
             "+ 180*k^8*a1*a2 - 20*b1*b2 - 20*k^13*a2 + 20*k^3*a2^3"},
            {"y9^2", "1",
             "b3^2 - 15*k^3*a1^2*a2 + 9*k^8*a1*a2 - 3*b1^2 - k^13*a2 - 30*k^3*a1^3 + 27*k^8*a1^2 "
             "- 6*k^13*a1 - b1*b2"}}}},
         // Printed as "a1=b1=b2=0, a2=k^5, b=k^9"; b is read as b3.
         {{{"a1", "0"}, {"b1", "0"}, {"b2", "0"}, {"a2", "k^5"}, {"b3", "k^9"}}}},
    };
    return all;
}

inline const Case& find(const std::string& name) {
    for (const auto& c : cases())
        if (name == c.name) return c;
    throw InvalidArgument("no golden case " + name);
}

/// Ring with k followed by the short alias names.
inline RingPtr alias_ring(const Case& c) {
    std::vector<std::string> names{"k"};
    for (const auto& [a, _] : c.aliases) names.push_back(a);
    return make_symbol_ring(names);
}

/// Maps a polynomial over alias_ring(c) into the ansatz parameter ring.
inline Parametric to_params(const Case& c, const Parametric& p, const RingPtr& params) {
    std::vector<Parametric> images{Parametric::variable(params, "k")};
    for (const auto& [_, sym] : c.aliases) images.push_back(Parametric::variable(params, sym));
    return substitute(p, images, params);
}

/// The printed residue h_j, expanded, in `ring` with coefficients over `params`.
inline ParamPoly residue(const Case& c, const Residue& r, const RingPtr& ring, const RingPtr& params) {
    auto ar = alias_ring(c);
    ParamPoly out(ring);
    for (const auto& t : r.terms) {
        Parametric coeff = parse_polynomial(t.factor, ar) * parse_polynomial(t.inner, ar);
        Monomial m = parse_polynomial(t.mono, ring).leading_monomial();
        out += ParamPoly::monomial(ring, m, to_params(c, coeff, params));
    }
    return out;
}

inline std::vector<ScalarPoly> basis(const Case& c, const RingPtr& ring) {
    std::vector<ScalarPoly> out;
    for (const char* t : c.basis) out.push_back(normalize_primitive(parse_polynomial(t, ring)));
    return out;
}

/// A printed solution as a family; unlisted symbols of the ansatz are left unassigned.
inline CoefficientFamily solution(const Case& c, std::size_t i) {
    CoefficientFamily f{"printed" + std::to_string(i + 1), c.name, k_ring(), {}};
    for (const auto& [alias, value] : c.solutions[i]) {
        std::string sym;
        for (const auto& [a, s] : c.aliases)
            if (std::string(a) == alias) sym = s;
        f.values[sym] = parse_polynomial(value, k_ring());
    }
    return f;
}

}  // namespace rigidity::golden
