#pragma once

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/groebner.hpp"
#include "rigidity/presentation.hpp"
#include "rigidity/text.hpp"

namespace rigidity {

/// The general graded endomorphism f(y_i) = sum_alpha c[y_i][alpha] * y^alpha, with
/// alpha running over monomial_basis(ctx, weight(y_i)) and f(y_1) = k * y_1.
///
/// Parameter symbols live in `params`: `k` first, then the unknowns in generator
/// order and, within a generator, in monomial-basis order.
struct EndomorphismAnsatz {
    struct Slot {
        std::size_t generator;
        Monomial alpha;
        std::size_t symbol;  // variable index in `params`
    };

    RingPresentation pres;
    RingPtr params;
    std::vector<std::vector<Slot>> slots;  // per generator
    std::vector<ParamPoly> images;         // f(y_i), in pres.ring

    std::size_t unknown_count() const { return params->size() - 1; }

    /// Names of all unknowns (every parameter except k), in declaration order.
    std::vector<std::string> unknowns() const {
        const auto& names = params->ctx.names();
        return {names.begin() + 1, names.end()};
    }
};

/// `c[y4][4,0]`: generator name, then the full exponent vector of the monomial.
inline std::string coefficient_symbol(const VariableContext& ctx, std::size_t generator, const Monomial& alpha) {
    std::string s = "c[" + ctx.name(generator) + "][";
    for (std::size_t i = 0; i < alpha.arity(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
    return s + "]";
}

inline EndomorphismAnsatz build_ansatz(const RingPresentation& pres) {
    const auto& ctx = pres.ctx();
    std::vector<std::string> names{"k"};
    EndomorphismAnsatz a;
    a.pres = pres;
    a.slots.resize(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        auto basis = monomial_basis(ctx, ctx.weight(i));
        if (i == pres.kaehler) {
            if (basis.size() != 1 || !(basis[0] == Monomial::variable(ctx.size(), i)))
                throw InvalidArgument("weight-1 basis is not spanned by the Kaehler generator");
            a.slots[i].push_back({i, basis[0], 0});
            continue;
        }
        for (auto& alpha : basis) {
            names.push_back(coefficient_symbol(ctx, i, alpha));
            a.slots[i].push_back({i, std::move(alpha), names.size() - 1});
        }
    }
    a.params = make_symbol_ring(names);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        ParamPoly img(pres.ring);
        for (const auto& s : a.slots[i])
            img += ParamPoly::monomial(pres.ring, s.alpha, Parametric::variable(a.params, s.symbol));
        a.images.push_back(std::move(img));
    }
    return a;
}

/// One equation of the system: the coefficient of y^alpha in the residue h_j.
struct Constraint {
    std::size_t relation;
    Monomial alpha;
    Parametric raw;
    /// normalize_primitive(raw) == scale * raw.
    Parametric primitive;
    Rational scale;
};

struct ConstraintSystem {
    RingPresentation pres;
    RingPtr params;
    std::vector<std::string> unknowns;
    /// Residue of f(g_j) modulo the basis, one per relation.
    std::vector<ParamPoly> residues;
    std::vector<Constraint> constraints;
    std::optional<unsigned> truncation;
};

enum class ResidueRoute {
    cached,    // memoized monomial normal forms combined linearly
    division,  // direct division with parametric coefficients
};

struct ExtractOptions {
    ResidueRoute route = ResidueRoute::cached;
    bool parallel = false;
};

namespace detail {

inline void check_basis_for(const RingPresentation& pres, const GroebnerBasis& G) {
    if (!(G.ring->ctx == pres.ctx())) throw ContextMismatch("basis and presentation have different variables");
    if (G.truncation && *G.truncation < pres.max_relation_weight())
        throw InvalidArgument("basis truncated at " + std::to_string(*G.truncation) +
                              ", below the largest relation weight " + std::to_string(pres.max_relation_weight()));
}

inline ParamPoly substituted_relation(const RingPresentation& pres, const EndomorphismAnsatz& a, std::size_t j,
                                     const RingPtr& target) {
    const Relation& rel = pres.relations[j];
    ParamPoly s = substitute(rel.poly, a.images, a.pres.ring);
    if (!weighted_degree(s).homogeneous_of(rel.weight))
        throw Error("substituted relation " + rel.label + " is not homogeneous");
    return s.in_ring(target);
}

}  // namespace detail

/// Residues h_j of f(g_j) modulo `G`, split into the coefficient equations of (j, alpha).
inline ConstraintSystem extract_constraints(const RingPresentation& pres, const GroebnerBasis& G,
                                            const EndomorphismAnsatz& ansatz, const ExtractOptions& opt = {}) {
    detail::check_basis_for(pres, G);
    if (!(ansatz.pres.ctx() == pres.ctx())) throw ContextMismatch("ansatz was built for another presentation");
    const std::size_t m = pres.relations.size();
    auto one = [&](std::size_t j, NormalFormCache* cache) {
        ParamPoly s = detail::substituted_relation(pres, ansatz, j, G.ring);
        return cache ? cache->residue(s) : residue(s, G);
    };

    ConstraintSystem sys{pres, ansatz.params, ansatz.unknowns(), {}, {}, G.truncation};
    sys.residues.resize(m);
    if (opt.parallel && m > 1) {
        std::vector<std::future<ParamPoly>> jobs;
        for (std::size_t j = 0; j < m; ++j)
            jobs.push_back(std::async(std::launch::async, [&, j] {
                if (opt.route == ResidueRoute::division) return one(j, nullptr);
                NormalFormCache cache(G);
                return one(j, &cache);
            }));
        for (std::size_t j = 0; j < m; ++j) sys.residues[j] = jobs[j].get();
    } else {
        NormalFormCache cache(G);
        for (std::size_t j = 0; j < m; ++j)
            sys.residues[j] = one(j, opt.route == ResidueRoute::cached ? &cache : nullptr);
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (const auto& t : sys.residues[j].terms()) {
            auto [prim, scale] = primitive_with_scale(t.coeff);
            sys.constraints.push_back({j, t.mono, t.coeff, std::move(prim), std::move(scale)});
        }
    }
    return sys;
}

inline ConstraintSystem extract_constraints(const RingPresentation& pres, const GroebnerBasis& G,
                                            const ExtractOptions& opt = {}) {
    return extract_constraints(pres, G, build_ansatz(pres), opt);
}

inline RingPtr k_ring() {
    static const RingPtr r = make_symbol_ring({"k"});
    return r;
}

inline Parametric k_power(unsigned e) {
    return Parametric::monomial(k_ring(), Monomial{e}, Rational(1));
}

/// Values of the ansatz unknowns as polynomials in k. Symbols that are absent are
/// unassigned; `k` itself is never stored.
struct CoefficientFamily {
    std::string name;
    std::string presentation;
    RingPtr kring;
    std::map<std::string, Parametric> values;
    /// Coefficient of y_1 in f(y_1): k itself, or a number once specialized.
    Parametric k_value = k_power(1);

    const Parametric& at(const std::string& symbol) const {
        auto it = values.find(symbol);
        if (it == values.end()) throw InvalidArgument("family '" + name + "' does not assign " + symbol);
        return it->second;
    }

    friend bool operator==(const CoefficientFamily& a, const CoefficientFamily& b) {
        return a.presentation == b.presentation && a.k_value == b.k_value && a.values == b.values;
    }
};

/// psi^k: f(y_i) = k^weight(i) * y_i.
inline CoefficientFamily adams_family(const RingPresentation& pres) {
    auto a = build_ansatz(pres);
    CoefficientFamily f{"adams", pres.name, k_ring(), {}};
    const auto& ctx = pres.ctx();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i == pres.kaehler) continue;
        Monomial own = Monomial::variable(ctx.size(), i);
        for (const auto& s : a.slots[i])
            f.values[a.params->ctx.name(s.symbol)] = s.alpha == own ? k_power(ctx.weight(i)) : Parametric(k_ring());
    }
    return f;
}

/// The extra family on E6_A6: f(y3) = k^3 y1^3 - k^3 y3, f(y4) = k^4 y1^4 - 2k^4 y1 y3 + k^4 y4.
inline CoefficientFamily tau_family() {
    CoefficientFamily f{"tau", "E6_A6", k_ring(), {}};
    f.values["c[y3][3,0,0]"] = k_power(3);
    f.values["c[y3][0,1,0]"] = -k_power(3);
    f.values["c[y4][4,0,0]"] = k_power(4);
    f.values["c[y4][1,1,0]"] = k_power(4).scaled(Rational(-2));
    f.values["c[y4][0,0,1]"] = k_power(4);
    return f;
}

/// Replaces k by the rational `p` everywhere.
inline CoefficientFamily specialize_family(const CoefficientFamily& f, const Rational& p) {
    CoefficientFamily out{f.name + "(k=" + to_string(p) + ")", f.presentation, f.kring, {}};
    std::vector<Parametric> at{Parametric::constant(k_ring(), p)};
    for (const auto& [s, v] : f.values) out.values[s] = substitute(v.in_ring(k_ring()), at, k_ring());
    out.k_value = substitute(f.k_value.in_ring(k_ring()), at, k_ring());
    return out;
}

/// Generator images of a family: f(y_i) with coefficients in Q[k].
inline std::vector<ParamPoly> family_images(const EndomorphismAnsatz& a, const CoefficientFamily& f) {
    const auto& ctx = a.pres.ctx();
    std::vector<ParamPoly> out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        ParamPoly img(a.pres.ring);
        for (const auto& s : a.slots[i]) {
            Parametric c = i == a.pres.kaehler ? f.k_value : f.at(a.params->ctx.name(s.symbol));
            img += ParamPoly::monomial(a.pres.ring, s.alpha, c.in_ring(k_ring()));
        }
        out.push_back(std::move(img));
    }
    return out;
}

/// Reads the family back from generator images (inverse of family_images).
inline CoefficientFamily family_from_images(const EndomorphismAnsatz& a, const std::vector<ParamPoly>& images,
                                            std::string name) {
    CoefficientFamily out{std::move(name), a.pres.name, k_ring(), {}};
    const auto& ctx = a.pres.ctx();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (!weighted_degree(images[i]).homogeneous_of(ctx.weight(i)))
            throw InvalidArgument("image of " + ctx.name(i) + " is not homogeneous of its weight");
        if (i == a.pres.kaehler) {
            out.k_value = images[i].coefficient(a.slots[i][0].alpha);
            if (out.k_value.is_zero()) out.k_value = Parametric(k_ring());
            continue;
        }
        for (const auto& s : a.slots[i]) {
            Parametric c = images[i].coefficient(s.alpha);
            out.values[a.params->ctx.name(s.symbol)] = c.is_zero() ? Parametric(k_ring()) : c;
        }
    }
    return out;
}

/// f o g: substitutes g's generator images into f, i.e. y -> g(y) -> f(g(y)).
///
/// Both families share the symbol k, so the y_1 coefficient of the result is k^2
/// unless one side was specialized; for specialized families it is the product.
inline CoefficientFamily compose_families(const CoefficientFamily& f, const CoefficientFamily& g,
                                          const RingPresentation& pres) {
    if (f.presentation != pres.name || g.presentation != pres.name)
        throw ContextMismatch("families belong to different presentations");
    auto a = build_ansatz(pres);
    auto fi = family_images(a, f);
    auto gi = family_images(a, g);
    std::vector<ParamPoly> out;
    for (const auto& img : gi) out.push_back(substitute(img, fi, pres.ring));
    return family_from_images(a, out, f.name + "*" + g.name);
}

/// Result of checking a family against a constraint system.
struct FamilyVerdict {
    bool pass = true;
    /// Index into the system's constraints of the first failure, with its value in Q[k].
    std::optional<std::size_t> witness;
    Parametric value;
};

/// Substitutes the family into every constraint; passes iff each becomes 0 in Q[k].
/// Throws when a symbol of the system is unassigned.
inline FamilyVerdict verify_family(const ConstraintSystem& sys, const CoefficientFamily& f) {
    if (f.presentation != sys.pres.name) throw ContextMismatch("family belongs to another presentation");
    std::vector<Parametric> at{f.k_value.in_ring(k_ring())};
    for (const auto& u : sys.unknowns) at.push_back(f.at(u).in_ring(k_ring()));
    for (std::size_t c = 0; c < sys.constraints.size(); ++c) {
        Parametric v = substitute(sys.constraints[c].raw, at, k_ring());
        if (!v.is_zero()) return {false, c, std::move(v)};
    }
    return {};
}

/// The same check without a constraint system: each f(g_j) reduced directly
/// modulo `G` must vanish. Witness is the relation index and its residue.
struct DirectVerdict {
    bool pass = true;
    std::optional<std::size_t> relation;
    ParamPoly residue;
};

inline DirectVerdict verify_family_direct(const RingPresentation& pres, const GroebnerBasis& G,
                                          const CoefficientFamily& f) {
    detail::check_basis_for(pres, G);
    if (f.presentation != pres.name) throw ContextMismatch("family belongs to another presentation");
    auto images = family_images(build_ansatz(pres), f);
    for (std::size_t j = 0; j < pres.relations.size(); ++j) {
        ParamPoly s = substitute(pres.relations[j].poly, images, pres.ring).in_ring(G.ring);
        ParamPoly h = residue(s, G);
        if (!h.is_zero()) return {false, j, std::move(h)};
    }
    return {};
}

/// Parses `c[y4][4,0] = <polynomial in k>` lines (`#` comments, blank lines allowed).
/// An optional `k = <value>` line sets the y_1 coefficient (default k).
inline CoefficientFamily parse_family(std::string_view src, const EndomorphismAnsatz& a, std::string name = "file") {
    CoefficientFamily f{std::move(name), a.pres.name, k_ring(), {}};
    auto known = a.unknowns();
    std::size_t line_no = 0, pos = 0;
    while (pos <= src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::string_view line = src.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? src.size() + 1 : nl + 1;
        ++line_no;
        std::size_t limit = std::min(line.find('#'), line.size());
        line = line.substr(0, limit);
        if (detail::trim(line).empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected '<symbol> = <polynomial>'", line_no, 1);
        std::string sym(detail::trim(line.substr(0, eq)));
        std::size_t sym_col = line.find_first_not_of(" \t") + 1;
        auto value = line.substr(eq + 1);
        if (sym == "k") {
            f.k_value = parse_polynomial(value, k_ring(), line_no, eq + 1);
            continue;
        }
        if (std::find(known.begin(), known.end(), sym) == known.end())
            throw ParseError("unknown coefficient symbol '" + sym + "'", line_no, sym_col);
        if (f.values.count(sym)) throw ParseError("duplicate assignment of " + sym, line_no, sym_col);
        f.values[sym] = parse_polynomial(value, k_ring(), line_no, eq + 1);
    }
    return f;
}

/// Text form accepted by parse_family, in ansatz order.
inline std::string format_family(const CoefficientFamily& f, const EndomorphismAnsatz& a) {
    std::string out;
    for (const auto& u : a.unknowns()) {
        auto it = f.values.find(u);
        if (it != f.values.end()) out += u + " = " + format_polynomial(it->second) + "\n";
    }
    return out;
}

}  // namespace rigidity
