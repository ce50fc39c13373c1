#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rigidity/endomorph.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/groebner.hpp"

namespace rigidity {

/// Constraints with k replaced by a rational; polynomials in the unknowns only.
struct SpecializedSystem {
    std::string presentation;
    Rational p;
    std::vector<std::string> unknowns;
    RingPtr ring;  // lex over the unknowns in declaration order
    std::vector<ScalarPoly> polys;
};

inline SpecializedSystem specialize(const ConstraintSystem& sys, const Rational& p) {
    SpecializedSystem out{sys.pres.name, p, sys.unknowns, make_symbol_ring(sys.unknowns), {}};
    std::vector<ScalarPoly> at{ScalarPoly::constant(out.ring, p)};
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i) at.push_back(ScalarPoly::variable(out.ring, i));
    for (const auto& c : sys.constraints) {
        ScalarPoly s = substitute(c.primitive, at, out.ring);
        if (s.is_zero()) continue;
        s = normalize_primitive(s);
        if (std::find(out.polys.begin(), out.polys.end(), s) == out.polys.end()) out.polys.push_back(std::move(s));
    }
    return out;
}

enum class Classification { adams, adams_or_tau, other, incomplete };

inline std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::adams: return "adams";
        case Classification::adams_or_tau: return "adams_or_tau";
        case Classification::other: return "other";
        case Classification::incomplete: return "incomplete";
    }
    return "?";
}

struct SolverOptions {
    GroebnerOptions groebner;
    /// Ceiling on rational-root candidates tried for one univariate polynomial.
    std::size_t max_candidates = 2000000;
    /// Pollard rho iterations allowed per integer factorization.
    std::size_t max_rho_steps = 2000000;
    /// Ceiling on the dimension of the quotient ring handed to the lex conversion.
    std::size_t max_quotient_dim = 20000;
};

struct SolutionReport {
    std::string presentation;
    Rational p;
    std::vector<std::string> unknowns;
    /// Lex basis of the specialized system in the unknowns.
    std::vector<ScalarPoly> basis;
    /// Verified rational points, values in `unknowns` order, sorted.
    std::vector<std::vector<Rational>> points;
    /// Unresolved components: polynomials without rational roots, or failures to enumerate.
    std::vector<std::string> residual;
    bool positive_dimensional = false;
    /// Dimension of Q[unknowns]/I over Q when the ideal is zero-dimensional.
    std::optional<std::uint64_t> quotient_dim;
    std::size_t rejected_candidates = 0;
    Classification classification = Classification::incomplete;
    std::string detail;
};

namespace detail {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
using Dense = std::vector<Rational>;

inline void trim(Dense& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

inline Dense dense_rem(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Dense monic(Dense f) {
    Rational lc = f.back();
    for (auto& c : f) c /= lc;
    return f;
}

inline Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(std::move(a));
}

inline Rational eval(const Dense& f, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

/// f / (x - r), assuming r is a root.
inline Dense deflate(const Dense& f, const Rational& r) {
    Dense q(f.size() - 1);
    Rational carry = 0;
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = f[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

inline std::string dense_to_string(const Dense& f, const std::string& var) {
    RingPtr r = make_symbol_ring({var});
    std::vector<Term<Rational>> terms;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (sgn(f[i]) != 0) terms.push_back({Monomial{unsigned(i)}, f[i]});
    return format_polynomial(normalize_primitive(ScalarPoly::from_terms(r, std::move(terms))));
}

/// Prime factorization by trial division and Pollard-Brent rho; nullopt when the
/// step budget runs out.
class Factorizer {
public:
    explicit Factorizer(std::size_t budget) : budget_(budget) {}

    std::optional<std::vector<std::pair<Integer, unsigned>>> factor(Integer n) {
        std::vector<Integer> primes;
        n = abs(n);
        for (unsigned long d = 2; d < 10000 && n > 1; d += (d == 2 ? 1 : 2)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                primes.emplace_back(d);
                n /= d;
            }
        }
        if (n > 1 && !split(n, primes)) return std::nullopt;
        std::sort(primes.begin(), primes.end());
        std::vector<std::pair<Integer, unsigned>> out;
        for (const auto& q : primes) {
            if (!out.empty() && out.back().first == q) ++out.back().second;
            else out.emplace_back(q, 1);
        }
        return out;
    }

private:
    bool split(const Integer& n, std::vector<Integer>& primes) {
        if (n == 1) return true;
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            primes.push_back(n);
            return true;
        }
        for (unsigned long c = 1; c < 50; ++c) {
            auto d = rho(n, c);
            if (!d) return false;
            if (*d != n) return split(*d, primes) && split(Integer(n / *d), primes);
        }
        return false;
    }

    std::optional<Integer> rho(const Integer& n, unsigned long c) {
        auto f = [&](const Integer& x) { return Integer((x * x + c) % n); };
        Integer y = 2, x, q = 1, g = 1, ys;
        std::size_t r = 1, m = 128;
        while (g == 1) {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(Integer(x - y))) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
                if ((steps_ += m) > budget_) return std::nullopt;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(Integer(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                if (++steps_ > budget_) return std::nullopt;
            } while (g == 1);
        }
        return g;
    }

    std::size_t budget_;
    std::size_t steps_ = 0;
};

inline std::optional<std::vector<Integer>> divisors(const Integer& n, std::size_t rho_budget) {
    auto fac = Factorizer(rho_budget).factor(n);
    if (!fac) return std::nullopt;
    std::vector<Integer> out{Integer(1)};
    for (const auto& [q, e] : *fac) {
        std::size_t base = out.size();
        Integer pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct RootSearch {
    std::vector<Rational> roots;  // distinct, ascending
    Dense leftover;               // f with all rational roots divided out
    bool exhausted = false;       // candidate enumeration hit a ceiling
};

/// All rational roots of f via the rational-root theorem on its primitive integer form.
inline RootSearch rational_roots(Dense f, const SolverOptions& opt) {
    RootSearch out;
    trim(f);
    if (f.size() <= 1) {
        out.leftover = f;
        return out;
    }
    if (sgn(f[0]) == 0) {
        out.roots.push_back(0);
        while (f.size() > 1 && sgn(f[0]) == 0) f.erase(f.begin());
    }
    auto accept = [&](const Rational& r) {
        out.roots.push_back(r);
        while (f.size() > 1 && sgn(eval(f, r)) == 0) f = deflate(f, r);
    };
    while (f.size() > 1) {
        // Primitive integer coefficients.
        Integer den = 1;
        for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        Integer a0 = Rational(f.front() * den).get_num(), an = Rational(f.back() * den).get_num();
        if (f.size() == 2) {
            accept(Rational(-f[0] / f[1]));
            break;
        }
        auto dp = divisors(a0, opt.max_rho_steps);
        auto dq = divisors(an, opt.max_rho_steps);
        if (!dp || !dq || dp->size() * dq->size() * 2 > opt.max_candidates) {
            out.exhausted = true;
            break;
        }
        // Cauchy bound on root magnitude.
        Rational bound = 0;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, Rational(abs(f[i] / f.back())));
        bound += 1;
        bool found = false;
        for (const auto& q : *dq) {
            for (const auto& pp : *dp) {
                Rational mag(pp, q);
                mag.canonicalize();
                if (mag > bound) break;
                if (mag.get_den() != q) continue;  // not in lowest terms; seen already
                for (int sign : {1, -1}) {
                    Rational r = sign * mag;
                    if (sgn(eval(f, r)) == 0) {
                        accept(r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.leftover = f;
    return out;
}

/// Lex basis of a zero-dimensional ideal from any Gröbner basis of it, by linear
/// algebra on normal forms of monomials taken in increasing lex order.
inline std::vector<ScalarPoly> fglm(const GroebnerBasis& G, const RingPtr& lex, std::size_t max_dim) {
    const std::size_t n = lex->size();
    struct Row {
        ScalarPoly nf;     // echelon row, pivot at its leading monomial
        ScalarPoly track;  // combination of staircase monomials with this normal form
    };
    std::vector<Row> rows;
    auto exp_less = [](const Monomial& a, const Monomial& b) {
        auto x = a.exponents(), y = b.exponents();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::map<Monomial, std::size_t, decltype(exp_less)> pivot(exp_less);
    std::vector<Monomial> leads;
    std::vector<ScalarPoly> out;
    auto lex_less = [&](const Monomial& a, const Monomial& b) { return lex->compare(a, b) < 0; };
    std::set<Monomial, decltype(lex_less)> todo(lex_less);
    todo.insert(Monomial(n));
    while (!todo.empty()) {
        Monomial m = *todo.begin();
        todo.erase(todo.begin());
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
        ScalarPoly w = residue(ScalarPoly::monomial(G.ring, m, Rational(1)), G);
        ScalarPoly t = ScalarPoly::monomial(lex, m, Rational(1));
        for (;;) {
            auto hit = std::find_if(w.terms().begin(), w.terms().end(),
                                    [&](const auto& term) { return pivot.count(term.mono) > 0; });
            if (hit == w.terms().end()) break;
            const Row& r = rows[pivot.at(hit->mono)];
            Rational c = hit->coeff / r.nf.leading_coefficient();
            w = w - r.nf.scaled(c);
            t = t - r.track.scaled(c);
        }
        if (w.is_zero()) {
            leads.push_back(m);
            out.push_back(t);
            continue;
        }
        if (rows.size() >= max_dim) throw ResourceLimitExceeded("lex conversion exceeded the quotient ceiling");
        pivot.emplace(w.leading_monomial(), rows.size());
        rows.push_back({std::move(w), std::move(t)});
        for (std::size_t v = 0; v < n; ++v) todo.insert(m * Monomial::variable(n, v));
    }
    return out;
}

class BackSubstitution {
public:
    BackSubstitution(const SpecializedSystem& sys, const std::vector<ScalarPoly>& G, const SolverOptions& opt,
                     SolutionReport& report)
        : sys_(sys), G_(G), opt_(opt), report_(report), values_(sys.unknowns.size()) {}

    void run() {
        if (sys_.unknowns.empty()) {
            finish();
            return;
        }
        level(sys_.unknowns.size() - 1);
    }

private:
    std::string partial(std::size_t m) const {
        std::string s;
        for (std::size_t j = m + 1; j < values_.size(); ++j)
            s += (s.empty() ? "" : ", ") + sys_.unknowns[j] + "=" + to_string(values_[j]);
        return s.empty() ? "" : " at " + s;
    }

    void level(std::size_t m) {
        const std::size_t n = values_.size();
        std::vector<ScalarPoly> at;
        RingPtr uni = make_symbol_ring({sys_.unknowns[m]});
        for (std::size_t j = 0; j < n; ++j) {
            if (j < m) at.push_back(ScalarPoly(uni));
            else if (j == m) at.push_back(ScalarPoly::variable(uni, 0));
            else at.push_back(ScalarPoly::constant(uni, values_[j]));
        }
        Dense g;
        bool have = false;
        for (const auto& e : G_) {
            bool below = false;
            for (const auto& t : e.terms())
                for (std::size_t j = 0; j < m && !below; ++j) below = t.mono[j] > 0;
            if (below) continue;
            ScalarPoly u = substitute(e, at, uni);
            if (u.is_zero()) continue;
            Dense d(u.leading_monomial()[0] + 1);
            for (const auto& t : u.terms()) d[t.mono[0]] = t.coeff;
            g = have ? dense_gcd(g, d) : monic(d);
            have = true;
            if (g.size() == 1) break;
        }
        if (!have) {
            report_.residual.push_back(sys_.unknowns[m] + " is unconstrained" + partial(m));
            return;
        }
        if (g.size() == 1) {
            ++report_.rejected_candidates;  // inconsistent partial assignment
            return;
        }
        auto rs = rational_roots(g, opt_);
        if (rs.exhausted)
            report_.residual.push_back("rational-root search for " + sys_.unknowns[m] + partial(m) +
                                       " exceeded its ceiling on " + dense_to_string(rs.leftover, "x"));
        else if (rs.leftover.size() > 1)
            report_.residual.push_back("no rational root: " + dense_to_string(rs.leftover, sys_.unknowns[m]) +
                                       " = 0" + partial(m));
        for (const auto& r : rs.roots) {
            values_[m] = r;
            if (m == 0) finish();
            else level(m - 1);
        }
    }

    void finish() {
        std::vector<ScalarPoly> at;
        RingPtr none = make_symbol_ring({});
        for (const auto& v : values_) at.push_back(ScalarPoly::constant(none, v));
        for (const auto& f : sys_.polys) {
            if (!substitute(f, at, none).is_zero()) {
                ++report_.rejected_candidates;
                return;
            }
        }
        report_.points.push_back(values_);
    }

    const SpecializedSystem& sys_;
    const std::vector<ScalarPoly>& G_;
    const SolverOptions& opt_;
    SolutionReport& report_;
    std::vector<Rational> values_;
};

}  // namespace detail

namespace detail {

/// A grevlex basis decides consistency and zero-dimensionality; it is converted to
/// the lex basis, and back-substitution runs from the last unknown.
inline SolutionReport solve_zero_dim(const SpecializedSystem& sys, const SolverOptions& opt = {}) {
    SolutionReport rep;
    rep.presentation = sys.presentation;
    rep.p = sys.p;
    rep.unknowns = sys.unknowns;
    const std::size_t n = sys.unknowns.size();
    if (sys.polys.empty()) {
        if (n == 0) {
            rep.points.push_back({});
            rep.quotient_dim = 1;
        } else {
            rep.positive_dimensional = true;
            rep.residual.push_back("no constraints: every unknown is free");
        }
        return rep;
    }
    std::vector<ScalarPoly> input;
    for (const auto& f : sys.polys) input.push_back(f.with_order(MonomialOrder{OrderKind::wgrevlex}));
    auto G = buchberger(input, opt.groebner);
    for (const auto& e : G.elements)
        if (e.is_constant()) {
            rep.basis = {ScalarPoly::constant(sys.ring, Rational(1))};
            rep.quotient_dim = 0;
            return rep;  // inconsistent: no points at all
        }
    auto leads = G.leading_monomials();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
            for (std::size_t u = 0; u < n; ++u)
                if ((u == v) != (m[u] > 0)) return false;
            return true;
        });
        if (!pure) {
            rep.positive_dimensional = true;
            rep.residual.push_back("positive-dimensional: " + sys.unknowns[v] + " takes infinitely many values");
        }
    }
    if (rep.positive_dimensional) return rep;
    rep.quotient_dim = standard_monomial_count(G);
    if (!rep.quotient_dim || *rep.quotient_dim > opt.max_quotient_dim) {
        rep.residual.push_back("quotient ring too large for the lex conversion");
        return rep;
    }
    rep.basis = detail::fglm(G, sys.ring, opt.max_quotient_dim);
    detail::BackSubstitution(sys, rep.basis, opt, rep).run();
    std::sort(rep.points.begin(), rep.points.end());
    rep.points.erase(std::unique(rep.points.begin(), rep.points.end()), rep.points.end());
    return rep;
}

/// Splits the variety before any Gröbner basis is computed. A constraint whose terms
/// share a variable x gives V(f) = V(x) u V(f / x^e); an unknown occurring in a
/// single term c*x of some constraint is eliminated as x = -(f - c*x)/c. Leaves go
/// to solve_zero_dim in the unknowns that remain.
class Splitter {
public:
    Splitter(const SpecializedSystem& sys, const SolverOptions& opt, SolutionReport& rep)
        : sys_(sys), opt_(opt), rep_(rep) {}

    /// Returns true when the system was split or reduced at least once.
    bool run() {
        Branch root{sys_.polys, std::vector<std::optional<ScalarPoly>>(sys_.unknowns.size()), {}};
        solve(std::move(root));
        return changed_;
    }

private:
    struct Branch {
        std::vector<ScalarPoly> polys;
        std::vector<std::optional<ScalarPoly>> fixed;  // eliminated unknowns, in the free ones
        std::vector<std::string> notes;
    };

    ScalarPoly replace(const ScalarPoly& f, std::size_t x, const ScalarPoly& e) const {
        std::vector<ScalarPoly> at;
        for (std::size_t j = 0; j < sys_.unknowns.size(); ++j)
            at.push_back(j == x ? e : ScalarPoly::variable(sys_.ring, j));
        return substitute(f, at, sys_.ring);
    }

    void eliminate(Branch& b, std::size_t x, const ScalarPoly& e) const {
        for (auto& f : b.polys) f = replace(f, x, e);
        for (auto& g : b.fixed)
            if (g) g = replace(*g, x, e);
        b.fixed[x] = e;
    }

    /// Drops zeros, normalizes, deduplicates; false when a nonzero constant appears.
    static bool tidy(Branch& b) {
        std::vector<ScalarPoly> out;
        for (auto& f : b.polys) {
            if (f.is_zero()) continue;
            if (f.is_constant()) return false;
            f = normalize_primitive(f);
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        }
        b.polys = std::move(out);
        return true;
    }

    /// An unknown that occurs only in one term, of degree one with a constant coefficient.
    std::optional<std::pair<std::size_t, std::size_t>> linear_unknown(const Branch& b) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::size_t best_size = 0;
        for (std::size_t i = 0; i < b.polys.size(); ++i) {
            const auto& f = b.polys[i];
            if (best && f.size() >= best_size) continue;
            for (std::size_t x = 0; x < sys_.unknowns.size(); ++x) {
                std::size_t hits = 0;
                bool linear = false;
                for (const auto& t : f.terms()) {
                    if (t.mono[x] == 0) continue;
                    ++hits;
                    linear = t.mono[x] == 1 && t.mono.total_degree() == 1;
                }
                if (hits == 1 && linear) {
                    best = {i, x};
                    best_size = f.size();
                    break;
                }
            }
        }
        return best;
    }

    /// A constraint divisible by some unknown, and that unknown.
    std::optional<std::pair<std::size_t, std::size_t>> common_factor(const Branch& b) const {
        for (std::size_t i = 0; i < b.polys.size(); ++i) {
            const auto& f = b.polys[i];
            for (std::size_t x = 0; x < sys_.unknowns.size(); ++x)
                if (std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return t.mono[x] > 0; }))
                    return std::pair{i, x};
        }
        return std::nullopt;
    }

    void solve(Branch b) {
        for (;;) {
            if (!tidy(b)) return;
            if (auto lin = linear_unknown(b)) {
                auto [i, x] = *lin;
                const auto& f = b.polys[i];
                Monomial mx = Monomial::variable(sys_.unknowns.size(), x);
                Rational c = f.coefficient(mx);
                ScalarPoly rest = f - ScalarPoly::monomial(sys_.ring, mx, c);
                eliminate(b, x, rest.scaled(Rational(-1) / c));
                changed_ = true;
                continue;
            }
            break;
        }
        if (auto cf = common_factor(b)) {
            changed_ = true;
            auto [i, x] = *cf;
            Branch zero = b;
            zero.notes.push_back(sys_.unknowns[x] + "=0");
            eliminate(zero, x, ScalarPoly(sys_.ring));
            solve(std::move(zero));
            unsigned e = b.polys[i].terms().front().mono[x];
            for (const auto& t : b.polys[i].terms()) e = std::min<unsigned>(e, t.mono[x]);
            std::vector<Term<Rational>> reduced;
            for (const auto& t : b.polys[i].terms()) {
                Monomial m = t.mono;
                m.set(x, t.mono[x] - e);
                reduced.push_back({m, t.coeff});
            }
            b.polys[i] = ScalarPoly::from_terms(sys_.ring, std::move(reduced));
            solve(std::move(b));
            return;
        }
        leaf(b);
    }

    void leaf(const Branch& b) {
        const std::size_t n = sys_.unknowns.size();
        std::vector<std::size_t> free;
        std::vector<std::string> names;
        for (std::size_t j = 0; j < n; ++j)
            if (!b.fixed[j]) {
                free.push_back(j);
                names.push_back(sys_.unknowns[j]);
            }
        SpecializedSystem sub{sys_.presentation, sys_.p, names, make_symbol_ring(names), {}};
        std::vector<ScalarPoly> into;
        for (std::size_t j = 0, k = 0; j < n; ++j)
            into.push_back(b.fixed[j] ? ScalarPoly(sub.ring) : ScalarPoly::variable(sub.ring, k++));
        for (const auto& f : b.polys) sub.polys.push_back(substitute(f, into, sub.ring));
        auto r = solve_zero_dim(sub, opt_);
        std::string where;
        for (const auto& s : b.notes) where += (where.empty() ? "" : ", ") + s;
        for (const auto& s : r.residual) rep_.residual.push_back(where.empty() ? s : "[" + where + "] " + s);
        rep_.positive_dimensional = rep_.positive_dimensional || r.positive_dimensional;
        rep_.rejected_candidates += r.rejected_candidates;
        RingPtr none = make_symbol_ring({});
        for (const auto& pt : r.points) {
            std::vector<ScalarPoly> at(n, ScalarPoly(none));
            for (std::size_t k = 0; k < free.size(); ++k) at[free[k]] = ScalarPoly::constant(none, pt[k]);
            std::vector<Rational> full(n);
            for (std::size_t j = 0; j < n; ++j) {
                ScalarPoly v = b.fixed[j] ? substitute(*b.fixed[j], at, none) : at[j];
                full[j] = v.is_zero() ? Rational(0) : v.leading_coefficient();
            }
            rep_.points.push_back(std::move(full));
        }
        if (!changed_) {
            rep_.basis = r.basis;
            rep_.quotient_dim = r.quotient_dim;
        }
    }

    const SpecializedSystem& sys_;
    const SolverOptions& opt_;
    SolutionReport& rep_;
    bool changed_ = false;
};

}  // namespace detail

/// Rational points of a specialized system.
///
/// The variety is split along variable factors and linear eliminations, and each
/// piece is solved through a grevlex basis, conversion to lex and back-substitution.
/// Every point is re-checked against all constraints before it is reported. The lex
/// basis and quotient dimension are reported only when no splitting took place.
inline SolutionReport solve_rational(const SpecializedSystem& sys, const SolverOptions& opt = {}) {
    SolutionReport rep;
    rep.presentation = sys.presentation;
    rep.p = sys.p;
    rep.unknowns = sys.unknowns;
    detail::Splitter(sys, opt, rep).run();
    RingPtr none = make_symbol_ring({});
    std::vector<std::vector<Rational>> kept;
    for (auto& pt : rep.points) {
        std::vector<ScalarPoly> at;
        for (const auto& v : pt) at.push_back(ScalarPoly::constant(none, v));
        bool ok = std::all_of(sys.polys.begin(), sys.polys.end(),
                              [&](const ScalarPoly& f) { return substitute(f, at, none).is_zero(); });
        if (ok) kept.push_back(std::move(pt));
        else ++rep.rejected_candidates;
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    rep.points = std::move(kept);
    return rep;
}

/// Values of a family at k = p, in the order of `unknowns`.
inline std::vector<Rational> family_point(const CoefficientFamily& f, const std::vector<std::string>& unknowns,
                                          const Rational& p) {
    auto s = specialize_family(f, p);
    std::vector<Rational> out;
    for (const auto& u : unknowns) {
        const auto& v = s.at(u);
        out.push_back(v.is_zero() ? Rational(0) : v.leading_coefficient());
    }
    return out;
}

inline std::string format_point(const std::vector<std::string>& unknowns, const std::vector<Rational>& pt) {
    std::string s = "{";
    for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + unknowns[i] + "=" + to_string(pt[i]);
    return s + "}";
}

struct ClassificationResult {
    Classification kind;
    std::string detail;
};

/// Compares the verified points with psi^p and, on E6_A6, psi^p o tau.
inline ClassificationResult classify(const RingPresentation& pres, const SolutionReport& r, const Rational& p) {
    if (r.positive_dimensional || !r.residual.empty())
        return {Classification::incomplete,
                r.residual.empty() ? std::string("positive-dimensional system") : r.residual.front()};
    auto adams = family_point(adams_family(pres), r.unknowns, p);
    std::optional<std::vector<Rational>> tau;
    if (pres.name == "E6_A6") {
        auto t = tau_family();
        bool fits = std::all_of(r.unknowns.begin(), r.unknowns.end(), [&](const auto& u) { return t.values.count(u); });
        if (fits) tau = family_point(t, r.unknowns, p);
    }
    for (const auto& pt : r.points)
        if (pt != adams && (!tau || pt != *tau))
            return {Classification::other, "point " + format_point(r.unknowns, pt) + " matches no known family"};
    bool has_adams = std::find(r.points.begin(), r.points.end(), adams) != r.points.end();
    if (!has_adams) return {Classification::other, "the Adams point is missing"};
    if (r.points.size() == 1) return {Classification::adams, ""};
    if (tau && r.points.size() == 2) return {Classification::adams_or_tau, ""};
    return {Classification::other, "unexpected point set"};
}

/// specialize + solve_rational + classify.
inline SolutionReport solve_at(const ConstraintSystem& sys, const Rational& p, const SolverOptions& opt = {}) {
    auto rep = solve_rational(specialize(sys, p), opt);
    auto c = classify(sys.pres, rep, p);
    rep.classification = c.kind;
    rep.detail = c.detail;
    return rep;
}

}  // namespace rigidity
