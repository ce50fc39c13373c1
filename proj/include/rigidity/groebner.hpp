#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/polynomial.hpp"

namespace rigidity {

struct GroebnerOptions {
    /// Only S-pairs whose lcm has weight <= truncate are processed. Requires
    /// weighted-homogeneous generators of weight <= truncate.
    std::optional<unsigned> truncate;
    std::size_t max_pairs = 500000;
    std::size_t max_terms = 5000000;
};

struct GroebnerStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t pairs_truncated = 0;
};

/// Reduced Gröbner basis; elements are primitive integer polynomials with positive
/// leading coefficient, sorted by descending leading monomial.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<ScalarPoly> elements;
    std::optional<unsigned> truncation;
    GroebnerStats stats;

    MonomialOrder order() const { return ring->order; }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements.size());
        for (const auto& e : elements) out.push_back(e.leading_monomial());
        return out;
    }
};

template <class C>
struct DivisionResult {
    Polynomial<C> residue;
    std::vector<Polynomial<C>> quotients;
};

namespace detail {

inline void check_term_limit(std::size_t n, std::size_t limit) {
    if (n > limit) throw ResourceLimitExceeded("polynomial exceeded " + std::to_string(limit) + " terms");
}

/// Divides `f` by `basis`, returning the residue and, when requested, the quotients.
/// The first basis element whose leading monomial divides the current lead is used.
template <class C>
DivisionResult<C> divide(const Polynomial<C>& f, const std::vector<const ScalarPoly*>& basis, bool want_quotients,
                         std::size_t max_terms = SIZE_MAX) {
    using Traits = CoeffTraits<C>;
    for (const ScalarPoly* b : basis)
        if (b->is_zero()) throw InvalidArgument("zero polynomial in division basis");
    RingPtr ring = f.ring();
    if (!ring && !basis.empty()) ring = basis.front()->ring();
    for (const ScalarPoly* b : basis)
        if (!same_ring(b->ring(), ring)) throw ContextMismatch("division basis lives in another ring");
    Polynomial<C> work = f.ring() || !ring ? f : f.in_ring(ring);

    std::vector<Rational> inv_lc;
    inv_lc.reserve(basis.size());
    for (const ScalarPoly* b : basis) inv_lc.push_back(Rational(1) / b->leading_coefficient());

    std::vector<std::vector<Term<C>>> quotients(want_quotients ? basis.size() : 0);
    std::vector<Term<C>> residue;
    std::vector<Term<C>> cur(work.terms().begin(), work.terms().end());
    std::vector<Term<C>> next;
    std::size_t head = 0;
    const PolyRing* r = ring.get();

    while (head < cur.size()) {
        const Term<C>& lead = cur[head];
        std::size_t chosen = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i]->leading_monomial().divides(lead.mono)) {
                chosen = i;
                break;
            }
        }
        if (chosen == basis.size()) {
            residue.push_back(lead);
            ++head;
            continue;
        }
        const ScalarPoly& b = *basis[chosen];
        Monomial qm = lead.mono / b.leading_monomial();
        C qc = Traits::scaled(lead.coeff, inv_lc[chosen]);
        // cur[head+1..] - qc*qm*(b - lt(b)); the leading terms cancel by construction.
        next.clear();
        next.reserve(cur.size() - head + b.size());
        auto ia = cur.begin() + std::ptrdiff_t(head) + 1;
        auto ib = b.terms().begin() + 1;
        while (ia != cur.end() || ib != b.terms().end()) {
            if (ib == b.terms().end()) {
                next.push_back(std::move(*ia++));
                continue;
            }
            Monomial bm = ib->mono * qm;
            auto o = ia == cur.end() ? std::strong_ordering::less : r->compare(ia->mono, bm);
            if (o > 0) {
                next.push_back(std::move(*ia++));
            } else if (o < 0) {
                next.push_back({std::move(bm), C(-Traits::scaled(qc, ib->coeff))});
                ++ib;
            } else {
                C c = ia->coeff;
                c -= Traits::scaled(qc, ib->coeff);
                if (!Traits::is_zero(c)) next.push_back({std::move(bm), std::move(c)});
                ++ia;
                ++ib;
            }
        }
        check_term_limit(next.size(), max_terms);
        if (want_quotients) quotients[chosen].push_back({std::move(qm), std::move(qc)});
        std::swap(cur, next);
        head = 0;
    }

    DivisionResult<C> out;
    out.residue = Polynomial<C>::adopt_sorted(ring, std::move(residue));
    if (want_quotients) {
        out.quotients.reserve(basis.size());
        for (auto& q : quotients) out.quotients.push_back(Polynomial<C>::adopt_sorted(ring, std::move(q)));
    }
    return out;
}

inline std::vector<const ScalarPoly*> pointers(const std::vector<ScalarPoly>& v) {
    std::vector<const ScalarPoly*> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(&p);
    return out;
}

}  // namespace detail

/// S-polynomial of two nonzero scalar polynomials, formed from their monic versions.
inline ScalarPoly s_polynomial(const ScalarPoly& f, const ScalarPoly& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of a zero polynomial");
    if (!same_ring(f.ring(), g.ring())) throw ContextMismatch("S-polynomial operands in different rings");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    ScalarPoly a = f.mul_term(l / f.leading_monomial(), Rational(1) / f.leading_coefficient());
    ScalarPoly b = g.mul_term(l / g.leading_monomial(), Rational(1) / g.leading_coefficient());
    return a - b;
}

/// Multivariate division of `f` by `basis` (the residue of f modulo the basis).
///
/// `f` may have parametric coefficients; the basis is rational so every leading
/// coefficient is invertible. Re-expansion identity: f = sum q_i b_i + residue.
template <class C>
DivisionResult<C> normal_form(const Polynomial<C>& f, const std::vector<ScalarPoly>& basis) {
    return detail::divide(f, detail::pointers(basis), true);
}

template <class C>
DivisionResult<C> normal_form(const Polynomial<C>& f, const GroebnerBasis& G) {
    return normal_form(f, G.elements);
}

template <class C>
Polynomial<C> residue(const Polynomial<C>& f, const GroebnerBasis& G) {
    return detail::divide(f, detail::pointers(G.elements), false).residue;
}

namespace detail {

class BuchbergerRun {
public:
    BuchbergerRun(RingPtr ring, const GroebnerOptions& opt) : ring_(std::move(ring)), opt_(opt) {}

    GroebnerBasis run(std::vector<ScalarPoly> gens) {
        std::sort(gens.begin(), gens.end(), [&](const ScalarPoly& a, const ScalarPoly& b) {
            unsigned wa = weight(a.leading_monomial()), wb = weight(b.leading_monomial());
            if (wa != wb) return wa < wb;
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        for (const auto& g : gens) add_reduced(g);
        while (!pairs_.empty()) {
            Pair p = take_next_pair();
            if (++stats_.pairs_reduced > opt_.max_pairs)
                throw ResourceLimitExceeded("Buchberger exceeded " + std::to_string(opt_.max_pairs) + " S-pairs");
            ScalarPoly s = s_polynomial(entries_[p.i].poly, entries_[p.j].poly);
            add_reduced(s);
        }
        return finish();
    }

private:
    struct Entry {
        ScalarPoly poly;
        bool redundant = false;
    };
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned weight;
    };

    unsigned weight(const Monomial& m) const { return ring_->ctx.weight_of(m); }
    const Monomial& lm(std::size_t i) const { return entries_[i].poly.leading_monomial(); }

    std::vector<const ScalarPoly*> reducers() const {
        std::vector<const ScalarPoly*> out;
        for (const auto& e : entries_)
            if (!e.redundant) out.push_back(&e.poly);
        return out;
    }

    void add_reduced(const ScalarPoly& f) {
        ScalarPoly h = divide(f, reducers(), false, opt_.max_terms).residue;
        if (h.is_zero()) {
            ++stats_.zero_reductions;
            return;
        }
        entries_.push_back({normalize_primitive(h)});
        update(entries_.size() - 1);
    }

    Pair take_next_pair() {
        auto best = pairs_.begin();
        for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
            if (it->weight != best->weight) {
                if (it->weight < best->weight) best = it;
                continue;
            }
            auto o = ring_->compare(it->lcm, best->lcm);
            if (o < 0 || (o == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
        }
        Pair p = *best;
        pairs_.erase(best);
        return p;
    }

    // Gebauer-Möller installation of the new element h.
    void update(std::size_t h) {
        const Monomial& lh = lm(h);
        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < h; ++g) {
            if (entries_[g].redundant) continue;
            Monomial l = lcm(lh, lm(g));
            unsigned w = weight(l);
            candidates.push_back({g, h, std::move(l), w});
        }
        std::vector<bool> kept(candidates.size(), false), processed(candidates.size(), false);
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            processed[a] = true;
            bool disjoint = lh.coprime(lm(candidates[a].i));
            bool dominated = false;
            for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
                if (b == a || (processed[b] && !kept[b])) continue;
                dominated = candidates[b].lcm.divides(candidates[a].lcm);
            }
            kept[a] = disjoint || !dominated;
        }
        std::vector<Pair> fresh;
        for (std::size_t a = 0; a < candidates.size(); ++a)
            if (kept[a] && !lh.coprime(lm(candidates[a].i))) fresh.push_back(std::move(candidates[a]));

        std::vector<Pair> old;
        old.reserve(pairs_.size());
        for (auto& p : pairs_) {
            bool chain = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lh, lm(p.j)) == p.lcm);
            if (!chain) old.push_back(std::move(p));
        }
        pairs_ = std::move(old);
        for (auto& p : fresh) {
            if (opt_.truncate && p.weight > *opt_.truncate) {
                ++stats_.pairs_truncated;
                continue;
            }
            ++stats_.pairs_created;
            pairs_.push_back(std::move(p));
        }
        for (std::size_t g = 0; g < h; ++g)
            if (!entries_[g].redundant && lh.divides(lm(g))) entries_[g].redundant = true;
    }

    GroebnerBasis finish() {
        std::vector<ScalarPoly> basis;
        for (const auto& e : entries_)
            if (!e.redundant) basis.push_back(e.poly);
        std::vector<ScalarPoly> reduced;
        reduced.reserve(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<const ScalarPoly*> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(&basis[j]);
            const auto& lt = basis[i].leading_term();
            ScalarPoly lead = ScalarPoly::monomial(ring_, lt.mono, lt.coeff);
            ScalarPoly tail = divide(basis[i] - lead, others, false, opt_.max_terms).residue;
            reduced.push_back(normalize_primitive(lead + tail));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const ScalarPoly& a, const ScalarPoly& b) {
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) > 0;
        });
        return GroebnerBasis{ring_, std::move(reduced), opt_.truncate, stats_};
    }

    RingPtr ring_;
    GroebnerOptions opt_;
    std::vector<Entry> entries_;
    std::vector<Pair> pairs_;
    GroebnerStats stats_;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `generators` under their ring's order.
///
/// Pair selection follows the normal strategy (smallest lcm weight, then smallest lcm
/// under the order). With `truncate = D` the result computes correct normal forms for
/// every homogeneous input of weight <= D.
inline GroebnerBasis buchberger(const std::vector<ScalarPoly>& generators, const GroebnerOptions& opt = {}) {
    if (generators.empty()) throw InvalidArgument("empty generator list");
    RingPtr ring = generators.front().ring();
    for (const auto& g : generators) {
        if (g.is_zero()) throw InvalidArgument("zero generator");
        if (!g.ring() || !same_ring(g.ring(), ring)) throw ContextMismatch("generators live in different rings");
    }
    if (opt.truncate) {
        for (const auto& g : generators) {
            auto d = weighted_degree(g);
            if (d.kind != WeightedDegree::Kind::homogeneous)
                throw InvalidArgument("truncated Buchberger needs weighted-homogeneous generators");
            if (d.weight > *opt.truncate)
                throw InvalidArgument("truncation bound " + std::to_string(*opt.truncate) +
                                      " is below generator weight " + std::to_string(d.weight));
        }
    }
    return detail::BuchbergerRun(ring, opt).run(generators);
}

struct MembershipResult {
    bool member = false;
    /// Quotients witnessing membership (empty when not a member).
    std::vector<ScalarPoly> quotients;
    /// Nonzero residue witnessing non-membership (zero when a member).
    ScalarPoly residue;
};

inline MembershipResult ideal_membership(const ScalarPoly& f, const GroebnerBasis& G) {
    if (G.truncation && max_weight(f) > *G.truncation)
        throw InvalidArgument("polynomial weight exceeds the basis truncation bound");
    auto div = normal_form(f, G);
    MembershipResult out;
    out.member = div.residue.is_zero();
    if (out.member) out.quotients = std::move(div.quotients);
    out.residue = std::move(div.residue);
    return out;
}

/// Number of monomials divisible by no leading monomial of `G`; nullopt when the
/// quotient is infinite-dimensional (some variable has no pure power among leads).
inline std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& G,
                                                            std::uint64_t max_visits = 100000000) {
    if (G.truncation) throw InvalidArgument("standard monomial count needs an untruncated basis");
    const std::size_t n = G.ring->size();
    auto leads = G.leading_monomials();
    std::vector<unsigned> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& m : leads) {
            bool pure = m[v] > 0;
            for (std::size_t u = 0; u < n && pure; ++u) pure = u == v || m[u] == 0;
            if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
        }
        if (bound[v] == 0) return std::nullopt;
    }
    std::uint64_t count = 0, visits = 0;
    Monomial cur(n);
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    // Standard monomials form an order ideal, so a non-standard prefix prunes the subtree.
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (++visits > max_visits) throw ResourceLimitExceeded("standard monomial enumeration too large");
        if (v == n) {
            ++count;
            return;
        }
        for (unsigned e = 0; e < bound[v]; ++e) {
            cur.set(v, e);
            if (!standard(cur)) break;
            self(self, v + 1);
        }
        cur.set(v, 0);
    };
    rec(rec, 0);
    return count;
}

/// Residues computed term-by-term from memoized normal forms of monomials.
///
/// Division is linear over the coefficient domain, so the residue of a parametric
/// polynomial is the sum of its coefficients times the rational residues of its
/// monomials. Not thread-safe; use one cache per thread.
class NormalFormCache {
public:
    explicit NormalFormCache(const GroebnerBasis& G) : G_(&G), basis_(detail::pointers(G.elements)) {}

    const ScalarPoly& of(const Monomial& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        ScalarPoly mono = ScalarPoly::monomial(G_->ring, m, Rational(1));
        ScalarPoly r = detail::divide(mono, basis_, false).residue;
        return cache_.emplace(m, std::move(r)).first->second;
    }

    template <class C>
    Polynomial<C> residue(const Polynomial<C>& f) {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        for (const auto& t : f.terms()) {
            const ScalarPoly& nf = of(t.mono);
            for (const auto& s : nf.terms()) {
                C c = CoeffTraits<C>::scaled(t.coeff, s.coeff);
                auto [slot, inserted] = acc.try_emplace(s.mono, std::move(c));
                if (!inserted) slot->second += c;
            }
        }
        std::vector<Term<C>> terms;
        for (auto& [m, c] : acc)
            if (!CoeffTraits<C>::is_zero(c)) terms.push_back({m, std::move(c)});
        return Polynomial<C>::from_terms(G_->ring, std::move(terms));
    }

    std::size_t size() const { return cache_.size(); }

private:
    const GroebnerBasis* G_;
    std::vector<const ScalarPoly*> basis_;
    std::unordered_map<Monomial, ScalarPoly, MonomialHash> cache_;
};

}  // namespace rigidity
