#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/monomial.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/ring.hpp"

namespace rigidity {

template <class C>
class Polynomial;

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational scaled(const Rational& c, const Rational& q) { return Rational(c * q); }
};

template <class R>
struct CoeffTraits<Polynomial<R>> {
    static bool is_zero(const Polynomial<R>& c) { return c.is_zero(); }
    static Polynomial<R> one() { return Polynomial<R>::scalar(CoeffTraits<R>::one()); }
    static Polynomial<R> from_rational(const Rational& q) {
        return Polynomial<R>::scalar(CoeffTraits<R>::from_rational(q));
    }
    static Polynomial<R> scaled(const Polynomial<R>& c, const Rational& q) { return c.scaled(q); }
};

template <class C>
struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with terms kept strictly descending under the ring's order.
///
/// A default-constructed polynomial is zero and carries no ring. A ring-free
/// polynomial may also hold a single constant term (see `scalar`); it adopts the
/// ring of whatever it is combined with. Values are immutable once built.
template <class C>
class Polynomial {
public:
    using coeff_type = C;
    using term_type = Term<C>;
    using traits = CoeffTraits<C>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial scalar(C c) {
        Polynomial p;
        if (!traits::is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
        return p;
    }

    static Polynomial constant(RingPtr ring, C c) {
        Polynomial p(std::move(ring));
        if (!traits::is_zero(c)) p.terms_.push_back({Monomial(p.ring_->size()), std::move(c)});
        return p;
    }

    static Polynomial monomial(RingPtr ring, Monomial m, C c) {
        ring->ctx.check_arity(m);
        Polynomial p(std::move(ring));
        if (!traits::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr ring, std::string_view name) {
        auto idx = ring->ctx.index_of(name);
        if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
        return variable(std::move(ring), *idx);
    }

    static Polynomial variable(RingPtr ring, std::size_t index) {
        Monomial m = Monomial::variable(ring->size(), index);
        return monomial(std::move(ring), std::move(m), traits::one());
    }

    /// Sorts, merges duplicates and drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term<C>> terms) {
        for (const auto& t : terms) ring->ctx.check_arity(t.mono);
        Polynomial p(std::move(ring));
        const PolyRing& r = *p.ring_;
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<C>& a, const Term<C>& b) { return r.compare(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!traits::is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term<C>>& terms() const noexcept { return terms_; }

    const Term<C>& leading_term() const {
        if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const C& leading_coefficient() const { return leading_term().coeff; }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one()); }

    C coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return C{};
    }

    /// The same polynomial viewed in `ring`, which must share the variable context.
    Polynomial in_ring(RingPtr ring) const {
        if (ring_ && !(ring_->ctx == ring->ctx)) throw ContextMismatch("cannot move polynomial to a different context");
        std::vector<Term<C>> terms;
        terms.reserve(terms_.size());
        for (const auto& t : terms_)
            terms.push_back({t.mono.arity() == 0 ? Monomial(ring->size()) : t.mono, t.coeff});
        return from_terms(std::move(ring), std::move(terms));
    }

    Polynomial with_order(MonomialOrder order) const {
        if (!ring_) return *this;
        return in_ring(make_ring(ring_->ctx, order));
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    Polynomial& operator+=(const Polynomial& b) { return *this = merge(*this, b, false); }
    Polynomial& operator-=(const Polynomial& b) { return *this = merge(*this, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(common_ring(a, b));
        if (!a.ring_ && a.is_constant()) return b.scale(a.terms_.front().coeff);
        if (!b.ring_ && b.is_constant()) return a.scale(b.terms_.front().coeff);
        RingPtr ring = common_ring(a, b);
        if (a.size() == 1) return b.mul_term(a.terms_.front().mono, a.terms_.front().coeff);
        if (b.size() == 1) return a.mul_term(b.terms_.front().mono, b.terms_.front().coeff);
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                C prod = ta.coeff * tb.coeff;
                auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, std::move(prod));
                if (!inserted) it->second += prod;
            }
        }
        std::vector<Term<C>> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!traits::is_zero(c)) terms.push_back({m, std::move(c)});
        return from_terms(std::move(ring), std::move(terms));
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    /// Multiplication by a coefficient of the same domain.
    Polynomial scale(const C& c) const {
        if (traits::is_zero(c)) return Polynomial(ring_);
        Polynomial out(ring_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C prod = t.coeff * c;
            if (!traits::is_zero(prod)) out.terms_.push_back({t.mono, std::move(prod)});
        }
        return out;
    }

    /// Multiplication by a rational number, whatever the coefficient domain.
    Polynomial scaled(const Rational& q) const {
        if (sgn(q) == 0) return Polynomial(ring_);
        Polynomial out(ring_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono, traits::scaled(t.coeff, q)});
        return out;
    }

    /// Multiplication by the single term c*m.
    Polynomial mul_term(const Monomial& m, const C& c) const {
        if (!ring_) {
            if (is_zero()) return Polynomial();
            throw ContextMismatch("ring-free scalar cannot absorb a monomial");
        }
        ring_->ctx.check_arity(m);
        Polynomial out(ring_);
        if (traits::is_zero(c)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C prod = t.coeff * c;
            if (!traits::is_zero(prod)) out.terms_.push_back({t.mono * m, std::move(prod)});
        }
        return out;
    }

    Polynomial pow(unsigned n) const {
        Polynomial result = ring_ ? constant(ring_, traits::one()) : scalar(traits::one());
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1u) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    /// Applies `fn` to every coefficient; zero results are dropped.
    template <class F>
    auto map_coefficients(F&& fn) const -> Polynomial<std::invoke_result_t<F, const C&>> {
        using D = std::invoke_result_t<F, const C&>;
        std::vector<Term<D>> terms;
        terms.reserve(terms_.size());
        for (const auto& t : terms_) {
            D d = fn(t.coeff);
            if (!CoeffTraits<D>::is_zero(d)) terms.push_back({t.mono, std::move(d)});
        }
        return Polynomial<D>::adopt_sorted(ring_, std::move(terms));
    }

    /// Builds from terms already strictly descending and nonzero. Internal use.
    static Polynomial adopt_sorted(RingPtr ring, std::vector<Term<C>> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.ring_ && b.ring_) {
            if (!same_ring(a.ring_, b.ring_)) return false;
            return a.terms_ == b.terms_;
        }
        RingPtr r = a.ring_ ? a.ring_ : b.ring_;
        if (!r) return a.terms_ == b.terms_;
        return a.aligned(r).terms_ == b.aligned(r).terms_;
    }

private:
    static RingPtr common_ring(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_) return b.ring_;
        if (!b.ring_) return a.ring_;
        if (!same_ring(a.ring_, b.ring_)) throw ContextMismatch("operands belong to different polynomial rings");
        return a.ring_;
    }

    /// Lifts a ring-free constant into `ring`.
    Polynomial aligned(const RingPtr& ring) const {
        if (ring_ || !ring) return *this;
        Polynomial out(ring);
        for (const auto& t : terms_) out.terms_.push_back({Monomial(ring->size()), t.coeff});
        return out;
    }

    static Polynomial merge(const Polynomial& a0, const Polynomial& b0, bool subtract) {
        RingPtr ring = common_ring(a0, b0);
        const Polynomial& a = a0.ring_ || !ring ? a0 : a0.aligned(ring);
        Polynomial b_lifted;
        const Polynomial* bp = &b0;
        if (!b0.ring_ && ring) {
            b_lifted = b0.aligned(ring);
            bp = &b_lifted;
        }
        const Polynomial& b = *bp;
        Polynomial out(ring);
        out.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            int cmp;
            if (ia == a.terms_.end()) cmp = -1;
            else if (ib == b.terms_.end()) cmp = 1;
            else if (!ring) cmp = 0;
            else {
                auto o = ring->compare(ia->mono, ib->mono);
                cmp = o > 0 ? 1 : (o < 0 ? -1 : 0);
            }
            if (cmp > 0) {
                out.terms_.push_back(*ia++);
            } else if (cmp < 0) {
                out.terms_.push_back({ib->mono, subtract ? C(-ib->coeff) : ib->coeff});
                ++ib;
            } else {
                C c = ia->coeff;
                if (subtract) c -= ib->coeff;
                else c += ib->coeff;
                if (!traits::is_zero(c)) out.terms_.push_back({ia->mono, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    RingPtr ring_;
    std::vector<Term<C>> terms_;
};

using ScalarPoly = Polynomial<Rational>;
/// Polynomial in parameter symbols with rational coefficients, used as a coefficient.
using Parametric = Polynomial<Rational>;
using ParamPoly = Polynomial<Parametric>;

/// Weighted degree of a polynomial. `any` is reported for the zero polynomial.
struct WeightedDegree {
    enum class Kind { homogeneous, nonhomogeneous, any };
    Kind kind = Kind::any;
    unsigned weight = 0;

    bool homogeneous_of(unsigned w) const { return kind == Kind::any || (kind == Kind::homogeneous && weight == w); }
    friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

template <class C>
WeightedDegree weighted_degree(const Polynomial<C>& p) {
    if (p.is_zero()) return {};
    if (!p.ring()) return {WeightedDegree::Kind::homogeneous, 0};
    const auto& ctx = p.ring()->ctx;
    unsigned w = ctx.weight_of(p.terms().front().mono);
    for (const auto& t : p.terms())
        if (ctx.weight_of(t.mono) != w) return {WeightedDegree::Kind::nonhomogeneous, 0};
    return {WeightedDegree::Kind::homogeneous, w};
}

/// Highest term weight; zero for the zero polynomial.
template <class C>
unsigned max_weight(const Polynomial<C>& p) {
    unsigned w = 0;
    if (!p.ring()) return 0;
    for (const auto& t : p.terms()) w = std::max(w, p.ring()->ctx.weight_of(t.mono));
    return w;
}

namespace detail {

template <class D, class C>
D times_coeff(const D& d, const C& c) {
    if constexpr (std::same_as<C, D>) {
        return D(d * c);
    } else {
        static_assert(std::same_as<C, Rational>, "substitution needs rational or matching coefficients");
        return CoeffTraits<D>::scaled(d, c);
    }
}

}  // namespace detail

/// Ring homomorphism: replaces variable i of `p` by `images[i]`.
///
/// Images live in `target` (which may be a different ring) and may have a
/// different coefficient domain; coefficients of `p` multiply into it.
template <class D, class C>
Polynomial<D> substitute(const Polynomial<C>& p, std::span<const Polynomial<D>> images, const RingPtr& target) {
    if (p.ring() && images.size() != p.ring()->size())
        throw InvalidArgument("substitution needs one image per variable");
    for (const auto& img : images)
        if (img.ring() && !same_ring(img.ring(), target)) throw ContextMismatch("substitution image in another ring");
    std::vector<std::vector<Polynomial<D>>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial<D>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial<D>::constant(target, CoeffTraits<D>::one()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    std::unordered_map<Monomial, D, MonomialHash> acc;
    for (const auto& t : p.terms()) {
        bool vanishes = false;
        for (std::size_t i = 0; i < t.mono.arity() && !vanishes; ++i)
            vanishes = t.mono[i] > 0 && images[i].is_zero();
        if (vanishes) continue;
        Polynomial<D> prod = Polynomial<D>::constant(target, CoeffTraits<D>::one());
        for (std::size_t i = 0; i < t.mono.arity(); ++i)
            if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
        for (const auto& pt : prod.terms()) {
            D c = detail::times_coeff(pt.coeff, t.coeff);
            auto [it, inserted] = acc.try_emplace(pt.mono, std::move(c));
            if (!inserted) it->second += c;
        }
    }
    std::vector<Term<D>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!CoeffTraits<D>::is_zero(c)) terms.push_back({m, std::move(c)});
    return Polynomial<D>::from_terms(target, std::move(terms));
}

template <class D, class C>
Polynomial<D> substitute(const Polynomial<C>& p, const std::vector<Polynomial<D>>& images, const RingPtr& target) {
    return substitute<D, C>(p, std::span<const Polynomial<D>>(images), target);
}

/// Substitution keyed by variable name; every variable of `p`'s context needs an image.
template <class D, class C>
Polynomial<D> substitute(const Polynomial<C>& p, const std::vector<std::pair<std::string, Polynomial<D>>>& images,
                         const RingPtr& target) {
    if (!p.ring()) return substitute<D, C>(p, std::span<const Polynomial<D>>(), target);
    const auto& ctx = p.ring()->ctx;
    std::vector<Polynomial<D>> ordered(ctx.size());
    std::vector<bool> seen(ctx.size(), false);
    for (const auto& [name, img] : images) {
        auto idx = ctx.index_of(name);
        if (!idx) throw ContextMismatch("image given for unknown variable '" + name + "'");
        ordered[*idx] = img;
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (!seen[i]) throw InvalidArgument("missing image for '" + ctx.name(i) + "'");
    return substitute<D, C>(p, std::span<const Polynomial<D>>(ordered), target);
}

/// Returns (primitive part, s) where primitive part = s * p has integer
/// coefficients with content 1 and a positive leading coefficient. Zero maps to (0, 1).
inline std::pair<ScalarPoly, Rational> primitive_with_scale(const ScalarPoly& p) {
    if (p.is_zero()) return {p, Rational(1)};
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) s = -s;
    return {p.scaled(s), s};
}

inline ScalarPoly normalize_primitive(const ScalarPoly& p) { return primitive_with_scale(p).first; }

}  // namespace rigidity
