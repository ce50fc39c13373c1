#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/monomial.hpp"

namespace rigidity {

/// Generator names with positive weights and a precedence used by monomial orders.
///
/// Weights use the half grading: a generator of cohomological degree 2i has weight i.
/// Precedence lists variable indices from highest to lowest; by default it is the
/// declaration order.
class VariableContext {
public:
    VariableContext() = default;

    VariableContext(std::vector<std::string> names, std::vector<unsigned> weights,
                    std::vector<std::size_t> precedence = {})
        : names_(std::move(names)), weights_(std::move(weights)), precedence_(std::move(precedence)) {
        if (names_.size() != weights_.size()) throw InvalidArgument("one weight per variable required");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw InvalidArgument("empty variable name");
            if (!seen.insert(n).second) throw InvalidArgument("duplicate variable '" + n + "'");
        }
        for (unsigned w : weights_)
            if (w == 0) throw InvalidArgument("variable weights must be >= 1");
        if (precedence_.empty()) {
            for (std::size_t i = 0; i < names_.size(); ++i) precedence_.push_back(i);
        }
        std::vector<std::size_t> sorted = precedence_;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = sorted.size() == names_.size();
        for (std::size_t i = 0; permutation && i < sorted.size(); ++i) permutation = sorted[i] == i;
        if (!permutation) throw InvalidArgument("precedence must be a permutation of the variables");
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    unsigned weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<unsigned>& weights() const noexcept { return weights_; }
    const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

    std::optional<std::size_t> index_of(std::string_view n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) return std::nullopt;
        return std::size_t(it - names_.begin());
    }

    unsigned weight_of(const Monomial& m) const {
        check_arity(m);
        unsigned w = 0;
        for (std::size_t i = 0; i < m.arity(); ++i) w += weights_[i] * m[i];
        return w;
    }

    void check_arity(const Monomial& m) const {
        if (m.arity() != size())
            throw ArityMismatch("exponent vector of arity " + std::to_string(m.arity()) + " in context of size " +
                                std::to_string(size()));
    }

    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_ && a.precedence_ == b.precedence_;
    }

private:
    std::vector<std::string> names_;
    std::vector<unsigned> weights_;
    std::vector<std::size_t> precedence_;
};

enum class OrderKind { lex, wgrlex, wgrevlex };

inline std::string_view to_string(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::wgrlex: return "wgrlex";
        case OrderKind::wgrevlex: return "wgrevlex";
    }
    return "?";
}

inline OrderKind parse_order_kind(std::string_view s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "wgrlex") return OrderKind::wgrlex;
    if (s == "wgrevlex") return OrderKind::wgrevlex;
    throw InvalidArgument("unknown monomial order '" + std::string(s) + "'");
}

/// Monomial order: the kind plus the precedence of the variable context.
///
/// lex compares exponents in precedence order. wgrlex compares weighted degree
/// first and breaks ties with lex. wgrevlex compares weighted degree first, then
/// the lowest-precedence variable whose exponents differ; the smaller exponent wins.
struct MonomialOrder {
    OrderKind kind = OrderKind::lex;
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline std::strong_ordering compare_monomials(const VariableContext& ctx, MonomialOrder order, const Monomial& a,
                                              const Monomial& b) {
    ctx.check_arity(a);
    ctx.check_arity(b);
    const auto& prec = ctx.precedence();
    if (order.kind != OrderKind::lex) {
        unsigned wa = ctx.weight_of(a), wb = ctx.weight_of(b);
        if (wa != wb) return wa <=> wb;
    }
    if (order.kind == OrderKind::wgrevlex) {
        for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t i : prec) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

/// A polynomial ring: variable context plus active monomial order.
struct PolyRing {
    VariableContext ctx;
    MonomialOrder order;

    std::size_t size() const noexcept { return ctx.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        return compare_monomials(ctx, order, a, b);
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.order == b.order && a.ctx == b.ctx; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(VariableContext ctx, MonomialOrder order = {}) {
    return std::make_shared<const PolyRing>(PolyRing{std::move(ctx), order});
}

/// Ring with equally weighted symbols ordered lex by declaration; used for
/// parameters and unknowns.
inline RingPtr make_symbol_ring(std::vector<std::string> names) {
    std::vector<unsigned> weights(names.size(), 1);
    return make_ring(VariableContext(std::move(names), std::move(weights)));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// All exponent vectors of total weight `r`, in descending lexicographic order on
/// the declaration-ordered tuples.
inline std::vector<Monomial> monomial_basis(const VariableContext& ctx, unsigned r) {
    std::vector<Monomial> out;
    Monomial cur(ctx.size());
    auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i == ctx.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        unsigned w = ctx.weight(i);
        for (unsigned e = remaining / w + 1; e-- > 0;) {
            cur.set(i, e);
            self(self, i + 1, remaining - e * w);
        }
        cur.set(i, 0);
    };
    rec(rec, 0, r);
    return out;
}

}  // namespace rigidity
