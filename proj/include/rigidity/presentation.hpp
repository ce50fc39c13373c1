#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/polynomial.hpp"
#include "rigidity/text.hpp"

namespace rigidity {

struct Relation {
    std::string label;
    unsigned weight = 0;
    ScalarPoly poly;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Graded quotient Q[y_1..y_n] / <g_1..g_m>.
///
/// Invariants: every relation is weighted-homogeneous of its declared weight, and the
/// Kaehler generator is the unique generator of weight 1.
struct RingPresentation {
    std::string name;
    RingPtr ring;
    std::vector<Relation> relations;
    std::size_t kaehler = 0;

    const VariableContext& ctx() const { return ring->ctx; }

    unsigned max_relation_weight() const {
        unsigned w = 0;
        for (const auto& r : relations) w = std::max(w, r.weight);
        return w;
    }

    std::vector<ScalarPoly> relation_polys() const {
        std::vector<ScalarPoly> out;
        for (const auto& r : relations) out.push_back(r.poly);
        return out;
    }

    /// Same presentation with the monomial order kind replaced; precedence is kept.
    RingPresentation with_order(OrderKind kind) const {
        RingPresentation out = *this;
        out.ring = make_ring(ring->ctx, MonomialOrder{kind});
        for (auto& r : out.relations) r.poly = r.poly.in_ring(out.ring);
        return out;
    }

    friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
        return a.name == b.name && same_ring(a.ring, b.ring) && a.relations == b.relations && a.kaehler == b.kaehler;
    }
};

/// Checks the presentation invariants; throws InvalidArgument on violation.
inline void validate(const RingPresentation& p) {
    const auto& ctx = p.ctx();
    std::optional<std::size_t> kaehler;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx.weight(i) != 1) continue;
        if (kaehler) throw InvalidArgument("more than one generator of weight 1");
        kaehler = i;
    }
    if (!kaehler) throw InvalidArgument("no generator of weight 1 (Kaehler class)");
    if (*kaehler != p.kaehler) throw InvalidArgument("Kaehler generator index mismatch");
    std::unordered_set<std::string> labels;
    for (const auto& r : p.relations) {
        if (!labels.insert(r.label).second) throw InvalidArgument("duplicate relation label '" + r.label + "'");
        if (!weighted_degree(r.poly).homogeneous_of(r.weight) || r.poly.is_zero())
            throw InvalidArgument("relation " + r.label + " is not homogeneous of weight " + std::to_string(r.weight));
    }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Whitespace tokenizer over one line that remembers token columns (1-based).
struct LineTokens {
    struct Tok {
        std::string_view text;
        std::size_t column;
    };
    std::vector<Tok> toks;

    LineTokens(std::string_view line, std::size_t limit) {
        std::size_t i = 0;
        while (i < limit) {
            while (i < limit && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < limit && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) toks.push_back({line.substr(start, i - start), start + 1});
        }
    }
};

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline unsigned parse_weight(const LineTokens::Tok& t, std::size_t line) {
    if (t.text.empty() || t.text.size() > 6) throw ParseError("expected a weight", line, t.column);
    unsigned w = 0;
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a weight", line, t.column);
        w = w * 10 + unsigned(c - '0');
    }
    return w;
}

}  // namespace detail

/// Parses the line-oriented `.pres` format:
///
///     presentation "<name>"
///     var <id> deg <weight>              (declaration order = default precedence)
///     order lex <id> > <id> > ...        (optional)
///     rel <label> deg <weight> = <polynomial>
///
/// `#` starts a comment. CR before LF is tolerated.
inline RingPresentation parse_presentation(std::string_view src) {
    struct RelLine {
        std::size_t line;
        std::string label;
        std::size_t label_col;
        unsigned weight;
        std::size_t weight_col;
        std::string_view text;
        std::size_t text_col;
    };
    std::optional<std::string> name;
    std::vector<std::string> vars;
    std::vector<unsigned> weights;
    std::optional<std::vector<std::size_t>> precedence;
    OrderKind kind = OrderKind::lex;
    std::size_t order_line = 1;
    std::vector<RelLine> rels;
    std::unordered_set<std::string> labels;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::string_view line = src.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? src.size() + 1 : nl + 1;
        ++line_no;
        std::size_t limit = std::min(line.find('#'), line.size());
        if (detail::trim(line.substr(0, limit)).empty()) continue;
        std::size_t eq = line.substr(0, limit).find('=');
        detail::LineTokens lt(line, std::min(eq, limit));
        const auto& t = lt.toks;
        if (t.empty()) throw ParseError("expected a directive", line_no, 1);
        const auto kw = t[0].text;
        if (kw == "presentation") {
            if (name) throw ParseError("duplicate presentation directive", line_no, t[0].column);
            std::size_t q1 = line.find('"');
            std::size_t q2 = q1 == std::string_view::npos ? q1 : line.find('"', q1 + 1);
            if (q2 == std::string_view::npos || q2 >= limit)
                throw ParseError("expected quoted presentation name", line_no, t[0].column);
            if (!detail::trim(line.substr(q2 + 1, limit - q2 - 1)).empty())
                throw ParseError("trailing text after presentation name", line_no, q2 + 2);
            name = std::string(line.substr(q1 + 1, q2 - q1 - 1));
        } else if (kw == "var") {
            if (eq < limit) throw ParseError("unexpected '='", line_no, eq + 1);
            if (t.size() != 4 || t[2].text != "deg")
                throw ParseError("expected 'var <id> deg <weight>'", line_no, t[0].column);
            if (!detail::is_identifier(t[1].text))
                throw ParseError("invalid variable name '" + std::string(t[1].text) + "'", line_no, t[1].column);
            std::string v(t[1].text);
            if (std::find(vars.begin(), vars.end(), v) != vars.end())
                throw ParseError("duplicate variable '" + v + "'", line_no, t[1].column);
            unsigned w = detail::parse_weight(t[3], line_no);
            if (w == 0) throw ParseError("variable weight must be >= 1", line_no, t[3].column);
            vars.push_back(v);
            weights.push_back(w);
        } else if (kw == "order") {
            if (precedence) throw ParseError("duplicate order directive", line_no, t[0].column);
            if (t.size() < 3) throw ParseError("expected 'order lex <id> > ...'", line_no, t[0].column);
            try {
                kind = parse_order_kind(t[1].text);
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what(), line_no, t[1].column);
            }
            precedence.emplace();
            order_line = line_no;
            for (std::size_t i = 2; i < t.size(); ++i) {
                if ((i - 2) % 2 == 1) {
                    if (t[i].text != ">") throw ParseError("expected '>'", line_no, t[i].column);
                    continue;
                }
                auto it = std::find(vars.begin(), vars.end(), t[i].text);
                if (it == vars.end())
                    throw ParseError("unknown variable '" + std::string(t[i].text) + "'", line_no, t[i].column);
                precedence->push_back(std::size_t(it - vars.begin()));
            }
            if (t.size() % 2 == 0) throw ParseError("dangling '>'", line_no, t.back().column);
        } else if (kw == "rel") {
            if (eq >= limit) throw ParseError("expected '=' in relation", line_no, t[0].column);
            if (t.size() != 4 || t[2].text != "deg")
                throw ParseError("expected 'rel <label> deg <weight> = <polynomial>'", line_no, t[0].column);
            if (!detail::is_identifier(t[1].text))
                throw ParseError("invalid relation label", line_no, t[1].column);
            std::string label(t[1].text);
            if (!labels.insert(label).second)
                throw ParseError("duplicate relation label '" + label + "'", line_no, t[1].column);
            rels.push_back({line_no, label, t[1].column, detail::parse_weight(t[3], line_no), t[3].column,
                            line.substr(eq + 1, limit - eq - 1), eq + 1});
        } else {
            throw ParseError("unknown directive '" + std::string(kw) + "'", line_no, t[0].column);
        }
    }
    if (!name) throw ParseError("missing presentation directive", 1, 1);
    if (vars.empty()) throw ParseError("no variables declared", line_no, 1);

    RingPresentation out;
    out.name = *name;
    try {
        out.ring = make_ring(VariableContext(vars, weights, precedence.value_or(std::vector<std::size_t>{})),
                             MonomialOrder{kind});
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), order_line, 1);
    }
    std::size_t ones = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == 1) {
            out.kaehler = i;
            ++ones;
        }
    if (ones != 1) throw ParseError("exactly one generator of weight 1 is required", 1, 1);
    for (const auto& r : rels) {
        ScalarPoly p = parse_polynomial(r.text, out.ring, r.line, r.text_col);
        if (p.is_zero() || !weighted_degree(p).homogeneous_of(r.weight))
            throw ParseError("relation " + r.label + " is not homogeneous of weight " + std::to_string(r.weight),
                             r.line, r.text_col + 1);
        out.relations.push_back({r.label, r.weight, std::move(p)});
    }
    return out;
}

/// Canonical `.pres` text; parse_presentation(format_canonical(p)) == p.
inline std::string format_canonical(const RingPresentation& p) {
    std::ostringstream os;
    const auto& ctx = p.ctx();
    os << "presentation \"" << p.name << "\"\n";
    for (std::size_t i = 0; i < ctx.size(); ++i) os << "var " << ctx.name(i) << " deg " << ctx.weight(i) << "\n";
    os << "order " << to_string(p.ring->order.kind);
    for (std::size_t k = 0; k < ctx.precedence().size(); ++k)
        os << (k ? " > " : " ") << ctx.name(ctx.precedence()[k]);
    os << "\n";
    for (const auto& r : p.relations)
        os << "rel " << r.label << " deg " << r.weight << " = " << format_polynomial(r.poly) << "\n";
    return os.str();
}

/// FNV-1a 64-bit hash of the canonical text, as 16 hex digits.
inline std::string presentation_hash(const RingPresentation& p) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : format_canonical(p)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace rigidity
