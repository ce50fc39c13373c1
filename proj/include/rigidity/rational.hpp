#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rigidity/errors.hpp"

namespace rigidity {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical text: `n` for integers, `n/d` otherwise.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `[-]digits` or `[-]digits/digits`.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_int(num, true)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    Rational out;
    if (slash == std::string_view::npos) {
        out = Rational(Integer(std::string(num)));
        return out;
    }
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den, false)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    Integer d(std::string{den});
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num)), d);
    out.canonicalize();
    return out;
}

}  // namespace rigidity
