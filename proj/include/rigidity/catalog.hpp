#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/presentation.hpp"

namespace rigidity {

// Rational cohomology of the eight exceptional Grassmannians. Relations are kept
// exactly as published, in their published term order; weights are half degrees.
namespace catalog_text {

inline constexpr std::string_view F4_C3 = R"(presentation "F4_C3"
var y1 deg 1
var y4 deg 4
rel g8 deg 8 = 24*y4^2 + y1^8 - 12*y1^4*y4
rel g12 deg 12 = y1^12 - 24*y1^8*y4 + 144*y1^4*y4^2 - 64*y4^3
)";

inline constexpr std::string_view F4_B3 = R"(presentation "F4_B3"
var y1 deg 1
var y4 deg 4
rel g8 deg 8 = 3*y4^2 - y1^8
rel g12 deg 12 = 26*y4^3 - 5*y1^12
)";

inline constexpr std::string_view E6_A6 = R"(presentation "E6_A6"
var y1 deg 1
var y3 deg 3
var y4 deg 4
rel g8 deg 8 = 6*y4^2 - 12*y1*y3*y4 + 9*y1^2*y3^2 + 3*y1^4*y4 - 6*y1^5*y3 + y1^8
rel g9 deg 9 = -2*y3^3 + 6*y3*y1^2*y4 - 3*y1^3*y3^2 + 4*y3*y1^6 - 3*y1^5*y4 - y1^9
rel g12 deg 12 = 4*y4^3 - y3^4 + 6*y3^2*y1^2*y4 - 4*y3^3*y1^3 - 2*y3^2*y1^6 - 9*y1^4*y4^2 + 12*y1^5*y4*y3 - 6*y1^8*y4 + 4*y1^9*y3 - y1^12
)";

inline constexpr std::string_view E6_D5 = R"(presentation "E6_D5"
var y1 deg 1
var y4 deg 4
rel g9 deg 9 = 2*y1^9 + 3*y1*y4^2 - 6*y1^5*y4
rel g12 deg 12 = y4^3 - 6*y1^4*y4^2 + y1^12
)";

inline constexpr std::string_view E7_E6 = R"(presentation "E7_E6"
var y1 deg 1
var y5 deg 5
var y9 deg 9
rel g10 deg 10 = y5^2 - 2*y1*y9
rel g14 deg 14 = 2*y5*y9 - 9*y1^4*y5^2 + 6*y1^9*y5 - y1^14
rel g18 deg 18 = y9^2 + 10*y1^3*y5^3 - 9*y1^8*y5^2 + 2*y1^13*y5
)";

inline constexpr std::string_view E7_D6 = R"(presentation "E7_D6"
var y1 deg 1
var y4 deg 4
var y6 deg 6
rel g12 deg 12 = 3*y6^2 - y4^3 - 3*y1^4*y4^2 - 2*y1^6*y6 + 2*y1^8*y4
rel g14 deg 14 = 3*y4^2*y6 + 3*y1^2*y6^2 + 6*y1^2*y4^3 + 6*y1^4*y4*y6 - 3*y1^6*y4^2 - 4*y1^8*y6 - 2*y1^10*y4 + y1^14
rel g18 deg 18 = 45*y4^4*y1^2 + 120*y4^2*y1^4*y6 + 60*y4^3*y1^6 - 52*y4^2*y1^10 - 16*y1^6*y6^2 + 80*y1^8*y6*y4 - 96*y1^12*y6 - 48*y1^14*y4 + 28*y1^18 + 116*y6^3 + 180*y1^2*y4*y6^2
)";

inline constexpr std::string_view E8_E7 = R"(presentation "E8_E7"
var y1 deg 1
var y6 deg 6
var y10 deg 10
rel g20 deg 20 = 3*y10^2 + 10*y1^2*y6^3 + 18*y1^4*y6*y10 - 12*y1^10*y10 - 18*y1^8*y6^2 + 9*y1^14*y6 - y1^20
rel g24 deg 24 = 5*y6^4 + 30*y1^2*y6^2*y10 + 15*y1^4*y10^2 - 15*y1^14*y10 - 15*y1^12*y6^2 + 10*y1^18*y6 - y1^24
rel g30 deg 30 = 12*y1^4*y6*y10^2 + 24*y1^14*y6*y10 + 56*y1^24*y6 - 36*y1^10*y10^2 - 32*y10^3 + 4*y6^5 - 9*y1^30 - 48*y1^20*y10 + 60*y1^6*y6^4 - 64*y1^18*y6^2 + 96*y1^8*y10*y6^2 - 44*y1^12*y6^3
)";

inline constexpr std::string_view E7_A7 = R"(presentation "E7_A7"
var y1 deg 1
var y3 deg 3
var y4 deg 4
var y5 deg 5
var y7 deg 7
rel g8 deg 8 = 6*y4^2 - 4*y3*y5 + 4*y1*y7 - 12*y1*y3*y4 + 9*y1^2*y3^2 + 2*y1^3*y5 + 3*y1^4*y4 - 6*y1^5*y3 + y1^8
rel g10 deg 10 = y5^2 - 2*y3*y7 + y1^3*y7
rel g12 deg 12 = -4*y4^3 - 2*y3^2*y1^6 + 9*y1^4*y4^2 + 6*y1^8*y4 - 4*y1^9*y3 - 24*y1*y4*y7 - 12*y1^5*y4*y3 + 8*y5*y7 + 4*y3*y1*y4^2 - 18*y3^2*y1^2*y4 + 12*y3*y1^2*y7 - 3*y3^4 + y1^12 + 16*y3^3*y1^3
rel g14 deg 14 = y7^2 + 3*y4*y5^2 + y5*y3^3 + 3*y5*y3*y1^2*y4 - 3*y5*y1^3*y3^2 + y5*y3*y1^6 - y5*y1*y4^2 - 3*y5*y1^2*y7
rel g18 deg 18 = -8*y4^3*y5*y1 - 4*y5*y7*y3^2 - 2*y3*y1^7*y4^2 + y3^6 - 6*y3*y1^8*y7 + 18*y1^5*y3^2*y7 + 15*y3^2*y1^4*y4^2 - 6*y3*y1^3*y4^3 + 8*y4*y5*y3*y1^6 - 12*y1*y5^2*y7 + y1^2*y4^4 + 12*y4^2*y5^2 + y3^2*y1^12 - 6*y1^9*y3^3 + 11*y3^4*y1^6 + 8*y4*y5*y3^3 + 24*y4^2*y5*y3*y1^2 + 8*y3*y5^3 - 18*y3^3*y1^5*y4 - 2*y3^3*y1*y4^2 + 4*y5*y7*y1^6 + 6*y3^4*y1^2*y4 - 6*y3^5*y1^3 + 6*y1^3*y4^2*y7 - 18*y3*y1^4*y4*y7 - 6*y3^3*y1^2*y7 + 6*y3^2*y1^8*y4 - 4*y4*y7^2 + 9*y1^4*y7^2 - 24*y4*y5*y1^3*y3^2 - 8*y5*y7*y1^3*y3 - 12*y4*y5*y1^2*y7
)";

}  // namespace catalog_text

/// Catalog names in publication order.
inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"F4_C3", "F4_B3", "E6_A6", "E6_D5",
                                                "E7_E6", "E7_D6", "E8_E7", "E7_A7"};
    return names;
}

inline std::string_view builtin_source(std::string_view name) {
    using namespace catalog_text;
    if (name == "F4_C3") return F4_C3;
    if (name == "F4_B3") return F4_B3;
    if (name == "E6_A6") return E6_A6;
    if (name == "E6_D5") return E6_D5;
    if (name == "E7_E6") return E7_E6;
    if (name == "E7_D6") return E7_D6;
    if (name == "E8_E7") return E8_E7;
    if (name == "E7_A7") return E7_A7;
    throw InvalidArgument("unknown presentation '" + std::string(name) + "'");
}

inline RingPresentation builtin(std::string_view name) {
    RingPresentation p = parse_presentation(builtin_source(name));
    validate(p);
    return p;
}

}  // namespace rigidity
