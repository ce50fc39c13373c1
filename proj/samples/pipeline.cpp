// Runs the whole pipeline on a .pres file, or on a builtin name:
//   rigidity-sample samples/f4_c3.pres
//   rigidity-sample E6_A6

#include <fstream>
#include <iostream>
#include <sstream>

#include "rigidity/catalog.hpp"
#include "rigidity/solver.hpp"

using namespace rigidity;

int main(int argc, char** argv) {
    std::string arg = argc > 1 ? argv[1] : "F4_C3";
    RingPresentation pres;
    if (std::ifstream in(arg); in) {
        std::stringstream ss;
        ss << in.rdbuf();
        pres = parse_presentation(ss.str());
    } else {
        pres = builtin(arg);
    }

    auto D = pres.max_relation_weight();
    auto G = buchberger(pres.relation_polys(), GroebnerOptions{D});
    std::cout << "basis up to weight " << D << ":\n";
    for (const auto& g : G.elements) std::cout << "  " << format_polynomial(g) << "\n";

    auto sys = extract_constraints(pres, G);
    std::cout << sys.constraints.size() << " constraints in " << sys.unknowns.size() << " unknowns\n";
    std::cout << "adams family: " << (verify_family(sys, adams_family(pres)).pass ? "verified" : "fails") << "\n";

    for (int p : {2, 3}) {
        auto rep = solve_at(sys, Rational(p));
        std::cout << "k=" << p << ": " << to_string(rep.classification) << "\n";
        for (const auto& pt : rep.points) std::cout << "  " << format_point(rep.unknowns, pt) << "\n";
        for (const auto& r : rep.residual) std::cout << "  unresolved: " << r << "\n";
    }
}
