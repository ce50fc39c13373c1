#pragma once

// Command-line front end: argument handling, the pipeline driver and report output.
// Everything goes through run_command so tests can drive it without a process.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rigidity/catalog.hpp"
#include "rigidity/endomorph.hpp"
#include "rigidity/solver.hpp"

namespace rigidity::cli {

inline constexpr std::string_view version = "1.0.0";
inline constexpr int schema_version = 1;

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_resource = 3 };

using Json = nlohmann::ordered_json;

struct Limits {
    std::size_t max_pairs = GroebnerOptions{}.max_pairs;
    std::size_t max_terms = GroebnerOptions{}.max_terms;
    std::size_t solve_max_pairs = 50000;
    std::size_t max_candidates = SolverOptions{}.max_candidates;
    std::size_t max_rho_steps = SolverOptions{}.max_rho_steps;
    std::size_t max_quotient_dim = SolverOptions{}.max_quotient_dim;
};

struct Config {
    std::string command;
    std::string case_name;
    std::string input;
    std::string order;
    std::string truncate;  // empty = the subcommand's default
    std::string poly;
    unsigned weight = 0;
    std::vector<std::string> ks;
    std::string family;
    std::string out;
    bool json = false;
    bool all = false;
    Limits limits;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Environment ceilings first; explicitly given flags override them afterwards.
inline void apply_env(Limits& l) {
    auto env = [](const char* name, std::size_t& slot) {
        if (const char* v = std::getenv(name)) {
            try {
                std::size_t pos = 0;
                unsigned long long x = std::stoull(v, &pos);
                if (pos != std::string_view(v).size()) throw std::invalid_argument(name);
                slot = x;
            } catch (const std::exception&) {
                throw InvalidArgument(std::string(name) + " must be a non-negative integer");
            }
        }
    };
    env("RIGIDITY_MAX_PAIRS", l.max_pairs);
    env("RIGIDITY_MAX_TERMS", l.max_terms);
    env("RIGIDITY_SOLVE_MAX_PAIRS", l.solve_max_pairs);
    env("RIGIDITY_MAX_CANDIDATES", l.max_candidates);
    env("RIGIDITY_MAX_RHO_STEPS", l.max_rho_steps);
    env("RIGIDITY_MAX_QUOTIENT_DIM", l.max_quotient_dim);
}

inline RingPresentation load(const Config& c) {
    if (!c.case_name.empty() && !c.input.empty()) throw InvalidArgument("--case and --input are exclusive");
    if (c.case_name.empty() && c.input.empty()) throw InvalidArgument("one of --case or --input is required");
    RingPresentation p = c.case_name.empty() ? parse_presentation(read_file(c.input)) : builtin(c.case_name);
    if (!c.order.empty()) p = p.with_order(parse_order_kind(c.order));
    return p;
}

inline std::optional<unsigned> truncation(const Config& c, const RingPresentation& p, bool auto_default) {
    std::string t = c.truncate.empty() ? (auto_default ? "auto" : "none") : c.truncate;
    if (t == "none") return std::nullopt;
    if (t == "auto") return p.max_relation_weight();
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return unsigned(v);
    } catch (const std::exception&) {
        throw InvalidArgument("--truncate expects a weight, 'auto' or 'none', got '" + t + "'");
    }
}

inline GroebnerOptions gb_options(const Config& c, std::optional<unsigned> trunc) {
    GroebnerOptions o;
    o.truncate = trunc;
    o.max_pairs = c.limits.max_pairs;
    o.max_terms = c.limits.max_terms;
    return o;
}

inline SolverOptions solver_options(const Config& c) {
    SolverOptions o;
    o.groebner.max_pairs = c.limits.solve_max_pairs;
    o.groebner.max_terms = c.limits.max_terms;
    o.max_candidates = c.limits.max_candidates;
    o.max_rho_steps = c.limits.max_rho_steps;
    o.max_quotient_dim = c.limits.max_quotient_dim;
    return o;
}

class Stopwatch {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return std::round(ms * 1000) / 1000;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline Json presentation_json(const RingPresentation& p) {
    const auto& ctx = p.ctx();
    Json vars = Json::array(), prec = Json::array(), rels = Json::array();
    for (std::size_t i = 0; i < ctx.size(); ++i) vars.push_back({{"name", ctx.name(i)}, {"weight", ctx.weight(i)}});
    for (auto i : ctx.precedence()) prec.push_back(ctx.name(i));
    for (const auto& r : p.relations)
        rels.push_back({{"label", r.label}, {"weight", r.weight}, {"poly", format_polynomial(r.poly)}});
    return {{"name", p.name},
            {"hash", presentation_hash(p)},
            {"order", {{"kind", to_string(p.ring->order.kind)}, {"precedence", prec}}},
            {"variables", vars},
            {"relations", rels}};
}

inline Json basis_json(const GroebnerBasis& G) {
    Json elems = Json::array();
    for (const auto& e : G.elements) elems.push_back(format_polynomial(e));
    return {{"truncation", G.truncation ? Json(*G.truncation) : Json(nullptr)},
            {"elements", elems},
            {"stats",
             {{"pairs_created", G.stats.pairs_created},
              {"pairs_reduced", G.stats.pairs_reduced},
              {"zero_reductions", G.stats.zero_reductions},
              {"pairs_truncated", G.stats.pairs_truncated}}}};
}

inline Json residues_json(const ConstraintSystem& s) {
    Json out = Json::array();
    for (std::size_t j = 0; j < s.residues.size(); ++j)
        out.push_back({{"relation", s.pres.relations[j].label}, {"residue", format_polynomial(s.residues[j])}});
    return out;
}

inline Json constraints_json(const ConstraintSystem& s) {
    Json items = Json::array();
    for (const auto& c : s.constraints)
        items.push_back({{"relation", s.pres.relations[c.relation].label},
                         {"monomial", format_monomial(s.pres.ctx(), c.alpha)},
                         {"poly", format_polynomial(c.primitive)}});
    return {{"unknowns", s.unknowns}, {"items", items}};
}

inline Json verdict_json(const std::string& family, const FamilyVerdict& v, const ConstraintSystem& s) {
    Json w = nullptr;
    if (v.witness) {
        const auto& c = s.constraints[*v.witness];
        w = {{"relation", s.pres.relations[c.relation].label},
             {"monomial", format_monomial(s.pres.ctx(), c.alpha)},
             {"value", format_polynomial(v.value)}};
    }
    return {{"family", family}, {"pass", v.pass}, {"witness", w}};
}

inline Json solution_json(const SolutionReport& r) {
    Json pts = Json::array();
    for (const auto& pt : r.points) {
        Json o = Json::object();
        for (std::size_t i = 0; i < pt.size(); ++i) o[r.unknowns[i]] = to_string(pt[i]);
        pts.push_back(o);
    }
    return {{"k", to_string(r.p)},
            {"points", pts},
            {"residual", r.residual},
            {"positive_dimensional", r.positive_dimensional},
            {"quotient_dim", r.quotient_dim ? Json(*r.quotient_dim) : Json(nullptr)},
            {"rejected_candidates", r.rejected_candidates},
            {"classification", to_string(r.classification)},
            {"detail", r.detail}};
}

inline Json header(const std::string& command) {
    return {{"schema_version", schema_version}, {"tool", "rigidity"}, {"version", version}, {"command", command}};
}

/// Result of one pipeline run: a JSON document, a text rendering and an exit code.
struct Outcome {
    Json json;
    std::string text;
    int code = exit_ok;
};

inline std::string point_text(const SolutionReport& r, const std::vector<Rational>& pt) {
    std::string s;
    for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + r.unknowns[i] + " = " + to_string(pt[i]);
    return s;
}

inline void solution_text(std::ostream& os, const SolutionReport& r) {
    os << "k = " << to_string(r.p) << ": " << r.points.size() << " rational point"
       << (r.points.size() == 1 ? "" : "s") << ", classification " << to_string(r.classification) << "\n";
    for (const auto& pt : r.points) os << "  " << point_text(r, pt) << "\n";
    for (const auto& s : r.residual) os << "  residual: " << s << "\n";
    if (!r.detail.empty()) os << "  note: " << r.detail << "\n";
}

inline bool classified(const SolutionReport& r) {
    return r.classification == Classification::adams || r.classification == Classification::adams_or_tau;
}

inline std::vector<Rational> k_values(const Config& c, std::vector<std::string> fallback) {
    const auto& src = c.ks.empty() ? fallback : c.ks;
    std::vector<Rational> out;
    for (const auto& t : src) out.push_back(parse_rational(t));
    return out;
}

inline CoefficientFamily load_family(const Config& c, const RingPresentation& pres, const EndomorphismAnsatz& a) {
    if (c.family == "adams") return adams_family(pres);
    if (c.family == "tau") return tau_family();
    return parse_family(read_file(c.family), a, c.family);
}

/// The full pipeline for one presentation.
inline Outcome report(const Config& c, const RingPresentation& pres) {
    Outcome o;
    Json t = Json::object();
    Stopwatch sw;
    std::ostringstream os;
    o.json = header("report");
    o.json["presentation"] = presentation_json(pres);
    os << "presentation " << pres.name << " [" << presentation_hash(pres) << "]\n";
    auto G = buchberger(pres.relation_polys(), gb_options(c, truncation(c, pres, false)));
    t["groebner"] = sw.lap();
    o.json["groebner"] = basis_json(G);
    os << "groebner basis (" << G.elements.size() << " elements"
       << (G.truncation ? ", truncated at weight " + std::to_string(*G.truncation) : std::string()) << ")\n";
    for (const auto& e : G.elements) os << "  " << format_polynomial(e) << "\n";
    auto sys = extract_constraints(pres, G);
    t["constraints"] = sw.lap();
    o.json["residues"] = residues_json(sys);
    o.json["constraints"] = constraints_json(sys);
    os << "constraints: " << sys.constraints.size() << " in " << sys.unknowns.size() << " unknowns\n";

    std::vector<CoefficientFamily> fams{adams_family(pres)};
    if (pres.name == "E6_A6") fams.push_back(tau_family());
    Json ver = Json::array();
    bool all_pass = true;
    for (const auto& f : fams) {
        auto v = verify_family(sys, f);
        all_pass = all_pass && v.pass;
        ver.push_back(verdict_json(f.name, v, sys));
        os << "verify " << f.name << ": " << (v.pass ? "pass" : "fail") << "\n";
    }
    t["verify"] = sw.lap();
    o.json["verification"] = ver;

    Json sols = Json::array();
    bool all_classified = true, exhausted = false;
    for (const auto& p : k_values(c, {"2"})) {
        try {
            auto r = solve_at(sys, p, solver_options(c));
            all_classified = all_classified && classified(r);
            sols.push_back(solution_json(r));
            solution_text(os, r);
        } catch (const ResourceLimitExceeded& e) {
            exhausted = true;
            sols.push_back({{"k", to_string(p)}, {"classification", "incomplete"}, {"detail", e.what()}});
            os << "k = " << to_string(p) << ": incomplete (" << e.what() << ")\n";
        }
    }
    t["solve"] = sw.lap();
    o.json["solutions"] = sols;
    o.json["verdicts"] = {{"families", all_pass ? "pass" : "fail"},
                          {"solutions", exhausted ? "incomplete" : all_classified ? "pass" : "fail"}};
    o.json["timings_ms"] = t;
    o.code = !all_pass || !all_classified ? exit_failure : exhausted ? exit_resource : exit_ok;
    o.text = os.str();
    return o;
}

inline Outcome run_single(const Config& c) {
    Outcome o;
    std::ostringstream os;
    Stopwatch sw;
    Json t = Json::object();
    auto pres = load(c);
    if (c.command == "report") return report(c, pres);
    o.json = header(c.command);
    o.json["presentation"] = presentation_json(pres);

    if (c.command == "basis") {
        Json mons = Json::array();
        for (const auto& m : monomial_basis(pres.ctx(), c.weight)) {
            mons.push_back(format_monomial(pres.ctx(), m));
            os << format_monomial(pres.ctx(), m) << "\n";
        }
        o.json["basis"] = {{"weight", c.weight}, {"monomials", mons}};
        o.text = os.str();
        return o;
    }

    bool auto_trunc = c.command == "constraints" || c.command == "solve" || c.command == "verify";
    auto G = buchberger(pres.relation_polys(), gb_options(c, truncation(c, pres, auto_trunc)));
    t["groebner"] = sw.lap();
    if (c.command == "gb") {
        o.json["groebner"] = basis_json(G);
        for (const auto& e : G.elements) os << format_polynomial(e) << "\n";
    } else if (c.command == "nf") {
        auto f = parse_polynomial(c.poly, pres.ring);
        auto r = residue(f, G);
        o.json["normal_form"] = {{"input", format_polynomial(f)}, {"residue", format_polynomial(r)}};
        os << format_polynomial(r) << "\n";
    } else if (c.command == "dim") {
        auto n = standard_monomial_count(G);
        o.json["dimension"] = n ? Json(*n) : Json("infinite");
        os << (n ? std::to_string(*n) : std::string("infinite")) << "\n";
    } else {
        auto a = build_ansatz(pres);
        auto sys = extract_constraints(pres, G, a);
        t["constraints"] = sw.lap();
        if (c.command == "constraints") {
            o.json["residues"] = residues_json(sys);
            o.json["constraints"] = constraints_json(sys);
            os << "unknowns: ";
            for (std::size_t i = 0; i < sys.unknowns.size(); ++i) os << (i ? ", " : "") << sys.unknowns[i];
            os << "\n";
            for (const auto& con : sys.constraints)
                os << "[" << pres.relations[con.relation].label << " " << format_monomial(pres.ctx(), con.alpha)
                   << "] " << format_polynomial(con.primitive) << " = 0\n";
        } else if (c.command == "verify") {
            auto f = load_family(c, pres, a);
            auto v = verify_family(sys, f);
            t["verify"] = sw.lap();
            o.json["verification"] = Json::array({verdict_json(f.name, v, sys)});
            o.json["verdicts"] = {{"families", v.pass ? "pass" : "fail"}};
            os << "verify " << f.name << " on " << pres.name << ": " << (v.pass ? "pass" : "fail") << "\n";
            if (v.witness) {
                const auto& con = sys.constraints[*v.witness];
                os << "  [" << pres.relations[con.relation].label << " " << format_monomial(pres.ctx(), con.alpha)
                   << "] evaluates to " << format_polynomial(v.value) << "\n";
            }
            if (!v.pass) o.code = exit_failure;
        } else {  // solve
            Json sols = Json::array();
            bool ok = true;
            for (const auto& p : k_values(c, {})) {
                auto r = solve_at(sys, p, solver_options(c));
                ok = ok && classified(r);
                sols.push_back(solution_json(r));
                solution_text(os, r);
            }
            t["solve"] = sw.lap();
            o.json["solutions"] = sols;
            o.json["verdicts"] = {{"solutions", ok ? "pass" : "fail"}};
            if (!ok) o.code = exit_failure;
        }
    }
    o.json["timings_ms"] = t;
    o.text = os.str();
    return o;
}

inline int worst(int a, int b) {
    // Usage errors outrank resource exhaustion, which outranks plain failure.
    auto rank = [](int x) { return x == exit_usage ? 3 : x == exit_resource ? 2 : x == exit_failure ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

/// One case inside `report --all`; errors become part of the document.
inline Outcome guarded_report(const Config& c) {
    try {
        return run_single(c);
    } catch (const ResourceLimitExceeded& e) {
        Outcome o{header("report"), c.case_name + ": resource ceiling exceeded: " + e.what() + "\n", exit_resource};
        o.json["presentation"] = {{"name", c.case_name}};
        o.json["error"] = e.what();
        return o;
    }
}

inline Outcome run_all(const Config& c) {
    if (!c.case_name.empty() || !c.input.empty()) throw InvalidArgument("--all takes no --case or --input");
    std::vector<std::future<Outcome>> jobs;
    for (const auto& name : builtin_names()) {
        Config one = c;
        one.case_name = name;
        jobs.push_back(std::async(std::launch::async, [one] { return guarded_report(one); }));
    }
    Outcome all{header("report"), "", exit_ok};
    Json reports = Json::array();
    for (auto& j : jobs) {
        auto o = j.get();
        o.json.erase("schema_version");
        o.json.erase("tool");
        o.json.erase("version");
        o.json.erase("command");
        reports.push_back(std::move(o.json));
        all.text += o.text + "\n";
        all.code = worst(all.code, o.code);
    }
    all.json["reports"] = reports;
    return all;
}

inline void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--case", c.case_name, "builtin presentation")->check(CLI::IsMember(builtin_names()));
    sub->add_option("--input", c.input, ".pres file");
    sub->add_option("--order", c.order, "monomial order")->check(CLI::IsMember({"lex", "wgrlex", "wgrevlex"}));
    sub->add_option("--truncate", c.truncate, "truncation weight, auto or none");
    sub->add_option("--max-pairs", c.limits.max_pairs, "S-pair ceiling (env RIGIDITY_MAX_PAIRS)");
    sub->add_option("--max-terms", c.limits.max_terms, "term ceiling (env RIGIDITY_MAX_TERMS)");
    sub->add_option("--solve-max-pairs", c.limits.solve_max_pairs,
                    "S-pair ceiling in the solver (env RIGIDITY_SOLVE_MAX_PAIRS)");
    sub->add_option("--max-candidates", c.limits.max_candidates, "rational-root candidates (env RIGIDITY_MAX_CANDIDATES)");
    sub->add_option("--max-rho-steps", c.limits.max_rho_steps, "factorization steps (env RIGIDITY_MAX_RHO_STEPS)");
    sub->add_option("--max-quotient-dim", c.limits.max_quotient_dim,
                    "quotient dimension for lex conversion (env RIGIDITY_MAX_QUOTIENT_DIM)");
    sub->add_flag("--json", c.json, "emit the JSON report");
    sub->add_option("--out", c.out, "write output to a file");
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Gröbner-basis toolkit for endomorphisms of cohomology rings", "rigidity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));
    std::vector<std::pair<std::string, std::string>> subs{
        {"gb", "compute a Gröbner basis"},
        {"nf", "normal form of a polynomial"},
        {"basis", "monomials of a given weight"},
        {"constraints", "emit the endomorphism constraint system"},
        {"solve", "solve the system at k = p and classify"},
        {"verify", "verify a coefficient family symbolically in k"},
        {"dim", "standard-monomial count"},
        {"report", "full pipeline"},
    };
    for (const auto& [name, help] : subs) {
        auto* sub = app.add_subcommand(name, help);
        detail::add_common(sub, c);
        sub->callback([&c, name = name] { c.command = name; });
        if (name == "nf") sub->add_option("--poly", c.poly, "polynomial text")->required();
        if (name == "basis") sub->add_option("--weight", c.weight, "weight")->required();
        if (name == "solve") sub->add_option("--k", c.ks, "value of k (repeatable)")->required();
        if (name == "report") {
            sub->add_option("--k", c.ks, "values of k to solve at (default 2)");
            sub->add_flag("--all", c.all, "every builtin presentation");
        }
        if (name == "verify") sub->add_option("--family", c.family, "adams, tau or a family file")->required();
    }

    try {
        detail::apply_env(c.limits);
    } catch (const Error& e) {
        err << "rigidity: error: " << e.what() << "\n";
        return exit_usage;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    detail::Outcome o;
    try {
        o = c.all ? detail::run_all(c) : detail::run_single(c);
    } catch (const ResourceLimitExceeded& e) {
        err << "rigidity: resource ceiling exceeded: " << e.what() << "\n";
        return exit_resource;
    } catch (const Error& e) {
        err << "rigidity: error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "rigidity: error: " << e.what() << "\n";
        return exit_usage;
    }

    std::string payload = c.json ? o.json.dump(2) + "\n" : o.text;
    if (c.out.empty()) {
        out << payload;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!(f << payload)) {
            err << "rigidity: error: cannot write '" << c.out << "'\n";
            return exit_usage;
        }
    }
    return o.code;
}

}  // namespace rigidity::cli
