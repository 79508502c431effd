#include "ringgb/commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringgb/border.hpp"
#include "ringgb/error.hpp"
#include "ringgb/groebner.hpp"
#include "ringgb/parser.hpp"
#include "ringgb/quotient.hpp"

namespace ringgb {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string file;
    std::optional<int> cap;
    bool text = false;
    bool check = false;
};

struct Loaded {
    ProblemFile pf;
    int nvars = 0;
    std::vector<Polynomial> gens;
};

Loaded load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::IoError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Loaded L;
    L.pf = parse_problem_file(ss.str());
    L.nvars = static_cast<int>(L.pf.vars.size());
    L.gens = L.pf.polynomials;
    if (L.pf.has_lattice_vectors)
        for (auto& p : lattice_ideal_generators(L.pf.ring, L.nvars, L.pf.lattice_vectors))
            L.gens.push_back(std::move(p));
    return L;
}

std::string poly_str(const Loaded& L, const Polynomial& f) {
    return to_string(f, L.pf.order, L.pf.vars);
}

std::vector<std::string> basis_strings(const Loaded& L, const GroebnerBasis& G) {
    std::vector<std::string> out;
    out.reserve(G.elements.size());
    for (const auto& g : G.elements) out.push_back(poly_str(L, g));
    return out;
}

std::vector<std::string> mono_strings(const Loaded& L, const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(mono_to_string(m, L.pf.vars));
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

GroebnerBasis computed_basis(const Loaded& L) {
    return groebner_basis_of(L.pf.ring, L.nvars, L.gens, L.pf.order);
}

std::string render(const ordered_json& j, bool text) {
    if (!text) return j.dump(2) + "\n";
    std::string out;
    for (const auto& [key, val] : j.items()) {
        out += key;
        out += ": ";
        if (val.is_string()) {
            out += val.get<std::string>();
        } else if (val.is_array()) {
            std::vector<std::string> parts;
            for (const auto& v : val)
                parts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            out += join(parts);
        } else {
            out += val.dump();
        }
        out += "\n";
    }
    return out;
}

ordered_json cmd_gb(const Options& opt, bool short_form) {
    Loaded L = load(opt.file);
    GroebnerBasis G = computed_basis(L);
    if (short_form) G = short_reduce(G);
    ordered_json j;
    j["basis"] = basis_strings(L, G);
    j["certification"] = certification_name(G.certification);
    if (opt.check) j["verified"] = is_groebner_basis(G);
    return j;
}

ordered_json cmd_is_free(const Options& opt) {
    Loaded L = load(opt.file);
    GroebnerBasis S = short_reduce(computed_basis(L));
    ordered_json j;
    j["free"] = is_free(S);
    j["short_reduced_basis"] = basis_strings(L, S);
    return j;
}

ordered_json cmd_module_basis(const Options& opt) {
    Loaded L = load(opt.file);
    GroebnerBasis S = short_reduce(computed_basis(L));
    StandardMonomialSet basis = module_basis(S, opt.cap);
    ordered_json j;
    j["free"] = is_free(S);
    if (basis.complete)
        j["rank"] = basis.monomials.size();
    else
        j["rank"] = "infinite";
    j["basis"] = mono_strings(L, basis.monomials);
    j["complete"] = basis.complete;
    return j;
}

ordered_json cmd_border_basis(const Options& opt) {
    Loaded L = load(opt.file);
    if (!L.pf.has_order_ideal)
        raise(Errc::SyntaxError, "border-basis needs an [order_ideal] section");
    OrderIdealSpec O = validate_order_ideal(L.nvars, L.pf.order_ideal);
    GroebnerBasis S = short_reduce(computed_basis(L));
    BorderPrebasis B = border_basis_of(S, O);
    ordered_json j;
    j["order_ideal"] = mono_strings(L, O.monomials);
    j["border"] = mono_strings(L, O.border);
    std::vector<std::string> elems;
    for (const auto& b : B.elements) elems.push_back(poly_str(L, b));
    j["basis"] = elems;
    if (opt.check) j["verified"] = is_border_basis(B, L.gens, L.pf.order);
    return j;
}

ordered_json cmd_nf(const Options& opt) {
    Loaded L = load(opt.file);
    if (L.pf.probes.empty()) raise(Errc::SyntaxError, "nf needs a [probe] section");
    GroebnerBasis S = short_reduce(computed_basis(L));
    ordered_json j;
    j["basis"] = basis_strings(L, S);
    ordered_json probes = ordered_json::array();
    for (const auto& p : L.pf.probes) {
        NormalFormResult nf = normal_form(p, S);
        ordered_json entry;
        entry["probe"] = poly_str(L, p);
        entry["remainder"] = poly_str(L, nf.remainder);
        std::vector<std::string> qs;
        for (const auto& q : nf.quotients) qs.push_back(poly_str(L, q));
        entry["quotients"] = qs;
        probes.push_back(entry);
    }
    j["probes"] = probes;
    return j;
}

ordered_json cmd_strong_check(const Options& opt) {
    Loaded L = load(opt.file);
    GroebnerBasis cand = wrap_basis(L.pf.ring, L.nvars, L.pf.order, L.gens);
    ordered_json j;
    bool ok = is_groebner_basis(cand);
    j["groebner"] = ok;
    if (!ok) {
        j["strong"] = false;
        j["counterexample"] = nullptr;
        return j;
    }
    cand.certification = Certification::Groebner;
    StrongCheckResult res = strong_basis_check(cand, L.pf.probes);
    j["strong"] = res.strong;
    if (res.counterexample)
        j["counterexample"] = poly_str(L, *res.counterexample);
    else
        j["counterexample"] = nullptr;
    if (L.pf.ring.kind == RingDescriptor::Kind::PolyOverField) {
        StrongReducedResult sr = strong_reduced_check(cand);
        ordered_json r;
        r["holds"] = sr.holds;
        if (sr.failed_condition)
            r["failed_condition"] = *sr.failed_condition;
        else
            r["failed_condition"] = nullptr;
        j["strong_reduced"] = r;
    }
    return j;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"Groebner bases over Z, Q, GF(p), and k[theta]"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--cap", opt.cap, "degree cap for infinite quotients");
    app.add_flag("--check", opt.check, "re-verify the result before reporting");
    auto* text_flag = app.add_flag("--text", "plain text output");
    app.add_flag("--json", "JSON output (default)")->excludes(text_flag);

    std::vector<std::pair<const char*, const char*>> specs = {
        {"gb", "compute a Groebner basis of the input ideal"},
        {"short-reduce", "compute the short reduced Groebner basis"},
        {"is-free", "decide freeness of the quotient module"},
        {"module-basis", "standard monomial basis of the quotient"},
        {"border-basis", "border basis relative to the [order_ideal] section"},
        {"nf", "normal form of each [probe] polynomial"},
        {"strong-check", "strength of the input polynomials as a basis"},
    };
    for (auto& [name, desc] : specs)
        app.add_subcommand(name, desc)->add_option("file", opt.file, "problem file")->required();

    std::vector<const char*> argv;
    argv.push_back("ringgb");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {1, std::string(e.what()) + "\n"};
    }
    opt.text = text_flag->count() > 0;

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        ordered_json j;
        if (cmd == "gb")
            j = cmd_gb(opt, false);
        else if (cmd == "short-reduce")
            j = cmd_gb(opt, true);
        else if (cmd == "is-free")
            j = cmd_is_free(opt);
        else if (cmd == "module-basis")
            j = cmd_module_basis(opt);
        else if (cmd == "border-basis")
            j = cmd_border_basis(opt);
        else if (cmd == "nf")
            j = cmd_nf(opt);
        else
            j = cmd_strong_check(opt);
        return {0, render(j, opt.text)};
    } catch (const Error& e) {
        ordered_json j;
        j["error"] = errc_name(e.code());
        j["message"] = e.what();
        if (e.line() > 0) {
            j["line"] = e.line();
            j["column"] = e.column();
        }
        int code = errc_is_parse(e.code()) ? 1 : 2;
        if (opt.text) {
            std::string out = std::string("error: ") + errc_name(e.code()) + ": " + e.what();
            if (e.line() > 0)
                out += " (line " + std::to_string(e.line()) + ", column " +
                       std::to_string(e.column()) + ")";
            return {code, out + "\n"};
        }
        return {code, j.dump(2) + "\n"};
    }
}

} // namespace ringgb
