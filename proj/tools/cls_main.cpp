// Command-line front end: verification suites, submodule closures, the
// irreducibility probe, derivation checks, and table classification.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input error.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cls/derivations.hpp"
#include "cls/expr.hpp"
#include "cls/loop_algebra.hpp"
#include "cls/modules.hpp"
#include "cls/report.hpp"
#include "cls/specfile.hpp"
#include "cls/submodules.hpp"

using namespace cls;

namespace {

struct CliError {
    std::string message;
};

class Flags {
public:
    Flags(int argc, char** argv, int start, std::set<std::string> allowed)
        : allowed_(std::move(allowed)) {
        for (int i = start; i < argc; ++i) {
            std::string arg = argv[i];
            if (arg.rfind("--", 0) != 0) throw CliError{"unexpected argument: " + arg};
            std::string name = arg.substr(2);
            if (!allowed_.count(name)) throw CliError{"unknown flag: " + arg};
            if (i + 1 >= argc) throw CliError{"flag " + arg + " needs a value"};
            values_[name].push_back(argv[++i]);
        }
    }

    bool has(const std::string& name) const { return values_.count(name) > 0; }

    std::string get(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end() || it->second.empty()) throw CliError{"missing required flag --" + name};
        return it->second.back();
    }

    std::string get_or(const std::string& name, const std::string& fallback) const {
        return has(name) ? get(name) : fallback;
    }

    std::vector<std::string> get_all(const std::string& name) const {
        auto it = values_.find(name);
        return it == values_.end() ? std::vector<std::string>{} : it->second;
    }

    int get_int(const std::string& name) const { return to_int(name, get(name)); }
    int get_int_or(const std::string& name, int fallback) const {
        return has(name) ? get_int(name) : fallback;
    }

    long get_long_or(const std::string& name, long fallback) const {
        if (!has(name)) return fallback;
        return static_cast<long>(to_int(name, get(name)));
    }

private:
    static int to_int(const std::string& name, const std::string& text) {
        try {
            size_t used = 0;
            int value = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            throw CliError{"flag --" + name + " expects an integer, got `" + text + "`"};
        }
    }

    std::set<std::string> allowed_;
    std::map<std::string, std::vector<std::string>> values_;
};

std::string echo(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

Poly param_value(const std::string& text, VarId symbol) {
    if (text == "sym") return pvar(symbol);
    return Poly(Rational::from_string(text));
}

// ---- [module] section / module flags ----

ModuleSpec module_from_fields(const std::string& family_name_text, const std::string& a_text,
                              const std::string& b_text, const std::string& c_text,
                              const std::string& pattern_text, const std::string& pattern_lo_text) {
    Family family = family_from_name(family_name_text);
    if (!family_patterned(family) && a_text.empty())
        throw CliError{family_name(family) + " needs a = <rational|sym>"};
    if (b_text.empty()) throw CliError{family_name(family) + " needs b = <rational|sym>"};
    FamilyTag tag;
    tag.family = family;
    tag.a = a_text.empty() ? Poly(0) : param_value(a_text, VarId::ParA);
    tag.b = param_value(b_text, VarId::ParB);
    if (!c_text.empty()) tag.c = param_value(c_text, VarId::ParC);
    if (!pattern_text.empty()) {
        int lo = 0;
        if (!pattern_lo_text.empty()) {
            try {
                lo = std::stoi(pattern_lo_text);
            } catch (const std::exception&) {
                throw CliError{"pattern_lo expects an integer, got `" + pattern_lo_text + "`"};
            }
        }
        tag.pattern = Pattern::parse(pattern_text, lo);
    }
    return ModuleSpec::make(tag);
}

GenKind gen_kind_from(const std::string& s) {
    if (s == "L") return GenKind::L;
    if (s == "G") return GenKind::G;
    throw CliError{"rule name must start with L or G: " + s};
}

ModuleSpec apply_table_edits(ModuleSpec spec, const SpecFile& file) {
    if (file.has("module", "rescale_y"))
        spec = spec.rescale_odd(Rational::from_string(file.get("module", "rescale_y")));
    if (file.has("module", "mutate_rule")) {
        std::string rule = file.get("module", "mutate_rule");  // Lx | Ly | Gx | Gy
        if (rule.size() != 2) throw CliError{"mutate_rule must be one of Lx Ly Gx Gy"};
        GenKind k = gen_kind_from(rule.substr(0, 1));
        BasisKind w = rule[1] == 'x' ? BasisKind::x : BasisKind::y;
        int case_index = 0;
        if (file.has("module", "mutate_case")) case_index = std::stoi(file.get("module", "mutate_case"));
        Poly replacement = parse_poly(file.get("module", "mutate_poly"));
        spec = spec.with_mutation(k, w, case_index, replacement);
    }
    return spec;
}

ModuleSpec module_from_file(const SpecFile& file) {
    if (!file.has_section("module")) throw CliError{"spec file has no [module] section"};
    ModuleSpec spec = module_from_fields(
        file.get("module", "family"), file.get_or("module", "a", ""), file.get_or("module", "b", ""),
        file.get_or("module", "c", ""), file.get_or("module", "pattern", ""),
        file.get_or("module", "pattern_lo", ""));
    return apply_table_edits(std::move(spec), file);
}

ModuleSpec module_from_flags(const Flags& flags) {
    if (flags.has("file")) return module_from_file(SpecFile::load(flags.get("file")));
    return module_from_fields(flags.get("family"), flags.get_or("a", ""), flags.get_or("b", ""),
                              flags.get_or("c", ""), flags.get_or("pattern", ""),
                              flags.get_or("pattern-lo", ""));
}

void add_axiom_lines(Report& report, const std::string& id, const AxiomReport& r) {
    if (r.failed > 0) {
        const CheckItem* bad = r.first_failure();
        report.add(id, Report::Status::FAIL, r.failed,
                   "first nonzero residual at " + bad->id + ": " + bad->witness);
    } else {
        report.add(id, Report::Status::PASS, r.checked);
    }
    if (r.skipped > 0)
        report.add(id + "-window-truncated", Report::Status::SKIPPED, r.skipped,
                   "combinations outside the window were skipped, not asserted");
}

// ---- commands ----

int cmd_verify_algebra(int argc, char** argv, const Flags& flags) {
    int window = flags.get_int("window");
    if (window < 0) throw CliError{"--window must be >= 0"};
    int weight_max = flags.get_int_or("loop-weight-max", 2);
    int index_max = flags.get_int_or("loop-index-max", 1);

    Report report(echo(argc, argv));

    std::vector<GenId> gens;
    for (int i = -window; i <= window; ++i) {
        gens.push_back({GenKind::L, i});
        gens.push_back({GenKind::G, i});
    }

    int skew_bad = 0, jacobi_bad = 0, grading_bad = 0;
    std::string witness;
    for (const GenId& x : gens)
        for (const GenId& y : gens) {
            if (!check_skew(x, y).is_zero()) {
                ++skew_bad;
                if (witness.empty())
                    witness = "skew(" + gen_name(x) + "," + gen_name(y) + ") = " +
                              print_lambda_valued(check_skew(x, y));
            }
            if (!check_grading(x, y)) ++grading_bad;
        }
    for (const GenId& x : gens)
        for (const GenId& y : gens)
            for (const GenId& z : gens)
                if (!check_jacobi(x, y, z).is_zero()) ++jacobi_bad;

    int n = static_cast<int>(gens.size());
    report.add("skew", skew_bad ? Report::Status::FAIL : Report::Status::PASS,
               skew_bad ? skew_bad : n * n, witness);
    report.add("grading", grading_bad ? Report::Status::FAIL : Report::Status::PASS,
               grading_bad ? grading_bad : n * n);
    report.add("jacobi", jacobi_bad ? Report::Status::FAIL : Report::Status::PASS,
               jacobi_bad ? jacobi_bad : n * n * n);

    std::vector<LoopGenId> loop_gens;
    for (int a = -weight_max; a <= weight_max; ++a)
        for (int i = -index_max; i <= index_max; ++i) loop_gens.push_back(loop_L(a, i));
    for (int num = -weight_max; num < weight_max; ++num)
        for (int i = -index_max; i <= index_max; ++i)
            loop_gens.push_back(loop_G(Rational(num) + frac(1, 2), i));

    int loop_skew_bad = 0, loop_jacobi_bad = 0;
    for (const auto& x : loop_gens)
        for (const auto& y : loop_gens) {
            if (!loop_skew_residual(x, y).is_zero()) ++loop_skew_bad;
            for (const auto& z : loop_gens)
                if (!loop_jacobi_residual(x, y, z).is_zero()) ++loop_jacobi_bad;
        }
    int m = static_cast<int>(loop_gens.size());
    report.add("loop-skew", loop_skew_bad ? Report::Status::FAIL : Report::Status::PASS,
               loop_skew_bad ? loop_skew_bad : m * m);
    report.add("loop-jacobi", loop_jacobi_bad ? Report::Status::FAIL : Report::Status::PASS,
               loop_jacobi_bad ? loop_jacobi_bad : m * m * m);

    report.print(std::cout);
    return report.exit_code();
}

int cmd_verify_module(int argc, char** argv, const Flags& flags) {
    int window = flags.get_int("window");
    ModuleSpec spec = module_from_flags(flags);

    Report report(echo(argc, argv));
    report.note("module: " + spec.tag().str());
    add_axiom_lines(report, "module-axioms", check_module_axioms(spec, {-window, window}));
    report.print(std::cout);
    return report.exit_code();
}

std::vector<ModuleElement> seeds_from(const Flags& flags) {
    std::vector<ModuleElement> seeds;
    for (const std::string& text : flags.get_all("seed")) seeds.push_back(parse_module_element(text));
    if (flags.has("file")) {
        SpecFile file = SpecFile::load(flags.get("file"));
        for (const std::string& text : file.get_all("seed", "element"))
            seeds.push_back(parse_module_element(text));
    }
    if (seeds.empty()) throw CliError{"no seed elements given (use --seed or a [seed] section)"};
    return seeds;
}

int cmd_submodule(int argc, char** argv, const Flags& flags) {
    ModuleSpec spec = module_from_flags(flags);
    if (spec.symbolic_params())
        throw CliError{"submodule closure needs numeric parameters (gcd over Q[d]); got symbolic ones"};
    std::vector<ModuleElement> seeds = seeds_from(flags);

    std::optional<GradeWindow> window;
    if (flags.has("win-lo") || flags.has("win-hi"))
        window = GradeWindow{flags.get_int("win-lo"), flags.get_int("win-hi")};

    Report report(echo(argc, argv));
    report.note("module: " + spec.tag().str());
    ClosureResult closure = close_under_actions(spec, seeds, {}, window);
    report.note("basis = " + closure.basis.str());
    report.add("closure", Report::Status::PASS, static_cast<int>(closure.basis.rows().size()),
               "fixed point after " + std::to_string(closure.passes) + " pass(es)");
    if (closure.skipped > 0)
        report.add("closure-window-truncated", Report::Status::SKIPPED, closure.skipped,
                   "boundary actions skipped; verdict is window-truncated");
    report.print(std::cout);
    return report.exit_code();
}

int cmd_irreducible(int argc, char** argv, const Flags& flags) {
    ModuleSpec spec = module_from_flags(flags);
    if (spec.symbolic_params())
        throw CliError{"the probe needs numeric parameters (gcd over Q[d]); got symbolic ones"};
    int trials = flags.get_int_or("trials", 20);
    int max_deg = flags.get_int_or("max-deg", 3);
    uint64_t rng_seed = static_cast<uint64_t>(flags.get_long_or("rng-seed", 1));

    Report report(echo(argc, argv));
    report.note("module: " + spec.tag().str());
    report.note("rng_seed = " + std::to_string(rng_seed));
    ProbeResult probe = irreducibility_probe(spec, trials, max_deg, rng_seed);
    if (probe.all_full) {
        report.note("verdict = AllFull");
    } else {
        report.note("verdict = FoundProper " + probe.proper.front().str());
    }
    report.add("probe", Report::Status::PASS, trials,
               probe.all_full ? "every closure is the full module"
                              : std::to_string(probe.proper.size()) + " distinct proper closure(s)");
    report.print(std::cout);
    return report.exit_code();
}

DerivationSpec derivation_from_file(const SpecFile& file, int window) {
    if (!file.has_section("derivation")) throw CliError{"spec file has no [derivation] section"};
    std::string parity_text = file.get("derivation", "parity");
    Parity parity;
    if (parity_text == "even")
        parity = Parity::even;
    else if (parity_text == "odd")
        parity = Parity::odd;
    else
        throw CliError{"parity must be even or odd"};
    int degree = std::stoi(file.get("derivation", "degree"));

    int span = 2 * window;
    if (file.has("derivation", "f0") || file.has("derivation", "g0")) {
        std::string key = parity == Parity::even ? "f0" : "g0";
        if (!file.has("derivation", key))
            throw CliError{std::string("seed key ") + key + " required for this parity"};
        Poly seed = parse_poly(file.get("derivation", key));
        return extend_from_seed(parity, degree, seed, -span, span);
    }

    DerivationSpec d;
    d.parity = parity;
    d.degree = degree;
    for (const auto& [key, value] : file.entries("derivation")) {
        if (key.size() < 4 || (key[0] != 'f' && key[0] != 'g') || key[1] != '(' || key.back() != ')')
            continue;
        int index = std::stoi(key.substr(2, key.size() - 3));
        (key[0] == 'f' ? d.f : d.g)[index] = parse_poly(value);
    }
    if (d.f.empty() && d.g.empty()) throw CliError{"derivation section defines no coefficients"};
    for (const auto& [i, p] : d.f)
        if (!d.g.count(i)) d.g[i] = Poly();
    for (const auto& [i, p] : d.g)
        if (!d.f.count(i)) d.f[i] = Poly();
    return d;
}

int cmd_derivation(int argc, char** argv, const Flags& flags) {
    int window = flags.get_int("window");
    SpecFile file = SpecFile::load(flags.get("file"));
    DerivationSpec d;
    try {
        d = derivation_from_file(file, window);
    } catch (const SeedNotDivisible& e) {
        // A mathematical verdict about the seed, not a malformed input.
        Report report(echo(argc, argv));
        report.add("seed-divisibility", Report::Status::FAIL, 1, e.what());
        report.print(std::cout);
        return report.exit_code();
    }

    Report report(echo(argc, argv));
    report.note("parity = " + std::string(d.parity == Parity::even ? "even" : "odd") +
                ", degree = " + std::to_string(d.degree));
    AxiomReport check = check_derivation(d, {-window, window});
    add_axiom_lines(report, "derivation-identity", check);

    if (check.all_ok()) {
        try {
            AlgebraElement gen = inner_generator(d);
            report.note("inner = " + print_algebra_element(gen));
            report.add("inner-generator", Report::Status::PASS, 1);
        } catch (const NotInner& e) {
            report.add("inner-generator", Report::Status::FAIL, 1, e.what());
        }
    }
    report.print(std::cout);
    return report.exit_code();
}

int cmd_classify(int argc, char** argv, const Flags& flags) {
    ModuleSpec spec = module_from_file(SpecFile::load(flags.get("file")));
    Report report(echo(argc, argv));
    try {
        FamilyTag tag = classify_rank2(spec);
        report.note(tag.str());
        report.add("classify", Report::Status::PASS, 1);
    } catch (const NoMatch& e) {
        report.add("classify", Report::Status::FAIL, 1, e.what());
    }
    report.print(std::cout);
    return report.exit_code();
}

int usage(std::ostream& os, int code) {
    os << "usage:\n"
          "  cls verify algebra --window N [--loop-weight-max W] [--loop-index-max K]\n"
          "  cls verify module (--file F | --family NAME --a A --b B [--c C]\n"
          "                     [--pattern BITS --pattern-lo LO]) --window N\n"
          "  cls submodule (--file F | --family ... ) --seed \"(d+2)*x\" [--win-lo LO --win-hi HI]\n"
          "  cls irreducible (--file F | --family ...) [--trials N] [--max-deg D] [--rng-seed S]\n"
          "  cls derivation --file F --window N\n"
          "  cls classify --file F\n"
          "values: a/b/c take rationals like 3, -1/2, or `sym`; family is one of\n"
          "M Mprime Mg Mgprime MA MAprime V VA.\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    const std::set<std::string> spec_flags = {"file", "family", "a", "b", "c", "pattern", "pattern-lo"};
    auto with_spec = [&](std::initializer_list<std::string> extra) {
        std::set<std::string> s = spec_flags;
        s.insert(extra);
        return s;
    };
    try {
        if (argc < 2) return usage(std::cerr, 2);
        std::string cmd = argv[1];
        if (cmd == "help" || cmd == "--help" || cmd == "-h") return usage(std::cout, 0);

        if (cmd == "verify") {
            if (argc < 3) return usage(std::cerr, 2);
            std::string what = argv[2];
            if (what == "algebra") {
                Flags flags(argc, argv, 3, {"window", "loop-weight-max", "loop-index-max"});
                return cmd_verify_algebra(argc, argv, flags);
            }
            if (what == "module") {
                Flags flags(argc, argv, 3, with_spec({"window"}));
                return cmd_verify_module(argc, argv, flags);
            }
            return usage(std::cerr, 2);
        }
        if (cmd == "submodule") {
            Flags flags(argc, argv, 2, with_spec({"seed", "win-lo", "win-hi"}));
            return cmd_submodule(argc, argv, flags);
        }
        if (cmd == "irreducible") {
            Flags flags(argc, argv, 2, with_spec({"trials", "max-deg", "rng-seed"}));
            return cmd_irreducible(argc, argv, flags);
        }
        if (cmd == "derivation") {
            Flags flags(argc, argv, 2, {"file", "window"});
            return cmd_derivation(argc, argv, flags);
        }
        if (cmd == "classify") {
            Flags flags(argc, argv, 2, {"file"});
            return cmd_classify(argc, argv, flags);
        }
        return usage(std::cerr, 2);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NonTermination& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
