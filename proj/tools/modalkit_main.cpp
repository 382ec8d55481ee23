// modalkit — census, frame, game, numbers, and sample subcommands over the
// library. stdout carries only the payload; diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modalkit/census.hpp"
#include "modalkit/errors.hpp"
#include "modalkit/games.hpp"
#include "modalkit/json_io.hpp"
#include "modalkit/modal.hpp"
#include "modalkit/partitions.hpp"
#include "modalkit/relations.hpp"

namespace {

using namespace modalkit;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

// Flat ordered report rendered as text lines, one JSON object, or a
// header-plus-row CSV. Counts stay decimal strings in JSON so nothing is
// squeezed through a 53-bit double.
class Report {
public:
    void add_text(std::string key, std::string value) {
        add(std::move(key), std::move(value), Kind::text);
    }
    void add_count(std::string key, const BigNat& value) {
        add(std::move(key), value.to_decimal(), Kind::text);
    }
    void add_int(std::string key, long long value) {
        add(std::move(key), std::to_string(value), Kind::raw);
    }
    void add_real(std::string key, double value) {
        add(std::move(key), format_real(value), Kind::raw);
    }
    void add_bool(std::string key, bool value) {
        add(std::move(key), value ? "true" : "false", Kind::raw);
    }

    void emit(const std::string& format, std::ostream& out) const {
        if (format == "json") {
            out << "{";
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                const auto& f = fields_[i];
                out << (i ? ", " : "") << '"' << json_escape(f.key) << "\": ";
                if (f.kind == Kind::raw)
                    out << f.value;
                else
                    out << '"' << json_escape(f.value) << '"';
            }
            out << "}\n";
        } else if (format == "csv") {
            for (std::size_t i = 0; i < fields_.size(); ++i)
                out << (i ? "," : "") << csv_escape(fields_[i].key);
            out << "\n";
            for (std::size_t i = 0; i < fields_.size(); ++i)
                out << (i ? "," : "") << csv_escape(fields_[i].value);
            out << "\n";
        } else {
            for (const auto& f : fields_) out << f.key << ": " << f.value << "\n";
        }
    }

private:
    enum class Kind { text, raw };
    struct Field {
        std::string key, value;
        Kind kind;
    };
    std::vector<Field> fields_;

    void add(std::string key, std::string value, Kind kind) {
        fields_.push_back({std::move(key), std::move(value), kind});
    }
};

struct Options {
    std::string format = "text";
    std::uint64_t budget = default_scan_budget;
};

// ---------------------------------------------------------------- census

struct CensusArgs {
    int n = 0;
    std::string cls;
    bool labeled = false, unlabeled = false, both = false;
};

BigNat census_second_route_labeled(int n, StructureClass c, std::uint64_t budget,
                                   std::string& method) {
    switch (c) {
        case StructureClass::relation: {
            method = "brute-force";
            BigNat total;
            for_each_labeled(n, c, budget, [&](const Frame&) { total += BigNat(1); });
            return total;
        }
        case StructureClass::strict_order:
            method = "bijection";  // reflexive closure onto partial orders
            return count_labeled(n, StructureClass::partial_order, budget);
        case StructureClass::partial_order:
            method = "bijection";
            return count_labeled(n, StructureClass::strict_order, budget);
        case StructureClass::equivalence:
            method = "formula";  // Bell recurrence
            return bell(n);
    }
    throw std::logic_error("unreachable");
}

BigNat census_second_route_unlabeled(int n, StructureClass c, std::uint64_t budget,
                                     std::string& method) {
    switch (c) {
        case StructureClass::relation:
            method = "formula";  // cycle-index sum
            return a_exact(n);
        case StructureClass::strict_order:
            method = "bijection";
            return count_unlabeled(n, StructureClass::partial_order, budget);
        case StructureClass::partial_order:
            method = "bijection";
            return count_unlabeled(n, StructureClass::strict_order, budget);
        case StructureClass::equivalence: {
            method = "brute-force";
            std::set<CanonicalKey> keys;
            for_each_labeled(n, c, budget,
                             [&](const Frame& f) { keys.insert(canonical_key(f)); });
            return BigNat((std::uint64_t)keys.size());
        }
    }
    throw std::logic_error("unreachable");
}

void run_census(const Options& opt, const CensusArgs& args) {
    const auto cls = structure_class_from_string(args.cls);
    if (!cls) throw input_error("unknown structure class: " + args.cls);
    bool labeled = args.labeled, unlabeled = args.unlabeled;
    if (!labeled && !unlabeled) labeled = true;

    Report report;
    report.add_int("n", args.n);
    report.add_text("class", args.cls);
    if (labeled) {
        const BigNat value = count_labeled(args.n, *cls, opt.budget);
        report.add_count("labeled", value);
        report.add_text("labeled_method",
                        *cls == StructureClass::relation ? "formula" : "brute-force");
        if (args.both) {
            std::string method;
            const BigNat other = census_second_route_labeled(args.n, *cls, opt.budget, method);
            if (other != value)
                throw consistency_error("labeled census routes disagree: " + value.to_decimal() +
                                        " vs " + other.to_decimal() + " (" + method + ")");
            report.add_text("labeled_cross_method", method);
        }
    }
    if (unlabeled) {
        const BigNat value = count_unlabeled(args.n, *cls, opt.budget);
        report.add_count("unlabeled", value);
        report.add_text("unlabeled_method",
                        *cls == StructureClass::equivalence ? "bijection" : "brute-force");
        if (args.both) {
            std::string method;
            const BigNat other = census_second_route_unlabeled(args.n, *cls, opt.budget, method);
            if (other != value)
                throw consistency_error("unlabeled census routes disagree: " + value.to_decimal() +
                                        " vs " + other.to_decimal() + " (" + method + ")");
            report.add_text("unlabeled_cross_method", method);
        }
    }
    if (args.both) report.add_text("verified", "both routes agree");
    report.emit(opt.format, std::cout);
}

// ----------------------------------------------------------------- frame

struct FrameArgs {
    std::string input;
    std::string audit;
    int n = -1;
    std::vector<std::string> checks;
    std::string validates;
};

std::string edges_text(const Frame& f) {
    std::string out = "[";
    bool first = true;
    for (auto [u, v] : f.edges()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    }
    return out + "]";
}

void run_frame_report(const Options& opt, const FrameArgs& args) {
    const Frame f = frame_from_json(read_file(args.input));
    Report report;
    report.add_int("worlds", f.worlds());

    std::vector<std::string> checks = args.checks;
    if (checks.empty())
        checks = {"reflexive",  "antireflexive", "symmetric", "antisymmetric",
                  "transitive", "euclidean",     "equivalence", "strict-partial-order",
                  "partial-order", "K", "T", "4", "5", "B", "s5"};

    const std::map<std::string, FormulaPtr> axioms = {
        {"K", axiom_k()}, {"T", axiom_t()}, {"4", axiom_4()}, {"5", axiom_5()}, {"B", axiom_b()}};

    for (const auto& check : checks) {
        if (auto rc = relation_class_from_string(check)) {
            report.add_bool(check, has_property(f, *rc));
        } else if (auto it = axioms.find(check); it != axioms.end()) {
            report.add_bool("validates_" + check, frame_validates(f, it->second, opt.budget));
        } else if (check == "s5") {
            report.add_bool("s5", is_s5(f));
        } else {
            throw input_error("unknown check: " + check);
        }
    }
    if (!args.validates.empty()) {
        const FormulaPtr formula = parse_formula(args.validates);
        report.add_text("formula", to_text(formula));
        report.add_bool("validates", frame_validates(f, formula, opt.budget));
    }
    report.emit(opt.format, std::cout);
}

void run_frame_audit(const Options& opt, const FrameArgs& args) {
    if (args.n < 0) throw input_error("--audit needs --n");
    const std::uint64_t cells = (std::uint64_t)args.n * (std::uint64_t)args.n;
    if (cells >= 63 || (1ull << cells) > opt.budget)
        throw limit_error("audit sweep needs 2^" + std::to_string(cells) +
                          " frames, budget is " + std::to_string(opt.budget));

    // a counterexample is a frame where the audited claim breaks
    std::function<bool(const Frame&)> violates;
    if (args.audit == "euclidean-implies-transitive") {
        violates = [](const Frame& f) {
            return has_property(f, RelationClass::euclidean) &&
                   !has_property(f, RelationClass::transitive);
        };
    } else if (args.audit == "reflexive-euclidean-implies-equivalence") {
        violates = [](const Frame& f) {
            return has_property(f, RelationClass::reflexive) &&
                   has_property(f, RelationClass::euclidean) &&
                   !has_property(f, RelationClass::equivalence);
        };
    } else if (args.audit == "t-and-5-equals-equivalence") {
        violates = [&](const Frame& f) {
            const bool axiomatic = frame_validates(f, axiom_t(), opt.budget) &&
                                   frame_validates(f, axiom_5(), opt.budget);
            return axiomatic != has_property(f, RelationClass::equivalence);
        };
    } else if (args.audit == "five-implies-four") {
        violates = [&](const Frame& f) {
            return frame_validates(f, axiom_5(), opt.budget) &&
                   !frame_validates(f, axiom_4(), opt.budget);
        };
    } else {
        throw input_error(
            "unknown audit: " + args.audit +
            " (expected euclidean-implies-transitive, "
            "reflexive-euclidean-implies-equivalence, t-and-5-equals-equivalence, "
            "or five-implies-four)");
    }

    std::uint64_t counterexamples = 0;
    std::optional<Frame> first;
    const int n = args.n;
    for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
        Frame f(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((mask >> (u * n + v)) & 1u) f.set(u, v);
        if (violates(f)) {
            ++counterexamples;
            if (!first) first = frame_from_key(canonical_key(f));
        }
    }

    Report report;
    report.add_text("audit", args.audit);
    report.add_int("n", args.n);
    report.add_int("frames", (long long)(1ull << cells));
    report.add_int("counterexamples", (long long)counterexamples);
    report.add_text("first", first ? edges_text(*first) : "none");
    report.add_text("verdict", counterexamples == 0 ? "claim holds" : "claim fails");
    report.emit(opt.format, std::cout);
}

void run_frame(const Options& opt, const FrameArgs& args) {
    if (!args.audit.empty() && !args.input.empty())
        throw input_error("frame: pass --input or --audit, not both");
    if (!args.audit.empty())
        run_frame_audit(opt, args);
    else if (!args.input.empty())
        run_frame_report(opt, args);
    else
        throw input_error("frame: needs --input FILE or --audit NAME --n N");
}

// ------------------------------------------------------------------ game

struct GameArgs {
    std::string input;
    int nim_tokens = 0;
    bool nim_given = false;
    bool solve_it = false;
    std::string dot_path;
};

void run_game(const Options& opt, const GameArgs& args) {
    if (args.input.empty() == !args.nim_given)
        throw input_error("game: needs exactly one of --input FILE or --nim TOKENS");
    const Game g = args.input.empty() ? nim(args.nim_tokens)
                                      : game_from_json(read_file(args.input));
    if (g.points() == 1)
        std::cerr << "warning: degenerate single-point game; the literal turn formula"
                     " makes player " << g.players << " the winner at the root\n";

    Report report;
    report.add_int("points", g.points());
    report.add_int("players", g.players);
    if (g.root)
        report.add_int("root", *g.root);
    else
        report.add_text("root", "none");
    report.add_bool("tree_like", is_tree_like(g));
    report.add_int("histories", (long long)histories(g).size());
    if (g.root) report.add_int("length", game_length(g));

    if (args.solve_it) {
        const SolveResult result = solve(g);
        if (result.outcome == SolveResult::Outcome::winner)
            report.add_text("outcome", "player " + std::to_string(result.winner));
        else
            report.add_text("outcome", "tie");
        std::string moves;
        for (auto [from, to] : result.strategy) {
            if (!moves.empty()) moves += " ";
            moves += std::to_string(from) + "->" + std::to_string(to);
        }
        report.add_text("strategy", moves);
    }
    if (!args.dot_path.empty()) {
        write_file(args.dot_path, to_dot(g));
        report.add_text("dot", args.dot_path);
    }
    report.emit(opt.format, std::cout);
}

// --------------------------------------------------------------- numbers

void run_numbers_partition(const Options& opt, int n, int terms, bool all_methods) {
    Report report;
    report.add_int("n", n);
    report.add_count("exact", p_exact(n));
    if (all_methods) {
        const int used = terms > 0 ? terms : default_rademacher_terms(n);
        report.add_int("rademacher_terms", used);
        report.add_real("rademacher", rademacher_p(n, used));
        report.add_real("hardy_ramanujan", hardy_ramanujan(n));
    }
    report.emit(opt.format, std::cout);
}

void run_numbers_rademacher(const Options& opt, int n, int terms) {
    const int used = terms > 0 ? terms : default_rademacher_terms(n);
    const double value = rademacher_p(n, used);
    Report report;
    report.add_int("n", n);
    report.add_int("terms", used);
    report.add_real("value", value);
    report.add_count("rounded", BigNat((std::uint64_t)std::llround(value)));
    report.emit(opt.format, std::cout);
}

void run_numbers_hr(const Options& opt, int n) {
    Report report;
    report.add_int("n", n);
    report.add_real("hardy_ramanujan", hardy_ramanujan(n));
    report.emit(opt.format, std::cout);
}

void run_numbers_poset(const Options& opt, int n) {
    Report report;
    report.add_int("n", n);
    report.add_count("poset_asymptotic", poset_asymptotic(n));
    report.emit(opt.format, std::cout);
}

void run_numbers_ratio(const Options& opt, int n) {
    Report report;
    report.add_int("n", n);
    report.add_count("p", p_exact(n));
    report.add_count("a", a_exact(n));
    report.add_real("ratio", s5_ratio(n));
    report.emit(opt.format, std::cout);
}

void run_numbers_dedekind(const Options& opt, std::int64_t h, std::int64_t k) {
    Report report;
    report.add_int("h", h);
    report.add_int("k", k);
    report.add_text("value", dedekind_sum(h, k).to_string());
    report.emit(opt.format, std::cout);
}

// ---------------------------------------------------------------- sample

void run_sample(const Options& opt, int n, std::uint64_t trials, std::uint64_t seed) {
    const SampleEstimate est = sample_s5_probability(n, trials, seed);
    Report report;
    report.add_int("n", n);
    report.add_int("trials", (long long)est.trials);
    report.add_int("seed", (long long)seed);
    report.add_int("hits", (long long)est.hits);
    report.add_real("ratio", est.ratio);
    if (n <= 3) {
        const double exact =
            bell(n).to_double() / BigNat::pow2((std::uint64_t)n * (std::uint64_t)n).to_double();
        report.add_real("exact", exact);
        report.add_real("deviation", est.ratio - exact);
    }
    report.emit(opt.format, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for branching-time games, Kripke frames, and partition counts"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "enumeration budget (number of candidates)")
        ->capture_default_str();

    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand("census", "count structures, exactly");
    census_cmd->fallthrough();  // global --format/--budget may follow the subcommand
    census_cmd->add_option("--n", census_args.n, "ground set size")->required();
    census_cmd->add_option("--class", census_args.cls,
                           "relation | strict-order | partial-order | equivalence")
        ->required();
    census_cmd->add_flag("--labeled", census_args.labeled, "count labeled structures");
    census_cmd->add_flag("--unlabeled", census_args.unlabeled, "count isomorphism classes");
    census_cmd->add_flag("--both", census_args.both, "run two routes and compare");

    FrameArgs frame_args;
    auto* frame_cmd = app.add_subcommand("frame", "check properties and axioms of a frame");
    frame_cmd->fallthrough();
    frame_cmd->add_option("--input", frame_args.input, "frame JSON file");
    frame_cmd->add_option("--audit", frame_args.audit, "sweep all frames of size --n");
    frame_cmd->add_option("--n", frame_args.n, "world count for audits");
    frame_cmd->add_option("--checks", frame_args.checks,
                          "subset of property/axiom names to report")
        ->delimiter(',');
    frame_cmd->add_option("--validates", frame_args.validates,
                          "formula to test for frame validity");

    GameArgs game_args;
    auto* game_cmd = app.add_subcommand("game", "inspect and solve a game");
    game_cmd->fallthrough();
    game_cmd->add_option("--input", game_args.input, "game JSON file");
    game_cmd->add_option("--nim", game_args.nim_tokens, "single-pile nim with this many tokens")
        ->each([&](const std::string&) { game_args.nim_given = true; });
    game_cmd->add_flag("--solve", game_args.solve_it, "run backward induction");
    game_cmd->add_option("--dot", game_args.dot_path, "write DOT export here");

    auto* numbers_cmd = app.add_subcommand("numbers", "partition-function machinery");
    numbers_cmd->fallthrough();
    numbers_cmd->require_subcommand(1);
    int num_n = 1, num_terms = 0;
    bool all_methods = false;
    std::int64_t ded_h = 1, ded_k = 1;
    auto* partition_cmd = numbers_cmd->add_subcommand("partition", "exact p(n)");
    partition_cmd->add_option("--n", num_n)->required();
    partition_cmd->add_flag("--all-methods", all_methods, "also print series and asymptotic");
    partition_cmd->add_option("--terms", num_terms, "series truncation override");
    auto* rademacher_cmd = numbers_cmd->add_subcommand("rademacher", "truncated series for p(n)");
    rademacher_cmd->add_option("--n", num_n)->required();
    rademacher_cmd->add_option("--terms", num_terms, "truncation (default ceil(3 sqrt n)+5)");
    auto* hr_cmd = numbers_cmd->add_subcommand("hr", "Hardy-Ramanujan asymptotic");
    hr_cmd->add_option("--n", num_n)->required();
    auto* poset_cmd = numbers_cmd->add_subcommand("poset-asymptotic", "labeled-poset double sum");
    poset_cmd->add_option("--n", num_n)->required();
    auto* ratio_cmd = numbers_cmd->add_subcommand("ratio", "p(n)/a(n)");
    ratio_cmd->add_option("--n", num_n)->required();
    auto* dedekind_cmd = numbers_cmd->add_subcommand("dedekind", "exact Dedekind sum s(h,k)");
    dedekind_cmd->set_help_flag("--help", "print help");  // frees -h for the argument
    dedekind_cmd->add_option("--h", ded_h)->required();
    dedekind_cmd->add_option("--k", ded_k)->required();
    for (auto* sub : numbers_cmd->get_subcommands({})) sub->fallthrough();

    int sample_n = 1;
    std::uint64_t sample_trials = 1, sample_seed = 0;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo S5 frequency");
    sample_cmd->fallthrough();
    sample_cmd->add_option("--n", sample_n)->required();
    sample_cmd->add_option("--trials", sample_trials)->required();
    sample_cmd->add_option("--seed", sample_seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        if (*census_cmd) {
            run_census(opt, census_args);
        } else if (*frame_cmd) {
            run_frame(opt, frame_args);
        } else if (*game_cmd) {
            run_game(opt, game_args);
        } else if (*numbers_cmd) {
            if (*partition_cmd)
                run_numbers_partition(opt, num_n, num_terms, all_methods);
            else if (*rademacher_cmd)
                run_numbers_rademacher(opt, num_n, num_terms);
            else if (*hr_cmd)
                run_numbers_hr(opt, num_n);
            else if (*poset_cmd)
                run_numbers_poset(opt, num_n);
            else if (*ratio_cmd)
                run_numbers_ratio(opt, num_n);
            else if (*dedekind_cmd)
                run_numbers_dedekind(opt, ded_h, ded_k);
        } else if (*sample_cmd) {
            run_sample(opt, sample_n, sample_trials, sample_seed);
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const limit_error& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 4;
    }
}
