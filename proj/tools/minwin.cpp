// minwin: counts, listings, generating functions and dimension certificates
// for simple games with a unique minimal winning vector.
//
// Exit codes: 0 success, 1 usage error, 2 invalid game spec,
// 3 verification or consistency failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minwin.hpp"
#include "minwin/json_io.hpp"

namespace {

using namespace minwin;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid_spec = 2;
constexpr int exit_verification = 3;

struct Settings {
    std::size_t brute_bound = default_brute_bound;
    OracleLimits limits;
};

// MINWIN_BRUTE_BOUND overrides the player bound of exhaustive 2^n checks; the
// isomorphism oracle is additionally capped at 7 players.
Settings settings_from_env() {
    Settings s;
    if (const char* env = std::getenv("MINWIN_BRUTE_BOUND")) {
        try {
            const long v = std::stol(env);
            if (v < 1 || v > 64) {
                throw std::out_of_range(env);
            }
            s.brute_bound = static_cast<std::size_t>(v);
            s.limits.isomorphism_max_n = std::min<std::size_t>(s.brute_bound, 7);
        } catch (const std::exception&) {
            throw usage_error(std::string("MINWIN_BRUTE_BOUND must be an integer in 1..64, got '") + env + "'");
        }
    }
    return s;
}

Count count_by(const std::string& method, std::size_t n, std::size_t t, bool allow_null, bool allow_veto) {
    if (method == "enumerate") {
        return enumerate_proper(n, t, allow_null, allow_veto).size();
    }
    const CountMethod m = method == "polya" ? CountMethod::polya : CountMethod::recursive;
    if (allow_null && allow_veto) {
        return count_all(n, t, m);
    }
    return count_restricted(n, t, allow_null, allow_veto, m);
}

int cmd_count(std::size_t n, std::size_t t, bool no_null, bool no_veto, const std::string& method) {
    if (!method.empty()) {
        std::cout << count_by(method, n, t, !no_null, !no_veto) << '\n';
        return exit_ok;
    }
    std::optional<Count> agreed;
    for (const char* m : {"polya", "recursive", "enumerate"}) {
        const Count c = count_by(m, n, t, !no_null, !no_veto);
        if (agreed && *agreed != c) {
            std::cerr << "error: methods disagree at n=" << n << ", t=" << t << ": " << *agreed << " vs " << c << " ("
                      << m << ")\n";
            return exit_verification;
        }
        agreed = c;
    }
    std::cout << *agreed << '\n';
    return exit_ok;
}

int cmd_table(std::size_t max_n, const std::string& format) {
    if (format == "bfile") {
        std::cerr << "error: bfile output needs a single sequence; use the bfile subcommand\n";
        return exit_usage;
    }
    const std::size_t width = max_classes(max_n, true);
    if (format == "json") {
        json columns = json::array({"n"});
        for (std::size_t t = 1; t <= width; ++t) {
            columns.push_back("t=" + std::to_string(t));
        }
        columns.push_back("total");
        json rows = json::array();
        for (std::size_t n = 1; n <= max_n; ++n) {
            json row = json::array({n});
            for (std::size_t t = 1; t <= max_classes(n, true); ++t) {
                row.push_back(count_to_json(count_all(n, t)));
            }
            row.push_back(count_to_json(total_all(n)));
            rows.push_back(row);
        }
        std::cout << json{{"columns", columns}, {"rows", rows}}.dump() << '\n';
        return exit_ok;
    }

    const bool markdown = format == "markdown";
    const std::string sep = markdown ? " | " : ",";
    auto line = [&](const std::vector<std::string>& cells) {
        std::ostringstream os;
        if (markdown) {
            os << "| ";
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? sep : "") << cells[i];
        }
        if (markdown) {
            os << " |";
        }
        std::cout << os.str() << '\n';
    };
    std::vector<std::string> header{"n"};
    for (std::size_t t = 1; t <= width; ++t) {
        header.push_back("t=" + std::to_string(t));
    }
    header.push_back("total");
    line(header);
    if (markdown) {
        line(std::vector<std::string>(header.size(), "---"));
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::string> cells{std::to_string(n)};
        for (std::size_t t = 1; t <= width; ++t) {
            cells.push_back(t <= max_classes(n, true) ? count_all(n, t).str() : "");
        }
        cells.push_back(total_all(n).str());
        line(cells);
    }
    return exit_ok;
}

int cmd_list(std::size_t n, std::size_t t, bool no_null, bool no_veto, const std::string& format) {
    const auto reps = enumerate_proper(n, t, !no_null, !no_veto);
    if (format == "json") {
        std::cout << json(reps).dump() << '\n';
        return exit_ok;
    }
    for (const auto& rep : reps) {
        std::cout << json(rep).dump() << '\n';
    }
    return exit_ok;
}

int cmd_gf(std::size_t t, std::size_t terms) {
    std::vector<Count> coeffs{0};
    for (std::size_t n = 1; n <= terms; ++n) {
        coeffs.push_back(count_all(n, t));
    }
    if (const auto f = known_generating_function(t)) {
        const TruncatedSeries expansion = expand_rational(f->numerator, f->denominator, terms);
        for (std::size_t n = 0; n <= terms; ++n) {
            if (expansion.integer_coeff(n) != coeffs[n]) {
                std::cerr << "error: rational generating function disagrees with the count at n=" << n << '\n';
                return exit_verification;
            }
        }
    }
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        std::cout << (n ? "," : "") << coeffs[n];
    }
    std::cout << '\n';
    return exit_ok;
}

std::vector<unsigned> parse_list(const std::string& text, const char* name) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
        }
        if (v < 0 || used != item.size()) {
            throw validation_error(std::string("--") + name + ": '" + item + "' is not a non-negative integer");
        }
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

int cmd_dim(const std::string& spec_json, const std::string& classes, const std::string& minwin_text, bool certify,
            const Settings& settings) {
    GameSpec spec;
    try {
        if (!spec_json.empty()) {
            spec = json::parse(spec_json).get<GameSpec>();
        } else {
            spec = GameSpec{parse_list(classes, "classes"), parse_list(minwin_text, "minwin")};
        }
    } catch (const json::exception& e) {
        std::cerr << "error: --spec is not valid JSON: " << e.what() << '\n';
        return exit_invalid_spec;
    }
    const ProperRepresentation rep = canonicalize(spec);
    std::cout << dimension_of(rep) << '\n';
    if (certify) {
        std::cout << json(verify_certificate(rep, settings.brute_bound)).dump() << '\n';
    }
    return exit_ok;
}

int cmd_verify(std::size_t max_n, const Settings& settings) {
    const CrossCheckReport report = cross_check(max_n, settings.limits);
    std::cout << json(report).dump() << '\n';
    return report.success() ? exit_ok : exit_verification;
}

int cmd_bfile(std::optional<std::size_t> t, bool total, std::size_t max_n) {
    if (t.has_value() == total) {
        std::cerr << "error: pass exactly one of --t or --total\n";
        return exit_usage;
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::cout << n << ' ' << (total ? total_all(n) : count_all(n, *t)) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate simple games with a unique minimal winning vector and compute their dimension"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::size_t t = 0;
    bool no_null = false;
    bool no_veto = false;
    std::string method;
    std::size_t max_n = 20;
    std::string format;
    std::size_t terms = 20;
    std::string spec_json;
    std::string classes;
    std::string minwin_text;
    bool certify = false;
    std::optional<std::size_t> bfile_t;
    bool bfile_total = false;

    auto* count = app.add_subcommand("count", "Number of non-isomorphic games with n players and t classes");
    count->add_option("n", n, "players")->required()->check(CLI::PositiveNumber);
    count->add_option("t", t, "equi-desirability classes")->required()->check(CLI::PositiveNumber);
    count->add_flag("--no-null", no_null, "exclude null players");
    count->add_flag("--no-veto", no_veto, "exclude veto players");
    count->add_option("--method", method, "single method instead of comparing all three")
        ->check(CLI::IsMember({"polya", "recursive", "enumerate"}));

    auto* table = app.add_subcommand("table", "Counts for every n and t with row totals");
    table->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown", "bfile"}));

    auto* list = app.add_subcommand("list", "Proper representations as game spec JSON");
    list->add_option("n", n, "players")->required()->check(CLI::PositiveNumber);
    list->add_option("t", t, "equi-desirability classes")->required()->check(CLI::PositiveNumber);
    list->add_flag("--no-null", no_null, "exclude null players");
    list->add_flag("--no-veto", no_veto, "exclude veto players");
    list->add_option("--format", format, "jsonl (one object per line) or json (array)")
        ->check(CLI::IsMember({"jsonl", "json"}));

    auto* gf = app.add_subcommand("gf", "Coefficients 0..N of the generating function for t classes");
    gf->add_option("t", t, "equi-desirability classes")->required()->check(CLI::PositiveNumber);
    gf->add_option("--terms", terms, "highest power of x");

    auto* dim = app.add_subcommand("dim", "Dimension of a game with minimum");
    auto* spec_opt = dim->add_option("--spec", spec_json, R"(game spec JSON {"classes":[...],"minwin":[...]})");
    auto* classes_opt = dim->add_option("--classes", classes, "comma-separated class sizes");
    auto* minwin_opt = dim->add_option("--minwin", minwin_text, "comma-separated minimal winning vector");
    spec_opt->excludes(classes_opt)->excludes(minwin_opt);
    classes_opt->needs(minwin_opt);
    minwin_opt->needs(classes_opt);
    dim->add_flag("--certify", certify, "also build and check the dimension certificate");

    auto* verify = app.add_subcommand("verify", "Cross-check every formula against the brute-force oracles");
    verify->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);

    auto* bfile = app.add_subcommand("bfile", "OEIS b-file for one column or the totals");
    bfile->add_option("--t", bfile_t, "class count")->check(CLI::PositiveNumber);
    bfile->add_flag("--total", bfile_total, "row totals instead of a column");
    bfile->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every other parse failure is a usage error.
        if (app.exit(e) != 0) {
            return exit_usage;
        }
        return exit_ok;
    }

    try {
        const Settings settings = settings_from_env();
        if (count->parsed()) {
            return cmd_count(n, t, no_null, no_veto, method);
        }
        if (table->parsed()) {
            return cmd_table(max_n, format.empty() ? "csv" : format);
        }
        if (list->parsed()) {
            return cmd_list(n, t, no_null, no_veto, format);
        }
        if (gf->parsed()) {
            return cmd_gf(t, terms);
        }
        if (dim->parsed()) {
            if (spec_json.empty() && classes.empty()) {
                std::cerr << "error: dim needs --spec or --classes with --minwin\n";
                return exit_usage;
            }
            return cmd_dim(spec_json, classes, minwin_text, certify, settings);
        }
        if (verify->parsed()) {
            return cmd_verify(verify->count("--max-n") ? max_n : 9, settings);
        }
        if (bfile->parsed()) {
            return cmd_bfile(bfile_t, bfile_total, max_n);
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_spec;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verification;
    }
    return exit_usage;
}
