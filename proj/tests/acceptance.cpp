// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "minwin.hpp"
#include "known_counts.hpp"

using namespace minwin;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

std::string capture(const std::string& args) {
    const std::string cmd = "'" MINWIN_CLI_PATH "' " + args;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    pclose(pipe);
    return out;
}

std::string str(const Count& c) { return c.str(); }

Outcome table_reproduction() {
    Outcome o;
    const auto csv = capture("table --max-n 20 --format csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    const auto& rows = testdata::known_counts();
    std::size_t entries = 0;
    for (std::size_t n = 1; n <= rows.size(); ++n) {
        if (!std::getline(in, line)) {
            o.fail("missing row " + std::to_string(n));
            return o;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) {
            cells.push_back(cell);
        }
        std::vector<std::string> filled;
        for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
            if (!cells[i].empty()) {
                filled.push_back(cells[i]);
            }
        }
        const auto& row = rows[n - 1];
        if (cells.empty() || cells[0] != std::to_string(n) || filled.size() != row.by_t.size()) {
            o.fail("row " + std::to_string(n) + " has wrong shape");
            continue;
        }
        for (std::size_t t = 0; t < row.by_t.size(); ++t, ++entries) {
            if (filled[t] != str(row.by_t[t])) {
                o.fail("n=" + std::to_string(n) + " t=" + std::to_string(t + 1) + " got " + filled[t]);
            }
        }
        ++entries;
        if (cells.back() != str(row.total)) {
            o.fail("total n=" + std::to_string(n) + " got " + cells.back());
        }
    }
    if (o.ok) {
        o.detail = std::to_string(entries) + " entries";
    }
    return o;
}

Outcome nine_three_listing() {
    Outcome o;
    // The fourteen matrices, written out by hand.
    const std::set<GameSpec> expected{
        {{5, 2, 2}, {4, 1, 1}}, {{5, 2, 2}, {3, 1, 1}}, {{5, 2, 2}, {2, 1, 1}}, {{5, 2, 2}, {1, 1, 1}},
        {{4, 3, 2}, {3, 2, 1}}, {{4, 3, 2}, {3, 1, 1}}, {{4, 3, 2}, {2, 2, 1}}, {{4, 3, 2}, {2, 1, 1}},
        {{4, 3, 2}, {1, 2, 1}}, {{4, 3, 2}, {1, 1, 1}}, {{3, 3, 3}, {2, 2, 2}}, {{3, 3, 3}, {2, 2, 1}},
        {{3, 3, 3}, {2, 1, 1}}, {{3, 3, 3}, {1, 1, 1}},
    };
    if (count_nnnv(9, 3, CountMethod::polya) != 14 || count_nnnv(9, 3, CountMethod::recursive) != 14) {
        o.fail("count is not 14");
    }
    std::set<GameSpec> listed;
    for (const auto& r : enumerate_proper(9, 3, false, false)) {
        listed.insert(canonicalize(r.spec()).spec());
    }
    if (listed != expected) {
        o.fail("listing differs (" + std::to_string(listed.size()) + " listed)");
    }
    return o;
}

Outcome two_class_values() {
    Outcome o;
    const std::array<int, 9> expected{0, 0, 0, 0, 1, 2, 6, 10, 19};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (count_nnnv_polya(n, 2) != expected[n] || count_nnnv_recursive(n, 2) != expected[n]) {
            o.fail("n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome triple_agreement() {
    Outcome o;
    std::size_t compared = 0;
    for (std::size_t n = 1; n <= 25; ++n) {
        for (std::size_t t = 1; t <= 12; ++t) {
            const Count a = count_nnnv_polya(n, t);
            const Count b = count_nnnv_recursive(n, t);
            const Count c = enumerate_proper(n, t, false, false).size();
            const Count d = count_all(n, t, CountMethod::polya);
            const Count e = count_all(n, t, CountMethod::recursive);
            const Count f = enumerate_proper(n, t, true, true).size();
            if (a != b || a != c) {
                o.fail("no null/veto n=" + std::to_string(n) + " t=" + std::to_string(t));
            }
            if (d != e || d != f) {
                o.fail("all n=" + std::to_string(n) + " t=" + std::to_string(t));
            }
            compared += 2;
        }
    }
    if (o.ok) {
        o.detail = std::to_string(compared) + " cells";
    }
    return o;
}

Outcome labeled_closed_form() {
    Outcome o;
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::size_t t = 1; t <= 6; ++t) {
            if (oracle_labeled(n, t) != binomial(static_cast<long long>(n) - 1, 2 * static_cast<long long>(t) - 1)) {
                o.fail("n=" + std::to_string(n) + " t=" + std::to_string(t));
            }
        }
    }
    return o;
}

Outcome generating_functions() {
    Outcome o;
    for (std::size_t t = 2; t <= 4; ++t) {
        const auto f = known_generating_function(t);
        if (!f) {
            o.fail("missing t=" + std::to_string(t));
            continue;
        }
        const auto s = expand_rational(f->numerator, f->denominator, 20);
        for (std::size_t n = 1; n <= 20; ++n) {
            if (s[n] != Rational(count_all(n, t))) {
                o.fail("t=" + std::to_string(t) + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

Outcome isomorphism_oracle() {
    Outcome o;
    const auto& rows = testdata::known_counts();
    std::string totals;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto dist = oracle_isomorphism_count(n);
        Count total = 0;
        const auto& row = rows[n - 1];
        for (std::size_t t = 1; t <= row.by_t.size(); ++t) {
            const auto it = dist.find(t);
            const Count got = it == dist.end() ? Count(0) : it->second;
            if (got != row.by_t[t - 1]) {
                o.fail("n=" + std::to_string(n) + " t=" + std::to_string(t));
            }
        }
        for (const auto& [t, c] : dist) {
            total += c;
        }
        if (total != row.total) {
            o.fail("total n=" + std::to_string(n));
        }
        totals += (totals.empty() ? "" : ",") + str(total);
    }
    if (o.ok) {
        o.detail = "totals " + totals;
    }
    return o;
}

Outcome parameterization_validity() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            for (const auto& rep : enumerate_proper(n, t, true, true)) {
                const CoalitionVector m(rep.minwin().begin(), rep.minwin().end());
                if (minimal_winning_vectors(rep.spec()) != std::set<CoalitionVector>{m}) {
                    o.fail("minimal winning " + to_string(rep.spec()));
                }
                std::vector<std::vector<std::size_t>> declared;
                std::size_t p = 0;
                for (unsigned c : rep.classes()) {
                    declared.emplace_back();
                    for (unsigned k = 0; k < c; ++k) {
                        declared.back().push_back(p++);
                    }
                }
                if (equivalence_classes(ExplicitGame(rep.spec())) != declared) {
                    o.fail("classes " + to_string(rep.spec()));
                }
                ++checked;
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checked) + " representations";
    }
    return o;
}

Outcome dimension_certificates() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 9; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            for (const auto& rep : enumerate_proper(n, t, true, true)) {
                const auto& m = rep.minwin();
                const auto& c = rep.classes();
                bool has_null = false;
                bool has_veto = false;
                for (std::size_t i = 0; i < t; ++i) {
                    has_null = has_null || m[i] == 0;
                    has_veto = has_veto || m[i] == c[i];
                }
                const long long tt = static_cast<long long>(t);
                const long long expect = has_null && has_veto ? std::max(tt - 2, 1LL)
                                         : has_null || has_veto ? std::max(tt - 1, 1LL)
                                                                : tt;
                try {
                    const auto cert = verify_certificate(rep);
                    if (static_cast<long long>(cert.decomposition.size()) != expect || !cert.minimal) {
                        o.fail(to_string(rep.spec()));
                    }
                } catch (const error& e) {
                    o.fail(to_string(rep.spec()) + ": " + e.what());
                }
                ++checked;
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checked) + " representations";
    }
    return o;
}

Outcome property_suites() {
    Outcome o;
    for (long long r = 0; r <= 30; ++r) {
        for (long long k = 0; k <= r; ++k) {
            for (long long j = 0; j <= k; ++j) {
                BigInt lhs = 0;
                for (long long m = 0; m <= r; ++m) {
                    lhs += binomial(m, j) * binomial(r - m, k - j);
                }
                if (lhs != binomial(r + 1, k + 1)) {
                    o.fail("Chu-Vandermonde j=" + std::to_string(j));
                }
            }
        }
    }
    for (std::size_t t = 0; t <= 20; ++t) {
        if (cycle_index_symmetric(t).coefficient_sum() != 1) {
            o.fail("coefficient sum t=" + std::to_string(t));
        }
    }
    using Terms = std::map<IntegerPartition, Rational>;
    auto p = [](std::vector<unsigned> j) { return IntegerPartition{std::move(j)}; };
    const Terms z2{{p({2, 0}), Rational(1, 2)}, {p({0, 1}), Rational(1, 2)}};
    const Terms z3{{p({3, 0, 0}), Rational(1, 6)}, {p({1, 1, 0}), Rational(1, 2)}, {p({0, 0, 1}), Rational(1, 3)}};
    const Terms z4{{p({4, 0, 0, 0}), Rational(1, 24)},
                   {p({2, 1, 0, 0}), Rational(1, 4)},
                   {p({0, 2, 0, 0}), Rational(1, 8)},
                   {p({1, 0, 1, 0}), Rational(1, 3)},
                   {p({0, 0, 0, 1}), Rational(1, 4)}};
    if (cycle_index_symmetric(2).terms != z2 || cycle_index_symmetric(3).terms != z3 ||
        cycle_index_symmetric(4).terms != z4) {
        o.fail("small cycle indices differ");
    }
    return o;
}

struct Criterion {
    const char* name;
    double limit_seconds; // 0 means untimed
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"table reproduction n<=20", 5, table_reproduction},
        {"n=9 t=3 listing without null or veto", 0, nine_three_listing},
        {"two-class counts n=0..8", 0, two_class_values},
        {"triple agreement n<=25 t<=12", 60, triple_agreement},
        {"labeled closed form n<=14 t<=6", 0, labeled_closed_form},
        {"rational generating functions t=2..4", 0, generating_functions},
        {"isomorphism oracle n<=6", 120, isomorphism_oracle},
        {"parameterization validity n<=8", 0, parameterization_validity},
        {"dimension certificates n<=9", 0, dimension_certificates},
        {"property suites", 0, property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.fail("took longer than the limit");
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << c.name << " (" << timing;
        if (c.limit_seconds > 0) {
            std::cout << ", limit " << c.limit_seconds << "s";
        }
        std::cout << ")";
        if (!o.detail.empty()) {
            std::cout << ": " << o.detail;
        }
        std::cout << '\n';
        failures += o.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
