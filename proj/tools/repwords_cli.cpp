// Command-line driver: every subcommand prints machine-readable output
// (JSON or CSV) on stdout; diagnostics and timings go to stderr. Exit codes:
// 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repwords/repwords.hpp"

using json = nlohmann::ordered_json;
using namespace repwords;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Budget budget_from_env() {
    const char* raw = std::getenv("REPWORDS_BUDGET_SECONDS");
    if (!raw || !*raw) return Budget{};
    char* end = nullptr;
    double seconds = std::strtod(raw, &end);
    if (end == raw || seconds <= 0)
        throw std::invalid_argument("REPWORDS_BUDGET_SECONDS must be a positive number");
    return Budget::with_seconds(seconds);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + output_path);
    out << text;
}

std::string counts_csv(const std::vector<std::uint64_t>& counts) {
    std::string csv = "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n)
        csv += std::to_string(n) + "," + std::to_string(counts[n]) + "\n";
    return csv;
}

json bignat_json(const BigNat& v) {
    if (v.fits_u64()) return json(v.as_u64());
    return json(v.str());
}

// --- subcommand payloads -------------------------------------------------

int run_check(const std::string& bound_text, std::vector<std::string> words,
              const std::string& format, const std::string& output) {
    ExponentBound bound = parse_exponent_bound(bound_text);
    if (words.empty()) {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) words.push_back(line);
    }
    std::string payload;
    bool any_violation = false;
    for (const std::string& text : words) {
        Word w = Word::parse(text);
        auto violation = find_violation(w, bound);
        any_violation = any_violation || violation.has_value();
        if (format == "text") {
            payload += text + ": ";
            if (violation)
                payload += "violation at " + std::to_string(violation->start) +
                           " (length " + std::to_string(violation->length) +
                           ", period " + std::to_string(violation->period) +
                           ", exponent " + violation->exponent.str() + ")\n";
            else
                payload += "free\n";
        } else {
            json object = {{"schema", "repwords.check/1"},
                           {"bound", bound.str()},
                           {"word", text},
                           {"free", !violation.has_value()}};
            if (violation)
                object["violation"] = {{"start", violation->start},
                                       {"length", violation->length},
                                       {"period", violation->period},
                                       {"exponent", violation->exponent.str()}};
            payload += object.dump() + "\n";
        }
    }
    emit(payload, output);
    return any_violation ? kExitVerificationFailure : kExitOk;
}

int run_enumerate(const std::string& bound_text, std::size_t max_n,
                  const std::string& format, unsigned shards, bool force,
                  const std::string& output) {
    ExponentBound bound = parse_exponent_bound(bound_text);
    Budget budget = budget_from_env();
    if (max_n > 32 || shards > 1)
        std::cerr << "enumerating bound " << bound.str() << " to length " << max_n
                  << " with " << shards << " shard(s)\n";
    CountSeries series = shards > 1
                             ? count_free_sharded(bound, max_n, shards, force, budget)
                             : count_free(bound, max_n, force, budget);
    if (format == "csv") {
        emit(counts_csv(series.counts), output);
    } else {
        json object = {{"schema", "repwords.enumerate/1"},
                       {"bound", bound.str()},
                       {"max_n", max_n},
                       {"shards", shards},
                       {"counts", series.counts}};
        emit(object.dump(2) + "\n", output);
    }
    return kExitOk;
}

int run_decompose(const std::string& bound_text, const std::string& word_text,
                  const std::string& output) {
    ExponentBound bound = parse_exponent_bound(bound_text);
    Word w = Word::parse(word_text, 2);
    DecompositionChain c = chain(w, bound);
    json prefixes = json::array(), suffixes = json::array();
    for (const Word& u : c.prefixes) prefixes.push_back(u.str());
    for (const Word& v : c.suffixes) suffixes.push_back(v.str());
    json object = {{"schema", "repwords.decompose/1"}, {"word", w.str()},
                   {"bound", bound.str()},           {"prefixes", prefixes},
                   {"core", c.core.str()},           {"suffixes", suffixes},
                   {"depth", c.depth()}};
    emit(object.dump(2) + "\n", output);
    return kExitOk;
}

int run_construct(std::size_t m, const std::string& emit_path,
                  const std::string& output) {
    FamilyReport report = build_family(m);
    json object = {{"schema", "repwords.construct/1"},
                   {"m", m},
                   {"source", report.source.str()},
                   {"zeros", report.zeros},
                   {"member_length", report.member_length},
                   {"member_count", report.members.size()},
                   {"max_square_root", report.max_square_root}};
    if (emit_path.empty()) {
        json members = json::array();
        for (const Word& member : report.members) members.push_back(member.str());
        object["members"] = members;
    } else {
        std::string lines;
        for (const Word& member : report.members) lines += member.str() + "\n";
        emit(lines, emit_path);
        object["members_file"] = emit_path;
    }
    emit(object.dump(2) + "\n", output);
    return kExitOk;
}

int run_growth(const std::string& bound_text, std::size_t max_period, double tol,
               std::size_t max_n, const std::string& forbidden_path,
               const std::string& output) {
    ExponentBound bound = parse_exponent_bound(bound_text);
    ForbiddenSet forbidden = minimal_forbidden(bound, max_period);
    AvoidanceAutomaton automaton = build_automaton(forbidden);
    GrowthEstimate estimate = dominant_root(automaton, tol, 0);
    auto counts = count_avoiding(automaton, max_n);

    if (!forbidden_path.empty()) {
        std::string lines;
        for (const Word& w : forbidden.words) lines += w.str() + "\n";
        emit(lines, forbidden_path);
    }
    json counts_json = json::array();
    for (const BigNat& v : counts) counts_json.push_back(bignat_json(v));
    json object = {{"schema", "repwords.growth/1"},
                   {"bound", bound.str()},
                   {"max_period", max_period},
                   {"forbidden_count", forbidden.words.size()},
                   {"max_word_length", forbidden.max_word_length()},
                   {"live_states", automaton.live_states()},
                   {"dominant_root", estimate.dominant_root},
                   {"tolerance", tol},
                   {"counts", counts_json}};
    emit(object.dump(2) + "\n", output);
    return kExitOk;
}

int run_verify(std::vector<std::string> names, unsigned shards,
               const std::string& output) {
    const auto& registry = all_checks();
    if (names.empty())
        for (const auto& check : registry) names.push_back(check.name);

    std::vector<const NamedCheck*> selected;
    for (const std::string& name : names) {
        const NamedCheck* found = nullptr;
        for (const auto& check : registry)
            if (check.name == name) found = &check;
        if (!found) throw std::invalid_argument("unknown check: " + name);
        selected.push_back(found);
    }

    Budget budget = budget_from_env();
    std::vector<CheckReport> reports(selected.size());
    if (shards > 1) {
        std::vector<std::future<CheckReport>> futures;
        for (const NamedCheck* check : selected)
            futures.push_back(std::async(std::launch::async,
                                         [check, budget] { return check->run(budget); }));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i)
            reports[i] = selected[i]->run(budget);
    }

    bool all_ok = true;
    json checks = json::array();
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const CheckReport& report = reports[i];
        bool universe_ok = !selected[i]->expected_universe ||
                           report.universe_size == *selected[i]->expected_universe;
        all_ok = all_ok && report.ok() && universe_ok;
        json entry = {{"name", report.name},
                      {"universe", report.universe_size},
                      {"universe_ok", universe_ok},
                      {"failures", report.failures}};
        if (selected[i]->expected_universe)
            entry["expected_universe"] = *selected[i]->expected_universe;
        if (!report.stats.empty()) entry["stats"] = report.stats;
        checks.push_back(entry);
        std::cerr << report.name << ": " << (report.ok() && universe_ok ? "ok" : "FAIL")
                  << " (" << report.elapsed_seconds << "s)\n";
    }
    json object = {{"schema", "repwords.verify/1"}, {"checks", checks}, {"ok", all_ok}};
    emit(object.dump(2) + "\n", output);
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_tables(const std::string& golden_dir) {
    struct Row {
        const char* name;
        const char* bound;
    };
    const Row rows[] = {{"overlap_free", "2+"},
                        {"seven_thirds", "7/3"},
                        {"seven_thirds_plus", "7/3+"},
                        {"cubefree", "3"}};
    Budget budget = budget_from_env();
    bool all_match = true;
    for (const Row& row : rows) {
        CountSeries series = count_free(parse_exponent_bound(row.bound), 28, false, budget);
        std::string generated = counts_csv(series.counts);
        std::string path = golden_dir + "/" + row.name + ".csv";
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cout << row.name << ": MISSING (" << path << ")\n";
            all_match = false;
            continue;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        if (buffer.str() == generated) {
            std::cout << row.name << ": OK\n";
        } else {
            std::cout << row.name << ": MISMATCH\n";
            all_match = false;
        }
    }
    return all_match ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact repetition analysis for binary words: checking, "
                 "enumeration, structure decomposition, word families, and "
                 "automaton growth bounds"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand(
        "check", "test words against an exponent bound and report violations");
    std::string check_bound;
    std::vector<std::string> check_words;
    std::string check_format = "json", check_output;
    check->add_option("--bound", check_bound, "exponent bound, e.g. 7/3 or 2+")
        ->required();
    check->add_option("--word", check_words,
                      "word(s) to check; stdin lines when omitted");
    check->add_option("--format", check_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--output", check_output, "write output to a file");

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate",
        "count free words of each length by pruned depth-first search");
    std::string enum_bound, enum_format = "csv", enum_output;
    std::size_t enum_max_n = 0;
    unsigned enum_shards = 1;
    bool enum_force = false;
    enumerate->add_option("--bound", enum_bound, "exponent bound")->required();
    enumerate->add_option("--max-n", enum_max_n, "largest length to count")
        ->required();
    enumerate->add_option("--format", enum_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    enumerate->add_option("--shards", enum_shards,
                          "parallel shards over fixed-length prefixes")
        ->check(CLI::Range(1u, 64u));
    enumerate->add_flag("--force", enum_force,
                        "run exponential enumerations past the length guard");
    enumerate->add_option("--output", enum_output, "write output to a file");

    // decompose
    auto* decompose = app.add_subcommand(
        "decompose",
        "factor a free word through the doubling morphism down to a short core");
    std::string dec_bound = "7/3", dec_word, dec_output;
    decompose->add_option("--bound", dec_bound,
                          "exponent bound (above 2, at most 7/3; 7/3+ excluded)");
    decompose->add_option("--word", dec_word, "binary word to decompose")->required();
    decompose->add_option("--output", dec_output, "write output to a file");

    // construct
    auto* construct = app.add_subcommand(
        "construct",
        "build the exponential family of power-free words from a squarefree "
        "ternary source");
    std::size_t con_m = 0;
    std::string con_emit, con_output;
    construct->add_option("--m", con_m, "source word length")->required();
    construct->add_option("--emit", con_emit, "write members one per line");
    construct->add_option("--output", con_output, "write the report to a file");

    // growth
    auto* growth = app.add_subcommand(
        "growth",
        "forbidden-word automaton: avoidance counts and dominant growth root");
    std::string gro_bound = "7/3+", gro_forbidden, gro_output;
    std::size_t gro_max_period = 10, gro_max_n = 28;
    double gro_tol = 1e-10;
    growth->add_option("--bound", gro_bound, "open exponent bound");
    growth->add_option("--max-period", gro_max_period,
                       "largest period of generated forbidden words");
    growth->add_option("--tol", gro_tol, "power-iteration tolerance");
    growth->add_option("--max-n", gro_max_n, "length prefix of avoidance counts");
    growth->add_option("--emit-forbidden", gro_forbidden,
                       "write the forbidden list one word per line");
    growth->add_option("--output", gro_output, "write output to a file");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the exhaustive certificate checks; nonzero exit on failure");
    std::vector<std::string> ver_checks;
    bool ver_all = false;
    unsigned ver_shards = 1;
    std::string ver_output;
    verify->add_option("--check", ver_checks,
                       "check name (h_squares, h_powers, fact_i, fact_ii, "
                       "large_squares_0, large_squares_1, dekking_bound)");
    verify->add_flag("--all", ver_all, "run every check (default)");
    verify->add_option("--shards", ver_shards, "run checks concurrently")
        ->check(CLI::Range(1u, 16u));
    verify->add_option("--output", ver_output, "write the report to a file");

    // tables
    auto* tables = app.add_subcommand(
        "tables", "regenerate the four count tables and diff against golden files");
    std::string tab_golden = "golden";
    tables->add_option("--golden-dir", tab_golden, "directory of golden CSV files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed())
            return run_check(check_bound, check_words, check_format, check_output);
        if (enumerate->parsed())
            return run_enumerate(enum_bound, enum_max_n, enum_format, enum_shards,
                                 enum_force, enum_output);
        if (decompose->parsed()) return run_decompose(dec_bound, dec_word, dec_output);
        if (construct->parsed()) return run_construct(con_m, con_emit, con_output);
        if (growth->parsed())
            return run_growth(gro_bound, gro_max_period, gro_tol, gro_max_n,
                              gro_forbidden, gro_output);
        if (verify->parsed()) {
            if (ver_all) ver_checks.clear();
            return run_verify(ver_checks, ver_shards, ver_output);
        }
        if (tables->parsed()) return run_tables(tab_golden);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
