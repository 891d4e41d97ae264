#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoform/catalog.hpp"
#include "isoform/errors.hpp"
#include "isoform/formality.hpp"
#include "isoform/render.hpp"
#include "isoform/restricted.hpp"
#include "isoform/weyl.hpp"

namespace {

using namespace isoform;

// Exit codes: 0 success, 1 usage or input error, 2 invariant or
// verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

std::map<std::string, long long> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, long long> params;
    for (const std::string& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw input_error("malformed --param '" + kv + "', expected name=value");
        std::string name = kv.substr(0, eq);
        try {
            size_t used = 0;
            long long value = std::stoll(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing text");
            params[name] = value;
        } catch (const std::exception&) {
            throw input_error("malformed --param '" + kv + "', value must be an integer");
        }
    }
    return params;
}

std::vector<SymmetricPairEntry> suite_entries(const std::string& catalog_path) {
    if (!catalog_path.empty()) return load_catalog(catalog_path);
    return enumerate_suite();
}

void check_format(const std::string& format, bool dot_allowed) {
    if (format == "json" || format == "markdown") return;
    if (format == "dot" && dot_allowed) return;
    throw input_error("unsupported format '" + format + "' for this command");
}

int cmd_analyze(const std::string& pair, const std::vector<std::string>& raw_params,
                const std::string& format) {
    check_format(format, false);
    SymmetricPairEntry entry = instantiate(pair, parse_params(raw_params));
    FormalityReport report = check_formality(entry);
    if (format == "json")
        std::cout << dump_json(to_json(report));
    else
        std::cout << to_markdown(report);
    if (!report.formal) {
        std::cerr << "verification failure: dim H*(fixed set) = " << report.dim_fixed_set
                  << " != dim H*(M) = " << report.dim_M << " for " << entry.label << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_fold(const std::string& series, int rank, const std::string& involution,
             const std::string& format) {
    check_format(format, true);
    FoldResult fold = fold_diagram({{parse_series(series), rank}}, involution);
    if (format == "json")
        std::cout << dump_json(to_json(fold));
    else if (format == "dot")
        std::cout << to_dot(fold);
    else
        std::cout << to_markdown(fold);
    return kExitOk;
}

int cmd_verify_all(const std::string& catalog_path, const std::string& format) {
    check_format(format, false);
    std::vector<FormalityReport> reports;
    bool all_formal = true;
    for (const SymmetricPairEntry& entry : suite_entries(catalog_path)) {
        FormalityReport report = check_formality(entry);
        all_formal = all_formal && report.formal;
        reports.push_back(std::move(report));
    }
    if (format == "json")
        std::cout << dump_json(suite_to_json(reports));
    else
        std::cout << suite_to_markdown(reports);
    if (!all_formal) {
        std::cerr << "verification failure: at least one suite entry is not formal\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_oracle(int max_rank, const std::string& format) {
    check_format(format, false);
    std::vector<OracleRow> rows = run_oracle(max_rank);
    if (format == "json")
        std::cout << dump_json(oracle_to_json(rows, max_rank));
    else
        std::cout << oracle_to_markdown(rows);
    for (const OracleRow& row : rows) {
        if (!row.skipped && !row.match) {
            std::cerr << "oracle mismatch for " << to_string(row.type) << "\n";
            return kExitInvariant;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifies equivariant formality of isotropy actions on compact symmetric "
                 "spaces by exact root-system combinatorics"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Path to a catalog JSON file overriding the embedded one")
        ->envname("ISOFORM_CATALOG");

    auto* analyze = app.add_subcommand("analyze", "Analyze one symmetric pair");
    std::string pair;
    std::vector<std::string> raw_params;
    std::string analyze_format = "markdown";
    analyze->add_option("--pair", pair, "Catalog label, e.g. AI or EI")->required();
    analyze->add_option("--param", raw_params, "Family parameter as name=value (repeatable)");
    analyze->add_option("--format", analyze_format, "json or markdown");

    auto* fold = app.add_subcommand("fold", "Fold a Dynkin diagram along an involution");
    std::string series;
    int rank = 0;
    std::string involution;
    std::string fold_format = "markdown";
    fold->add_option("--type", series, "Series letter A..G")->required();
    fold->add_option("--rank", rank, "Rank of the diagram")->required();
    fold->add_option("--involution", involution, "identity, flip, or fork-swap")->required();
    fold->add_option("--format", fold_format, "json, markdown, or dot");

    auto* verify = app.add_subcommand("verify-all", "Run the whole verification suite");
    std::string verify_format = "markdown";
    verify->add_option("--format", verify_format, "json or markdown");

    auto* oracle = app.add_subcommand("oracle", "Compare closed-form Weyl orders against the BFS oracle");
    int max_rank = 4;
    std::string oracle_format = "markdown";
    oracle->add_option("--max-rank", max_rank, "Largest irreducible rank to check (1..6)");
    oracle->add_option("--format", oracle_format, "json or markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(pair, raw_params, analyze_format);
        if (fold->parsed()) return cmd_fold(series, rank, involution, fold_format);
        if (verify->parsed()) return cmd_verify_all(catalog_path, verify_format);
        if (oracle->parsed()) return cmd_oracle(max_rank, oracle_format);
    } catch (const input_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
