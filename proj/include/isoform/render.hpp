#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "isoform/formality.hpp"
#include "isoform/restricted.hpp"
#include "isoform/weyl.hpp"

namespace isoform {

using ordered_json = nlohmann::ordered_json;

// All renderers are deterministic: identical inputs produce identical bytes.
// The JSON schemas and DOT conventions are documented in docs/formats.md.

ordered_json to_json(const FormalityReport& report);
ordered_json to_json(const FoldResult& fold);
ordered_json suite_to_json(const std::vector<FormalityReport>& reports);
ordered_json oracle_to_json(const std::vector<OracleRow>& rows, int max_rank);

std::string to_markdown(const FormalityReport& report);
std::string to_markdown(const FoldResult& fold);
std::string suite_to_markdown(const std::vector<FormalityReport>& reports);
std::string oracle_to_markdown(const std::vector<OracleRow>& rows);

// Both diagrams of a fold as one Graphviz document.
std::string to_dot(const FoldResult& fold);

std::string dump_json(const ordered_json& j);

// Display name of k including torus factors, e.g. "A1+u1" for u(2).
std::string k_display(const SymmetricPairEntry& entry);

} // namespace isoform
