#include "isoform/render.hpp"

#include <sstream>

#include "isoform/dynkin.hpp"

namespace isoform {

namespace {

ordered_json type_json(const TypeList& t) {
    ordered_json arr = ordered_json::array();
    for (const Component& c : t)
        arr.push_back({std::string(1, static_cast<char>(c.series)), c.rank});
    return arr;
}

ordered_json vec_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : v.coords()) arr.push_back(c.to_string());
    return arr;
}

ordered_json params_json(const std::map<std::string, long long>& params) {
    ordered_json obj = ordered_json::object();
    for (const auto& [name, value] : params) obj[name] = value;
    return obj;
}

ordered_json diagram_json(const DynkinDiagram& d, const std::string& prefix) {
    ordered_json nodes = ordered_json::array();
    for (int i = 0; i < d.node_count; ++i) nodes.push_back(prefix + std::to_string(i + 1));
    ordered_json edges = ordered_json::array();
    for (const auto& e : d.edges)
        edges.push_back({prefix + std::to_string(e.a + 1), prefix + std::to_string(e.b + 1),
                         e.multiplicity});
    return ordered_json{{"nodes", nodes}, {"edges", edges}};
}

std::string diagram_text(const DynkinDiagram& d, const std::string& prefix) {
    std::ostringstream os;
    os << "  nodes:";
    for (int i = 0; i < d.node_count; ++i) os << " " << prefix << i + 1;
    os << "\n  edges:";
    if (d.edges.empty()) os << " none";
    for (size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        os << (i ? "; " : " ") << prefix << e.a + 1 << " - " << prefix << e.b + 1 << " ["
           << e.multiplicity << "]";
    }
    os << "\n";
    return os.str();
}

} // namespace

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string k_display(const SymmetricPairEntry& entry) {
    std::string s = entry.k_type.empty() ? "" : to_string(entry.k_type);
    for (int i = rank_of(entry.k_type); i < entry.rank_k; ++i) s += s.empty() ? "u1" : "+u1";
    return s.empty() ? "-" : s;
}

ordered_json to_json(const FormalityReport& report) {
    const SymmetricPairEntry& e = report.entry;
    ordered_json j;
    j["label"] = e.label;
    j["params"] = params_json(e.params);
    j["g_type"] = type_json(e.g_type);
    j["k_type"] = type_json(e.k_type);
    j["kprime_type"] = type_json(report.kprime_type);
    j["kprime_display"] = report.kprime_display;
    j["involution"] = e.involution_spec;
    j["regime"] = to_string(e.regime);
    j["rank_g"] = e.rank_g;
    j["rank_k"] = e.rank_k;
    j["rank_space"] = e.rank_space;
    j["k_weyl_order"] = e.k_weyl_order;
    j["kprime_weyl_order"] = e.k_weyl_order * report.r;
    j["r"] = report.r;
    j["fixed_component_dim"] = report.fixed_component_dim;
    j["dim_fixed_set"] = report.dim_fixed_set;
    j["dim_M"] = report.dim_M;
    j["nonreduced"] = report.nonreduced;
    j["formal"] = report.formal;
    j["provenance"] = e.provenance;
    return j;
}

std::string to_markdown(const FormalityReport& report) {
    const SymmetricPairEntry& e = report.entry;
    std::ostringstream os;
    os << "# " << e.label << " (" << e.params_string() << ")\n\n";
    os << "| field | value |\n|---|---|\n";
    os << "| g | " << to_string(e.g_type) << " |\n";
    os << "| k | " << k_display(e) << " |\n";
    os << "| k' | " << report.kprime_display << " |\n";
    os << "| involution | " << e.involution_spec << " |\n";
    os << "| regime | " << to_string(e.regime) << " |\n";
    os << "| rank g / rank k | " << e.rank_g << " / " << e.rank_k << " |\n";
    os << "| \\|W(k)\\| | " << e.k_weyl_order << " |\n";
    os << "| \\|W(k')\\| | " << e.k_weyl_order * report.r << " |\n";
    os << "| r | " << report.r << " |\n";
    os << "| dim H*(fixed set) = 2^(rk g - rk k) * r | " << report.dim_fixed_set << " |\n";
    os << "| dim H*(M) | " << report.dim_M << " |\n";
    os << "| nonreduced restriction | " << (report.nonreduced ? "yes" : "no") << " |\n";
    os << "| formal | " << (report.formal ? "true" : "false") << " |\n";
    return os.str();
}

ordered_json suite_to_json(const std::vector<FormalityReport>& reports) {
    ordered_json entries = ordered_json::array();
    bool all_formal = true;
    for (const FormalityReport& r : reports) {
        entries.push_back(to_json(r));
        all_formal = all_formal && r.formal;
    }
    return ordered_json{{"entries", entries}, {"all_formal", all_formal}};
}

std::string suite_to_markdown(const std::vector<FormalityReport>& reports) {
    std::ostringstream os;
    os << "| label | params | g | k | k' | r | 2^(rk g - rk k) * r | dim H*(M) | formal |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const FormalityReport& r : reports) {
        os << "| " << r.entry.label << " | " << r.entry.params_string() << " | "
           << to_string(r.entry.g_type) << " | " << k_display(r.entry) << " | "
           << r.kprime_display << " | " << r.r << " | " << r.dim_fixed_set << " | " << r.dim_M
           << " | " << (r.formal ? "true" : "FAIL") << " |\n";
    }
    return os.str();
}

ordered_json to_json(const FoldResult& fold) {
    ordered_json j;
    j["base_type"] = type_json(fold.base_type);
    j["involution"] = fold.involution_name;
    j["base_diagram"] = diagram_json(diagram_of(fold.inv.base.simple_roots), "a");
    j["rank_t_k"] = fold.rrs.carrier.t_k_basis.size();
    j["rank_t_p"] = fold.rrs.carrier.t_p_basis.size();
    ordered_json simple = ordered_json::array();
    for (const Vec& v : fold.rrs.restricted_simple) simple.push_back(vec_json(v));
    j["restricted_simple"] = simple;
    j["folded_type"] = type_json(fold.rrs.kprime_type);
    j["folded_display"] = fold.rrs.display_type();
    j["folded_diagram"] = diagram_json(diagram_of(fold.rrs.restricted_simple), "b");
    j["nonreduced"] = fold.rrs.nonreduced();
    ordered_json nrc = ordered_json::array();
    for (int c : fold.rrs.nonreduced_components) nrc.push_back(c);
    j["nonreduced_components"] = nrc;
    j["restricted_root_count"] = fold.rrs.restricted_roots.size();
    j["reduced_root_count"] = fold.rrs.reduced.roots.size();
    j["compartments"] = fold.compartments;
    return j;
}

std::string to_markdown(const FoldResult& fold) {
    std::ostringstream os;
    os << "# fold " << to_string(fold.base_type) << " [" << fold.involution_name << "]\n\n";
    os << "source diagram:\n" << diagram_text(diagram_of(fold.inv.base.simple_roots), "a");
    os << "\nrestricted simple roots:\n";
    for (size_t i = 0; i < fold.rrs.restricted_simple.size(); ++i) {
        const Vec& v = fold.rrs.restricted_simple[i];
        os << "  b" << i + 1 << " = " << v.to_string() << "  |b|^2 = " << v.norm2().to_string()
           << "\n";
    }
    os << "\nfolded diagram:\n" << diagram_text(diagram_of(fold.rrs.restricted_simple), "b");
    os << "\nfolded type: " << fold.rrs.display_type() << "\n";
    os << "reduced type: " << to_string(fold.rrs.kprime_type) << "\n";
    os << "nonreduced: " << (fold.rrs.nonreduced() ? "yes" : "no") << "\n";
    os << "restricted roots: " << fold.rrs.restricted_roots.size() << "\n";
    os << "compartments: " << fold.compartments << "\n";
    return os.str();
}

std::string to_dot(const FoldResult& fold) {
    auto emit_cluster = [](std::ostringstream& os, const DynkinDiagram& d,
                           const std::string& cluster, const std::string& title,
                           const std::string& prefix) {
        os << "  subgraph cluster_" << cluster << " {\n";
        os << "    label=\"" << title << "\";\n";
        for (int i = 0; i < d.node_count; ++i)
            os << "    " << prefix << i + 1 << " [label=\"" << prefix << i + 1 << "\"];\n";
        for (const auto& e : d.edges) {
            if (e.multiplicity == 1) {
                os << "    " << prefix << e.a + 1 << " -> " << prefix << e.b + 1 << ";\n";
            } else {
                // Arrow points from the long root to the short one.
                int head = e.longer == e.a ? e.b : e.a;
                os << "    " << prefix << e.longer + 1 << " -> " << prefix << head + 1
                   << " [label=\"" << e.multiplicity << "\", dir=forward];\n";
            }
        }
        os << "  }\n";
    };

    std::ostringstream os;
    os << "digraph fold {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle, fontsize=11];\n";
    os << "  edge [dir=none];\n";
    emit_cluster(os, diagram_of(fold.inv.base.simple_roots), "source",
                 to_string(fold.base_type) + " (source)", "a");
    emit_cluster(os, diagram_of(fold.rrs.restricted_simple), "folded",
                 fold.rrs.display_type() + " (folded, " + fold.involution_name + ")", "b");
    os << "}\n";
    return os.str();
}

ordered_json oracle_to_json(const std::vector<OracleRow>& rows, int max_rank) {
    ordered_json arr = ordered_json::array();
    bool all_match = true;
    for (const OracleRow& row : rows) {
        ordered_json j;
        j["type"] = to_string(row.type);
        j["closed_form"] = row.closed_form;
        if (row.skipped) {
            j["bfs"] = nullptr;
            j["match"] = nullptr;
            j["skipped"] = true;
        } else {
            j["bfs"] = *row.bfs;
            j["match"] = row.match;
            j["skipped"] = false;
            all_match = all_match && row.match;
        }
        arr.push_back(j);
    }
    return ordered_json{{"max_rank", max_rank}, {"rows", arr}, {"all_match", all_match}};
}

std::string oracle_to_markdown(const std::vector<OracleRow>& rows) {
    std::ostringstream os;
    os << "| type | closed form | bfs | match |\n|---|---|---|---|\n";
    for (const OracleRow& row : rows) {
        os << "| " << to_string(row.type) << " | " << row.closed_form << " | ";
        if (row.skipped)
            os << "skipped | - |\n";
        else
            os << *row.bfs << " | " << (row.match ? "yes" : "NO") << " |\n";
    }
    return os.str();
}

} // namespace isoform
