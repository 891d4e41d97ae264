#include "isoform/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "isoform/errors.hpp"
#include "isoform/involution.hpp"
#include "isoform/root_system.hpp"
#include "isoform/weyl.hpp"

namespace isoform {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::equal_rank: return "equal_rank";
        case Regime::split_rank: return "split_rank";
        case Regime::outer_nonsplit: return "outer_nonsplit";
        case Regime::group_type_II: return "group_type_II";
    }
    return "?";
}

Regime parse_regime(const std::string& s) {
    if (s == "equal_rank") return Regime::equal_rank;
    if (s == "split_rank") return Regime::split_rank;
    if (s == "outer_nonsplit") return Regime::outer_nonsplit;
    if (s == "group_type_II") return Regime::group_type_II;
    throw input_error("unknown regime '" + s + "'");
}

std::string SymmetricPairEntry::params_string() const {
    if (params.empty()) return "-";
    std::string s;
    for (const auto& [name, value] : params) {
        if (!s.empty()) s += ",";
        s += name + "=" + std::to_string(value);
    }
    return s;
}

namespace {

long long require_param(const std::map<std::string, long long>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw input_error("missing parameter '" + name + "'");
    return it->second;
}

void reject_extra_params(const std::map<std::string, long long>& params,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [name, value] : params) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return name == a; }) == allowed.end())
            throw input_error("unknown parameter '" + name + "'");
    }
}

// so(n) as a type list: B_{(n-1)/2} for odd n, D_{n/2} for even n >= 4,
// empty (a torus) for n = 2.
TypeList so_type(long long n) {
    if (n == 2) return {};
    if (n % 2 == 1) return {{Series::B, static_cast<int>((n - 1) / 2)}};
    return {{Series::D, static_cast<int>(n / 2)}};
}

SymmetricPairEntry make_skeleton(const std::string& label,
                                 const std::map<std::string, long long>& params) {
    SymmetricPairEntry e;
    e.label = label;
    e.params = params;

    if (label == "AI") {
        reject_extra_params(params, {"n"});
        long long n = require_param(params, "n");
        if (n < 2) throw input_error("AI requires n >= 2");
        e.g_type = {{Series::A, static_cast<int>(n - 1)}};
        e.involution_spec = "flip";
        e.k_type = so_type(n);
        e.rank_k = static_cast<int>(n / 2);
        e.rank_space = static_cast<int>(n - 1);
        e.regime = n == 2 ? Regime::equal_rank : Regime::outer_nonsplit;
        e.dim_formula = "two_pow_m";
        e.provenance = "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7";
    } else if (label == "AII") {
        reject_extra_params(params, {"n"});
        long long n = require_param(params, "n");
        if (n < 2) throw input_error("AII requires n >= 2");
        e.g_type = {{Series::A, static_cast<int>(2 * n - 1)}};
        e.involution_spec = "flip";
        e.k_type = {{Series::C, static_cast<int>(n)}};
        e.rank_k = static_cast<int>(n);
        e.rank_space = static_cast<int>(n - 1);
        e.regime = Regime::split_rank;
        e.dim_formula = "split_rank_power";
        e.provenance = "split rank: dim H*(SU(2n)/Sp(n)) = 2^(n-1)";
    } else if (label == "BDI-odd") {
        reject_extra_params(params, {"p", "q"});
        long long p = require_param(params, "p");
        long long q = require_param(params, "q");
        if (p < 1 || q < 1) throw input_error("BDI-odd requires p, q >= 1");
        e.g_type = {{Series::D, static_cast<int>(p + q + 1)}};
        e.involution_spec = "fork-swap";
        e.k_type = {{Series::B, static_cast<int>(p)}, {Series::B, static_cast<int>(q)}};
        e.rank_k = static_cast<int>(p + q);
        e.rank_space = static_cast<int>(2 * std::min(p, q) + 1);
        e.regime = Regime::outer_nonsplit;
        e.dim_formula = "two_binom";
        e.provenance = "dim H*(SO(2p+2q+2)/SO(2p+1)xSO(2q+1)) = 2 C(p+q,p): Greub-Halperin-Vanstone p. 496";
    } else if (label == "EI") {
        reject_extra_params(params, {});
        e.g_type = {{Series::E, 6}};
        e.involution_spec = "flip";
        e.k_type = {{Series::C, 4}};
        e.rank_k = 4;
        e.rank_space = 6;
        e.regime = Regime::outer_nonsplit;
        e.dim_formula = "const:12";
        e.provenance = "dim H*(E6/PSp(4)) = 12: Takeuchi";
    } else if (label == "EIV") {
        reject_extra_params(params, {});
        e.g_type = {{Series::E, 6}};
        e.involution_spec = "flip";
        e.k_type = {{Series::F, 4}};
        e.rank_k = 4;
        e.rank_space = 2;
        e.regime = Regime::split_rank;
        e.dim_formula = "split_rank_power";
        e.provenance = "split rank: dim H*(E6/F4) = 2^2";
    } else if (label == "CI") {
        reject_extra_params(params, {"n"});
        long long n = require_param(params, "n");
        if (n < 2) throw input_error("CI requires n >= 2");
        e.g_type = {{Series::C, static_cast<int>(n)}};
        e.involution_spec = "identity";
        e.k_type = {{Series::A, static_cast<int>(n - 1)}};
        e.rank_k = static_cast<int>(n);
        e.rank_space = static_cast<int>(n);
        e.regime = Regime::equal_rank;
        e.dim_formula = "equal_rank_quotient";
        e.provenance = "equal rank: dim H*(Sp(n)/U(n)) = |W(g)|/|W(k)|";
    } else if (label == "DIII") {
        reject_extra_params(params, {"n"});
        long long n = require_param(params, "n");
        if (n < 3) throw input_error("DIII requires n >= 3");
        e.g_type = {{Series::D, static_cast<int>(n)}};
        e.involution_spec = "identity";
        e.k_type = {{Series::A, static_cast<int>(n - 1)}};
        e.rank_k = static_cast<int>(n);
        e.rank_space = static_cast<int>(n / 2);
        e.regime = Regime::equal_rank;
        e.dim_formula = "equal_rank_quotient";
        e.provenance = "equal rank: dim H*(SO(2n)/U(n)) = |W(g)|/|W(k)|";
    } else if (label == "G") {
        reject_extra_params(params, {});
        e.g_type = {{Series::G, 2}};
        e.involution_spec = "identity";
        e.k_type = {{Series::A, 1}, {Series::A, 1}};
        e.rank_k = 2;
        e.rank_space = 2;
        e.regime = Regime::equal_rank;
        e.dim_formula = "equal_rank_quotient";
        e.provenance = "equal rank: dim H*(G2/SO(4)) = |W(g)|/|W(k)|";
    } else if (label.rfind("TypeII-", 0) == 0) {
        reject_extra_params(params, {});
        Component x = parse_component(label.substr(7));
        if (!buildable(x)) throw input_error("unsupported type: " + to_string(x));
        e.g_type = {x, x};
        e.involution_spec = "factor-swap";
        e.k_type = {x};
        e.rank_k = x.rank;
        e.rank_space = x.rank;
        e.regime = Regime::group_type_II;
        e.dim_formula = "split_rank_power";
        e.provenance = "dim H*(G) = 2^rank(G): exterior algebra on rank(G) generators";
    } else {
        throw input_error("unknown label '" + label + "'");
    }

    return e;
}

Regime computed_regime(const SymmetricPairEntry& e, const std::vector<int>& perm) {
    if (e.involution_spec == "factor-swap") return Regime::group_type_II;
    bool is_identity = true;
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) is_identity = false;
    if (is_identity) return Regime::equal_rank;
    if (e.rank_g == e.rank_k + e.rank_space) return Regime::split_rank;
    return Regime::outer_nonsplit;
}

} // namespace

SymmetricPairEntry instantiate(const std::string& label,
                               const std::map<std::string, long long>& params) {
    SymmetricPairEntry e = make_skeleton(label, params);
    e.rank_g = rank_of(e.g_type);
    for (const Component& c : e.k_type)
        if (!weyl_admissible(c))
            throw invariant_error("catalog inconsistency: inadmissible k factor " + to_string(c));
    e.k_weyl_order = weyl_order_closed_form(e.k_type).value;

    // Cross-check the catalog data against the involution machinery.
    RootSystem rs = build_root_system(e.g_type);
    std::vector<int> perm = involution_permutation(e.g_type, e.involution_spec);
    DiagramInvolution inv = make_involution(std::move(rs), perm);
    TorusSplit split = split_torus(inv);
    if (static_cast<int>(split.t_k_basis.size()) != e.rank_k)
        throw invariant_error("catalog inconsistency: rank_k = " + std::to_string(e.rank_k) +
                              " but dim t_k = " + std::to_string(split.t_k_basis.size()) +
                              " for " + label);
    if (e.rank_g - e.rank_k > e.rank_space)
        throw invariant_error("catalog inconsistency: rank_g - rank_k exceeds rank of the space for " +
                              label);
    if (computed_regime(e, perm) != e.regime)
        throw invariant_error("catalog inconsistency: declared regime " + to_string(e.regime) +
                              " does not match the computed one for " + label);
    return e;
}

namespace {

using nlohmann::json;

TypeList type_list_from_json(const json& j, const std::string& context) {
    if (!j.is_array()) throw input_error("catalog: " + context + " must be an array");
    TypeList t;
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_number_integer())
            throw input_error("catalog: " + context + " entries must be [series, rank] pairs");
        t.push_back({parse_series(item[0].get<std::string>()), item[1].get<int>()});
    }
    return t;
}

SymmetricPairEntry entry_from_row(const json& row) {
    if (!row.is_object()) throw input_error("catalog: entry is not an object");
    static const std::vector<std::string> known_keys = {
        "label", "params", "g_type", "involution", "k_type",
        "regime", "dim_M_formula", "provenance"};
    for (auto it = row.begin(); it != row.end(); ++it) {
        if (std::find(known_keys.begin(), known_keys.end(), it.key()) == known_keys.end())
            throw input_error("catalog: unknown key '" + it.key() + "'");
    }
    for (const std::string& key : known_keys)
        if (!row.contains(key)) throw input_error("catalog: missing key '" + key + "'");

    if (!row["label"].is_string()) throw input_error("catalog: label must be a string");
    std::string label = row["label"].get<std::string>();

    if (!row["params"].is_object()) throw input_error("catalog: params must be an object");
    std::map<std::string, long long> params;
    for (auto it = row["params"].begin(); it != row["params"].end(); ++it) {
        if (!it.value().is_number_integer())
            throw input_error("catalog: parameter '" + it.key() + "' must be an integer");
        params[it.key()] = it.value().get<long long>();
    }

    SymmetricPairEntry e = instantiate(label, params);

    // Every structural field of the row must agree with the generated entry.
    auto mismatch = [&](const std::string& field) {
        throw input_error("catalog inconsistency: field '" + field + "' of row '" + label +
                          "' does not match the '" + label + "' family");
    };
    if (type_list_from_json(row["g_type"], "g_type") != e.g_type) mismatch("g_type");
    if (!row["involution"].is_string() || row["involution"].get<std::string>() != e.involution_spec)
        mismatch("involution");
    if (type_list_from_json(row["k_type"], "k_type") != e.k_type) mismatch("k_type");
    if (!row["regime"].is_string() || parse_regime(row["regime"].get<std::string>()) != e.regime)
        mismatch("regime");
    if (!row["dim_M_formula"].is_string() ||
        row["dim_M_formula"].get<std::string>() != e.dim_formula)
        mismatch("dim_M_formula");
    if (!row["provenance"].is_string()) throw input_error("catalog: provenance must be a string");
    e.provenance = row["provenance"].get<std::string>();
    return e;
}

} // namespace

std::vector<SymmetricPairEntry> parse_catalog_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw input_error(std::string("catalog: invalid JSON: ") + err.what());
    }
    if (!doc.is_array()) throw input_error("catalog: document must be a JSON array");
    std::vector<SymmetricPairEntry> entries;
    for (const json& row : doc) entries.push_back(entry_from_row(row));
    return entries;
}

std::vector<SymmetricPairEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("catalog: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog_json(buf.str());
}

std::vector<SymmetricPairEntry> enumerate_suite() {
    try {
        return parse_catalog_json(embedded_catalog_json());
    } catch (const input_error& err) {
        // The embedded document is part of the artifact; a defect in it is an
        // internal inconsistency, not a user mistake.
        throw invariant_error(std::string("catalog inconsistency in embedded catalog: ") +
                              err.what());
    }
}

} // namespace isoform
