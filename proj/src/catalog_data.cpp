#include "isoform/catalog.hpp"

namespace isoform {

// The built-in verification suite. Kept as a JSON document so external
// catalogs use the exact same schema and code path; see docs/formats.md.
const char* embedded_catalog_json() {
    return R"json([
  {"label": "AI", "params": {"n": 3}, "g_type": [["A", 2]], "involution": "flip",
   "k_type": [["B", 1]], "regime": "outer_nonsplit", "dim_M_formula": "two_pow_m",
   "provenance": "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7"},
  {"label": "AI", "params": {"n": 4}, "g_type": [["A", 3]], "involution": "flip",
   "k_type": [["D", 2]], "regime": "outer_nonsplit", "dim_M_formula": "two_pow_m",
   "provenance": "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7"},
  {"label": "AI", "params": {"n": 5}, "g_type": [["A", 4]], "involution": "flip",
   "k_type": [["B", 2]], "regime": "outer_nonsplit", "dim_M_formula": "two_pow_m",
   "provenance": "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7"},
  {"label": "AI", "params": {"n": 6}, "g_type": [["A", 5]], "involution": "flip",
   "k_type": [["D", 3]], "regime": "outer_nonsplit", "dim_M_formula": "two_pow_m",
   "provenance": "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7"},
  {"label": "AI", "params": {"n": 7}, "g_type": [["A", 6]], "involution": "flip",
   "k_type": [["B", 3]], "regime": "outer_nonsplit", "dim_M_formula": "two_pow_m",
   "provenance": "dim H*(SU(n)/SO(n)) = 2^[n/2]: Greub-Halperin-Vanstone p. 493; Mimura-Toda III.6.7"},
  {"label": "BDI-odd", "params": {"p": 1, "q": 1}, "g_type": [["D", 3]], "involution": "fork-swap",
   "k_type": [["B", 1], ["B", 1]], "regime": "outer_nonsplit", "dim_M_formula": "two_binom",
   "provenance": "dim H*(SO(2p+2q+2)/SO(2p+1)xSO(2q+1)) = 2 C(p+q,p): Greub-Halperin-Vanstone p. 496"},
  {"label": "BDI-odd", "params": {"p": 1, "q": 2}, "g_type": [["D", 4]], "involution": "fork-swap",
   "k_type": [["B", 1], ["B", 2]], "regime": "outer_nonsplit", "dim_M_formula": "two_binom",
   "provenance": "dim H*(SO(2p+2q+2)/SO(2p+1)xSO(2q+1)) = 2 C(p+q,p): Greub-Halperin-Vanstone p. 496"},
  {"label": "BDI-odd", "params": {"p": 2, "q": 2}, "g_type": [["D", 5]], "involution": "fork-swap",
   "k_type": [["B", 2], ["B", 2]], "regime": "outer_nonsplit", "dim_M_formula": "two_binom",
   "provenance": "dim H*(SO(2p+2q+2)/SO(2p+1)xSO(2q+1)) = 2 C(p+q,p): Greub-Halperin-Vanstone p. 496"},
  {"label": "EI", "params": {}, "g_type": [["E", 6]], "involution": "flip",
   "k_type": [["C", 4]], "regime": "outer_nonsplit", "dim_M_formula": "const:12",
   "provenance": "dim H*(E6/PSp(4)) = 12: Takeuchi"},
  {"label": "AII", "params": {"n": 2}, "g_type": [["A", 3]], "involution": "flip",
   "k_type": [["C", 2]], "regime": "split_rank", "dim_M_formula": "split_rank_power",
   "provenance": "split rank: dim H*(SU(2n)/Sp(n)) = 2^(n-1)"},
  {"label": "AII", "params": {"n": 3}, "g_type": [["A", 5]], "involution": "flip",
   "k_type": [["C", 3]], "regime": "split_rank", "dim_M_formula": "split_rank_power",
   "provenance": "split rank: dim H*(SU(2n)/Sp(n)) = 2^(n-1)"},
  {"label": "EIV", "params": {}, "g_type": [["E", 6]], "involution": "flip",
   "k_type": [["F", 4]], "regime": "split_rank", "dim_M_formula": "split_rank_power",
   "provenance": "split rank: dim H*(E6/F4) = 2^2"},
  {"label": "TypeII-A1", "params": {}, "g_type": [["A", 1], ["A", 1]], "involution": "factor-swap",
   "k_type": [["A", 1]], "regime": "group_type_II", "dim_M_formula": "split_rank_power",
   "provenance": "dim H*(G) = 2^rank(G): exterior algebra on rank(G) generators"},
  {"label": "TypeII-A2", "params": {}, "g_type": [["A", 2], ["A", 2]], "involution": "factor-swap",
   "k_type": [["A", 2]], "regime": "group_type_II", "dim_M_formula": "split_rank_power",
   "provenance": "dim H*(G) = 2^rank(G): exterior algebra on rank(G) generators"},
  {"label": "TypeII-B2", "params": {}, "g_type": [["B", 2], ["B", 2]], "involution": "factor-swap",
   "k_type": [["B", 2]], "regime": "group_type_II", "dim_M_formula": "split_rank_power",
   "provenance": "dim H*(G) = 2^rank(G): exterior algebra on rank(G) generators"},
  {"label": "TypeII-G2", "params": {}, "g_type": [["G", 2], ["G", 2]], "involution": "factor-swap",
   "k_type": [["G", 2]], "regime": "group_type_II", "dim_M_formula": "split_rank_power",
   "provenance": "dim H*(G) = 2^rank(G): exterior algebra on rank(G) generators"},
  {"label": "CI", "params": {"n": 2}, "g_type": [["C", 2]], "involution": "identity",
   "k_type": [["A", 1]], "regime": "equal_rank", "dim_M_formula": "equal_rank_quotient",
   "provenance": "equal rank: dim H*(Sp(n)/U(n)) = |W(g)|/|W(k)|"},
  {"label": "CI", "params": {"n": 3}, "g_type": [["C", 3]], "involution": "identity",
   "k_type": [["A", 2]], "regime": "equal_rank", "dim_M_formula": "equal_rank_quotient",
   "provenance": "equal rank: dim H*(Sp(n)/U(n)) = |W(g)|/|W(k)|"},
  {"label": "DIII", "params": {"n": 3}, "g_type": [["D", 3]], "involution": "identity",
   "k_type": [["A", 2]], "regime": "equal_rank", "dim_M_formula": "equal_rank_quotient",
   "provenance": "equal rank: dim H*(SO(2n)/U(n)) = |W(g)|/|W(k)|"},
  {"label": "G", "params": {}, "g_type": [["G", 2]], "involution": "identity",
   "k_type": [["A", 1], ["A", 1]], "regime": "equal_rank", "dim_M_formula": "equal_rank_quotient",
   "provenance": "equal rank: dim H*(G2/SO(4)) = |W(g)|/|W(k)|"}
])json";
}

} // namespace isoform
