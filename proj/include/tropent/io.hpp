#pragma once

#include <json.hpp>

#include "tropent/entropy.hpp"
#include "tropent/prevariety.hpp"
#include "tropent/sweep.hpp"

namespace tropent {

using json = nlohmann::json;

// {"n": int, "monomials": [{"coeff": "p/q", "exp": [ints]}]}
json poly_to_json(const TropicalPolynomial& f);
TropicalPolynomial poly_from_json(const json& j);

// {"n", "N", "equations": [{"terms": [{"c": "p/q", "k": [ints]}],
//  "source": int, "shift": [ints]}], "gens": [poly...]}
// "gens", "source" and "shift" are optional on input.
json system_to_json(const TropicalLinearSystem& system);
TropicalLinearSystem system_from_json(const json& j);

// {"n", "N", "values": ["p/q", ...]} in flattened grid order.
json grid_point_to_json(int n, long long N, const std::vector<Rat>& w);
std::vector<Rat> grid_point_from_json(const json& j, int& n, long long& N);

// {"n", "forms": [["p/q", ...], ...], "offsets": ["p/q", ...]}
// "offsets" is optional on input.
json forms_to_json(const std::vector<std::vector<Rat>>& forms,
                   const std::vector<Rat>* offsets = nullptr);
void forms_from_json(const json& j, std::vector<std::vector<Rat>>& forms,
                     std::vector<Rat>* offsets = nullptr);

// {"dim", "witness_pattern", "explored", "pruned", "elapsed_ms", "complete"}
json dim_result_to_json(const DimResult& r);

json sweep_outcome_to_json(const SweepOutcome& out, const Window& window,
                           const std::vector<Rat>& w);

json fit_to_json(const MaxPlusFit& fit);
json probe_to_json(const ProbeResult& probe);

const char* entry_status_name(EntryStatus s);

// Header "N,dim,ratio_exact,ratio_decimal,status" plus one row per N.
std::string entropy_csv(const EntropySequence& seq);
json bracket_to_json(const EntropyBracket& bracket);

}  // namespace tropent
