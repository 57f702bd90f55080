// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_IO_HPP
#define HYPERBORN_IO_HPP

#include <string>

#include "hyperborn/topology.hpp"
#include "nlohmann/json.hpp"

namespace hyperborn {

/// Instance grammar (JSON, UTF-8):
///   space:    {"points": ["a","b"], "dist": [["0","1"],["1","0"]]}
///             rationals as decimal strings or "p/q"
///   ideal:    {"generators": [["a"],["b","c"]]}
///   family:   {"family": [[],["a"],["a","b"]]}  (or the bare array)
///   topology: {"topology": {"kind": "metric-lower" | "metric-upper" |
///              "metric-both" | "tau" | "miss" | "table", ...}}
///             tau takes "generators", miss takes "collection" (a list of
///             subsets), table takes "closed" (a list of families).
/// Subsets serialize as sorted label lists, families as subsets sorted by
/// size then pointwise; parse/serialize round-trips are lossless.

FiniteSpace parse_space(const nlohmann::json& j);
FiniteSpace parse_space_text(const std::string& text);
nlohmann::json space_to_json(const FiniteSpace& space);

Subset parse_subset(const FiniteSpace& space, const nlohmann::json& j);
nlohmann::json subset_to_json(const FiniteSpace& space, Subset s);

Family parse_family(const FiniteSpace& space, const nlohmann::json& j);
nlohmann::json family_to_json(const FiniteSpace& space, Family f);

Ideal parse_ideal(const FiniteSpace& space, const nlohmann::json& j);
nlohmann::json ideal_to_json(const FiniteSpace& space, const Ideal& s);

HyperTopology parse_topology(const FiniteSpace& space, const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

} // namespace hyperborn

#endif
