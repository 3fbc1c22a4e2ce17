#pragma once

// JSON form of a MatrixModule:
//   {"l", "presentation", "dim", "labels", "matrices": {gen: rows}}
// where each matrix entry is an array of phi(l) rational strings, constant
// term first. On input an entry may also be a literal string ("q^2 - 1") or
// an integer. K^-1 is never written; it is recomputed on input.

#include <string>
#include <vector>

#include "json.hpp"
#include "qsaa/rep.hpp"

namespace qsaa {

nlohmann::json cyclo_to_json(const CycloNum& x);
/// Throws Parse on malformed input.
CycloNum cyclo_from_json(int l, const nlohmann::json& j);

nlohmann::json module_to_json(const MatrixModule& m);
/// Throws Parse on schema errors; relation failures surface as
/// InvariantViolation when `verify` is set.
MatrixModule module_from_json(const nlohmann::json& j, bool verify = true);

MatrixModule read_module_file(const std::string& path, bool verify = true);

}  // namespace qsaa
