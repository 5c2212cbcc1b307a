#pragma once

#include <json.hpp>
#include <string>

#include "ncomm/closed_forms.hpp"
#include "ncomm/identities.hpp"
#include "ncomm/matrix_oracle.hpp"
#include "ncomm/polynomial.hpp"

namespace ncomm {

// JSON serializations used by the CLI. Keys are emitted in sorted order and
// term lists in lexicographic word order, so equal values serialize to equal
// bytes. Poly coefficients are decimal strings (they are unbounded); table
// and generating-polynomial entries are plain integers.

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const CoeffTable& t);
nlohmann::json to_json(const GenPoly& g);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const ConsistencyReport& r);
nlohmann::json to_json(const FuzzReport& r);

/// Inverse of to_json(Poly).
Poly poly_from_json(const nlohmann::json& j);

std::string to_string(CommutatorKind kind);
CommutatorKind commutator_kind_from_string(const std::string& s);

}  // namespace ncomm
