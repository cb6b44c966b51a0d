#pragma once

// JSON forms of group specs, polynomials, vectors and matrices.
//
// Group spec:  {"p": 2, "n": 2, "generators": [[[1,1],[0,1]]], "labels": ["g"]}
//              (each generator may also be a flat row-major list of n*n integers)
// Polynomial:  {"terms": [{"exponents": [2,0], "coeff": 1}, ...]} or the bare term list
//
// Integers are reduced mod p on load. Malformed input raises
// ErrorCode::Parse with the offending field path in the message.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "invred/group.hpp"
#include "invred/matrix.hpp"
#include "invred/poly.hpp"

namespace invred {

GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);

Polynomial polynomial_from_json(const nlohmann::json& j, Prime p, std::size_t nvars);
/// Term list, leading term first.
nlohmann::json to_json(const Polynomial& f);

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Vector& v);

/// Comma-separated residues, e.g. "0,0,0,1".
Vector parse_vector(std::string_view csv, Prime p, std::size_t n);
std::string format_vector(const Vector& v);

/// Reads and parses a JSON document; syntax errors become ErrorCode::Parse.
nlohmann::json read_json_file(const std::filesystem::path& path);

GroupSpec load_group_spec(const std::filesystem::path& path);
Polynomial load_polynomial(const std::filesystem::path& path, Prime p, std::size_t nvars);

}  // namespace invred
