#pragma once

#include <string>

#include <json.hpp>

#include "hsymp/connection.hpp"
#include "hsymp/lie_algebra.hpp"

namespace hsymp {

using ordered_json = nlohmann::ordered_json;

/// Unvalidated triple as read from a data file.
struct DataTriple {
  Connection nabla;
  Connection nabla_prime;
  SymplecticForm omega;
};

/// Data file layout:
///   { "dim": m,
///     "nabla": [[[q, ...], ...], ...],        // nabla[k][i][j] = k-th
///     "nabla_prime": ...,                     //   component of D_{e_i} e_j
///     "omega": [[q, ...], ...] }
/// with every rational q either a JSON integer or a "p/q" string.
/// Round-trips are exact.
DataTriple parse_data_json(const ordered_json& j);
DataTriple read_data_file(const std::string& path);
ordered_json data_to_json(const Connection& nabla, const Connection& nabla_prime,
                          const SymplecticForm& omega);
void write_json_file(const std::string& path, const ordered_json& j);

/// Nonzero brackets [b_i, b_j], i < j, with 1-based indices:
///   { "dim": d, "brackets": [ { "i": ..., "j": ..., "coeffs": [...] } ] }
/// Coefficients are rational strings.
ordered_json brackets_to_json(const LieAlgebra& L);

ordered_json rational_to_json(const Rational& q);
Rational rational_from_json(const ordered_json& j);

}  // namespace hsymp
