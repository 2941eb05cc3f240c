#include "hsymp/json_io.hpp"

#include <fstream>

#include "hsymp/errors.hpp"

namespace hsymp {

ordered_json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return ordered_json(q.get_num().get_si());
  return ordered_json(to_string(q));
}

Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw input_error("rational entries must be integers or 'p/q' strings");
}

namespace {

std::vector<Rational> parse_cube(const ordered_json& j, std::size_t m, const char* name) {
  if (!j.is_array() || j.size() != m)
    throw input_error(std::string(name) + " must be an m x m x m array");
  std::vector<Rational> out(m * m * m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& plane = j[k];
    if (!plane.is_array() || plane.size() != m)
      throw input_error(std::string(name) + " must be an m x m x m array");
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = plane[i];
      if (!row.is_array() || row.size() != m)
        throw input_error(std::string(name) + " must be an m x m x m array");
      for (std::size_t jj = 0; jj < m; ++jj)
        out[(k * m + i) * m + jj] = rational_from_json(row[jj]);
    }
  }
  return out;
}

ordered_json cube_to_json(const Connection& c) {
  const std::size_t m = c.dim();
  ordered_json out = ordered_json::array();
  for (std::size_t k = 0; k < m; ++k) {
    ordered_json plane = ordered_json::array();
    for (std::size_t i = 0; i < m; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < m; ++j) row.push_back(rational_to_json(c.gamma(k, i, j)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

}  // namespace

DataTriple parse_data_json(const ordered_json& j) {
  if (!j.is_object()) throw input_error("data file must hold a JSON object");
  for (const char* key : {"dim", "nabla", "nabla_prime", "omega"})
    if (!j.contains(key)) throw input_error(std::string("data file is missing '") + key + "'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw input_error("'dim' must be a positive integer");
  const auto m = j["dim"].get<std::size_t>();

  const auto& om = j["omega"];
  if (!om.is_array() || om.size() != m) throw input_error("'omega' must be an m x m matrix");
  RatMatrix w(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!om[i].is_array() || om[i].size() != m)
      throw input_error("'omega' must be an m x m matrix");
    for (std::size_t jj = 0; jj < m; ++jj) w.at(i, jj) = rational_from_json(om[i][jj]);
  }
  return {Connection(m, parse_cube(j["nabla"], m, "'nabla'")),
          Connection(m, parse_cube(j["nabla_prime"], m, "'nabla_prime'")),
          SymplecticForm(std::move(w))};
}

DataTriple read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("cannot parse '" + path + "': " + e.what());
  }
  return parse_data_json(j);
}

ordered_json data_to_json(const Connection& nabla, const Connection& nabla_prime,
                          const SymplecticForm& omega) {
  ordered_json j;
  j["dim"] = omega.dim();
  j["nabla"] = cube_to_json(nabla);
  j["nabla_prime"] = cube_to_json(nabla_prime);
  ordered_json w = ordered_json::array();
  for (std::size_t i = 0; i < omega.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t jj = 0; jj < omega.dim(); ++jj)
      row.push_back(rational_to_json(omega.matrix().at(i, jj)));
    w.push_back(std::move(row));
  }
  j["omega"] = std::move(w);
  return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

ordered_json brackets_to_json(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  ordered_json out;
  out["dim"] = d;
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVec b = L.bracket_basis(i, j);
      if (is_zero(b)) continue;
      ordered_json entry;
      entry["i"] = i + 1;
      entry["j"] = j + 1;
      ordered_json coeffs = ordered_json::array();
      for (const Rational& q : b) coeffs.push_back(to_string(q));
      entry["coeffs"] = std::move(coeffs);
      list.push_back(std::move(entry));
    }
  out["brackets"] = std::move(list);
  return out;
}

}  // namespace hsymp
