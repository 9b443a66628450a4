#include "parasol/manifest.hpp"

#include <fstream>
#include <sstream>

namespace parasol {

namespace {

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a rational string, got " + j.dump());
}

RatMatrix matrix_from_json(const nlohmann::json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " rows");
  RatMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw InputError(where + ": row " + std::to_string(i + 1) + " must have " +
                       std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      m.at(i, k) = rational_from_json(
          row.at(k), where + "[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]");
  }
  return m;
}

std::vector<Rational> vector_from_json(const nlohmann::json& j, int dim,
                                       const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " entries");
  std::vector<Rational> v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = rational_from_json(j.at(i), where + "[" + std::to_string(i + 1) + "]");
  return v;
}

}  // namespace

Manifest Manifest::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("manifest must be a JSON object");
  Manifest m;

  if (!j.contains("dim")) throw InputError("manifest field 'dim' is required");
  if (!j.at("dim").is_number_integer()) throw InputError("dim: expected an integer");
  m.dim = j.at("dim").get<int>();
  if (m.dim < 3 || m.dim % 2 == 0)
    throw InputError("dim must be an odd integer >= 3, got " + std::to_string(m.dim));

  if (j.contains("parameters")) {
    if (!j.at("parameters").is_array()) throw InputError("parameters: expected an array");
    for (const auto& p : j.at("parameters")) {
      if (!p.is_string()) throw InputError("parameters: entries must be strings");
      m.parameters.push_back(p.get<std::string>());
    }
  }

  const bool has_constants = j.contains("structure_constants");
  const bool has_chart = j.contains("chart_frame");
  if (has_constants == has_chart)
    throw InputError("manifest must contain exactly one of structure_constants / chart_frame");

  if (has_constants) {
    std::vector<std::tuple<int, int, int, Rational>> triples;
    const auto& list = j.at("structure_constants");
    if (!list.is_array()) throw InputError("structure_constants: expected an array");
    for (std::size_t r = 0; r < list.size(); ++r) {
      const auto& entry = list.at(r);
      const std::string where = "structure_constants[" + std::to_string(r) + "]";
      if (!entry.is_array() || entry.size() != 4)
        throw InputError(where + ": expected [i, j, k, value]");
      int i = entry.at(0).get<int>(), jj = entry.at(1).get<int>(), k = entry.at(2).get<int>();
      for (int idx : {i, jj, k})
        if (idx < 1 || idx > m.dim)
          throw InputError(where + ": index " + std::to_string(idx) + " out of range 1.." +
                           std::to_string(m.dim));
      triples.emplace_back(i, jj, k, rational_from_json(entry.at(3), where + "[3]"));
    }
    m.structure_constants = std::move(triples);
  } else {
    const auto& rows = j.at("chart_frame");
    if (!rows.is_array() || static_cast<int>(rows.size()) != m.dim)
      throw InputError("chart_frame: expected " + std::to_string(m.dim) + " rows");
    std::vector<std::vector<std::string>> frame;
    for (int i = 0; i < m.dim; ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || static_cast<int>(row.size()) != m.dim)
        throw InputError("chart_frame: row " + std::to_string(i + 1) + " must have " +
                         std::to_string(m.dim) + " entries");
      std::vector<std::string> out_row;
      for (int a = 0; a < m.dim; ++a) {
        const auto& cell = row.at(a);
        if (cell.is_number_integer())
          out_row.push_back(std::to_string(cell.get<long long>()));
        else if (cell.is_string())
          out_row.push_back(cell.get<std::string>());
        else
          throw InputError("chart_frame: entries must be expression strings or integers");
      }
      frame.push_back(std::move(out_row));
    }
    m.chart_frame = std::move(frame);
  }

  m.g = j.contains("g") ? matrix_from_json(j.at("g"), m.dim, "g") : RatMatrix::identity(m.dim);

  if (!j.contains("phi")) throw InputError("manifest field 'phi' is required");
  m.phi = matrix_from_json(j.at("phi"), m.dim, "phi");

  if (!j.contains("xi")) throw InputError("manifest field 'xi' is required");
  m.xi = vector_from_json(j.at("xi"), m.dim, "xi");

  if (j.contains("eta")) {
    m.eta = vector_from_json(j.at("eta"), m.dim, "eta");
  } else {
    m.eta.assign(m.dim, 0);
    for (int i = 0; i < m.dim; ++i)
      for (int k = 0; k < m.dim; ++k) m.eta[i] += m.g.at(i, k) * m.xi[k];
  }

  if (j.contains("potential")) {
    const auto& pot = j.at("potential");
    if (!pot.is_array() || static_cast<int>(pot.size()) != m.dim)
      throw InputError("potential: expected " + std::to_string(m.dim) + " expression strings");
    std::vector<std::string> coeffs;
    for (const auto& c : pot) {
      if (c.is_number_integer())
        coeffs.push_back(std::to_string(c.get<long long>()));
      else if (c.is_string())
        coeffs.push_back(c.get<std::string>());
      else
        throw InputError("potential: entries must be expression strings or integers");
    }
    m.potential = std::move(coeffs);
  }

  if (j.contains("expected")) {
    const auto& e = j.at("expected");
    if (!e.is_object()) throw InputError("expected: must be an object");
    ExpectedValues expected;
    if (e.contains("tau")) expected.tau = e.at("tau").get<std::string>();
    if (e.contains("tau_assoc")) expected.tau_assoc = e.at("tau_assoc").get<std::string>();
    auto read_triple = [&](const char* key) -> std::optional<std::array<std::string, 3>> {
      if (!e.contains(key)) return std::nullopt;
      const auto& arr = e.at(key);
      if (!arr.is_array() || arr.size() != 3)
        throw InputError(std::string("expected.") + key + ": expected 3 entries");
      return std::array<std::string, 3>{arr.at(0).get<std::string>(),
                                        arr.at(1).get<std::string>(),
                                        arr.at(2).get<std::string>()};
    };
    expected.einstein_fit = read_triple("einstein_fit");
    expected.soliton_constants = read_triple("soliton_constants");
    m.expected = std::move(expected);
  }

  return m;
}

Manifest Manifest::from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("manifest JSON parse error: ") + e.what());
  }
  return from_json(j);
}

Manifest Manifest::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open manifest file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

}  // namespace parasol
