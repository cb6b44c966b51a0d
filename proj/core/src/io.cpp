#include "invred/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "invred/error.hpp"

namespace invred {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(path, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  return j.get<std::int64_t>();
}

std::uint64_t as_count(const json& j, const std::string& path) {
  const std::int64_t v = as_integer(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

Matrix parse_matrix(const json& j, Prime p, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a matrix");
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  const bool flat = !j.empty() && !j.front().is_array();
  if (flat) {
    if (j.size() != n * n) fail(path, "expected " + std::to_string(n * n) + " row-major entries");
    for (std::size_t k = 0; k < n * n; ++k) rows[k / n][k % n] = as_integer(j[k], path + "[" + std::to_string(k) + "]");
  } else {
    if (j.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_path = path + "[" + std::to_string(i) + "]";
      if (!j[i].is_array() || j[i].size() != n) fail(row_path, "expected " + std::to_string(n) + " entries");
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = as_integer(j[i][k], row_path + "[" + std::to_string(k) + "]");
    }
  }
  return Matrix::from_rows(p, rows);
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  const std::uint64_t p_raw = as_count(field(j, "p", ""), "p");
  if (!is_prime(p_raw) || p_raw > Prime::kMax) fail("p", std::to_string(p_raw) + " is not a supported prime");
  const Prime p(p_raw);
  const std::uint64_t n = as_count(field(j, "n", ""), "n");
  if (n == 0 || n > 4096) fail("n", "dimension must be between 1 and 4096");
  const json& gens = field(j, "generators", "");
  if (!gens.is_array() || gens.empty()) fail("generators", "expected a nonempty list of matrices");
  if (auto labels = j.find("labels"); labels != j.end()) {
    if (!labels->is_array() || labels->size() != gens.size()) fail("labels", "expected one label per generator");
    for (std::size_t i = 0; i < labels->size(); ++i) {
      if (!(*labels)[i].is_string()) fail("labels[" + std::to_string(i) + "]", "expected a string");
    }
  }
  std::vector<Matrix> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    Matrix g = parse_matrix(gens[i], p, n, path);
    try {
      mat_inv(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Singular) fail(path, "matrix is not invertible mod " + std::to_string(p_raw));
      throw;
    }
    generators.push_back(std::move(g));
  }
  return GroupSpec(p, n, std::move(generators));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json(std::vector<std::uint32_t>(m.row(i).begin(), m.row(i).end())));
  return rows;
}

json to_json(const GroupSpec& spec) {
  json gens = json::array();
  for (const auto& g : spec.generators()) gens.push_back(to_json(g));
  return json{{"p", spec.prime().value()}, {"n", spec.dimension()}, {"generators", gens}};
}

Polynomial polynomial_from_json(const json& j, Prime p, std::size_t nvars) {
  const json* terms = &j;
  std::string base = "";
  if (j.is_object()) {
    if (auto it = j.find("nvars"); it != j.end() && as_count(*it, "nvars") != nvars) {
      fail("nvars", "expected " + std::to_string(nvars) + " variables");
    }
    terms = &field(j, "terms", "");
    base = "terms";
  }
  if (!terms->is_array()) fail(base.empty() ? "<root>" : base, "expected a list of terms");
  Polynomial f(p, nvars);
  for (std::size_t t = 0; t < terms->size(); ++t) {
    const std::string path = base + "[" + std::to_string(t) + "]";
    const json& term = (*terms)[t];
    const json& exps = field(term, "exponents", path);
    if (!exps.is_array() || exps.size() != nvars) {
      fail(path + ".exponents", "expected " + std::to_string(nvars) + " exponents");
    }
    std::vector<std::uint32_t> e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      const std::uint64_t x = as_count(exps[i], path + ".exponents[" + std::to_string(i) + "]");
      if (x > UINT32_MAX) fail(path + ".exponents[" + std::to_string(i) + "]", "exponent too large");
      e[i] = static_cast<std::uint32_t>(x);
    }
    f.add_term(Monomial(std::move(e)), FieldElement(as_integer(field(term, "coeff", path), path + ".coeff"), p));
  }
  return f;
}

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(json{{"exponents", m.exponents()}, {"coeff", c}});
  return terms;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.residue());
  return out;
}

Vector parse_vector(std::string_view csv, Prime p, std::size_t n) {
  Vector v;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    std::string_view item = csv.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      fail("vector[" + std::to_string(v.size()) + "]", "'" + std::string(item) + "' is not an integer");
    }
    v.emplace_back(value, p);
    start = comma + 1;
  }
  if (v.size() != n) {
    fail("vector", "expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].residue());
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

GroupSpec load_group_spec(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return group_spec_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

Polynomial load_polynomial(const std::filesystem::path& path, Prime p, std::size_t nvars) {
  const json j = read_json_file(path);
  try {
    return polynomial_from_json(j, p, nvars);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace invred
