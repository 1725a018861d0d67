#include "mcliff/io.hpp"

#include <fstream>
#include <sstream>

namespace mcliff::io {

namespace {

double as_finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw parse_error(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw parse_error(what + " must be finite");
  return v;
}

// flat row-major array or nested rows, n x n
LinearExtensor parse_matrix(const json& j, int n, const std::string& what) {
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  if (!j.is_array()) throw parse_error(what + " must be an array");
  if (!j.empty() && j.front().is_array()) {
    if (static_cast<int>(j.size()) != n)
      throw parse_error(what + " must have " + std::to_string(n) + " rows");
    for (const json& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw parse_error(what + " rows must have " + std::to_string(n) +
                          " entries");
      for (const json& v : row) entries.push_back(as_finite_number(v, what));
    }
  } else {
    if (static_cast<int>(j.size()) != n * n)
      throw parse_error(what + " must have " + std::to_string(n * n) +
                        " entries");
    for (const json& v : j) entries.push_back(as_finite_number(v, what));
  }
  return LinearExtensor::from_row_major(n, entries);
}

}  // namespace

const Multivector& ProblemSpec::multivector(const std::string& label) const {
  const auto it = multivectors.find(label);
  if (it == multivectors.end())
    throw parse_error("unknown multivector label '" + label + "'");
  return it->second;
}

ProblemSpec parse_spec(const std::string& text, int n_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid json: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("problem file must be a json object");

  ProblemSpec spec;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer())
      throw parse_error("n must be an integer");
    spec.n = j["n"].get<int>();
  }
  if (n_override > 0) {
    if (spec.n != 0 && spec.n != n_override)
      throw parse_error("--n disagrees with the n in the problem file");
    spec.n = n_override;
  }
  if (spec.n == 0) throw parse_error("n is required (file key or --n)");
  require_dim(spec.n);
  const int n = spec.n;

  if (j.contains("metric")) spec.metric = parse_matrix(j["metric"], n, "metric");
  if (j.contains("extensor"))
    spec.extensor = parse_matrix(j["extensor"], n, "extensor");
  if (j.contains("basis")) {
    // n listed vectors become the columns
    const LinearExtensor rows = parse_matrix(j["basis"], n, "basis");
    spec.basis = adjoint(rows);
  }
  if (j.contains("multivectors")) {
    const json& mvs = j["multivectors"];
    if (!mvs.is_object())
      throw parse_error("multivectors must be an object of label -> blades");
    for (const auto& [label, blades] : mvs.items())
      spec.multivectors.emplace(label, multivector_from_json(n, blades));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      throw parse_error("seed must be a non-negative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerance")) {
    const double tol = as_finite_number(j["tolerance"], "tolerance");
    if (tol <= 0.0) throw parse_error("tolerance must be positive");
    spec.tolerance = tol;
  }
  return spec;
}

ProblemSpec load_spec(const std::string& path, int n_override) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), n_override);
}

json multivector_to_json(const Multivector& x) {
  json out = json::array();
  for (blade_mask m = 0; m < x.size(); ++m)
    if (x[m] != 0.0) out.push_back(json::array({m, x[m]}));
  return out;
}

Multivector multivector_from_json(int n, const json& j) {
  if (!j.is_array())
    throw parse_error("multivector must be an array of [mask, coeff] pairs");
  Multivector x(n);
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer())
      throw parse_error("multivector entries must be [mask, coeff] pairs");
    const long long mask = pair[0].get<long long>();
    if (mask < 0 || mask >= static_cast<long long>(x.size()))
      throw parse_error("blade mask " + std::to_string(mask) +
                        " out of range for n=" + std::to_string(n));
    x[static_cast<blade_mask>(mask)] +=
        as_finite_number(pair[1], "multivector coefficient");
  }
  return x;
}

json matrix_to_json(const LinearExtensor& t) {
  json rows = json::array();
  for (int i = 0; i < t.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Report::Report(const std::string& command) {
  body["format"] = 1;
  body["command"] = command;
  body["options"] = json::object();
  body["outputs"] = json::object();
  body["checks"] = json::array();
}

void Report::set_option(const std::string& key, const json& value) {
  body["options"][key] = value;
}

void Report::set_output(const std::string& key, const json& value) {
  body["outputs"][key] = value;
}

void Report::add_check(const std::string& name, double residual,
                       double tolerance) {
  const bool ok = residual <= tolerance;
  body["checks"].push_back({{"name", name},
                            {"residual", residual},
                            {"tolerance", tolerance},
                            {"pass", ok}});
  pass = pass && ok;
}

std::string Report::finalize(double wall_ms) {
  body["pass"] = pass;
  body["wall_time_ms"] = wall_ms;
  return body.dump(2) + "\n";
}

}  // namespace mcliff::io
