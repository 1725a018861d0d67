#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "mcliff/extensor.hpp"

namespace mcliff::io {

using json = nlohmann::ordered_json;

// Parsed problem file. Matrices arrive row-major (flat or nested rows),
// bases as a list of n row vectors, multivectors as sparse [mask, coeff]
// pairs keyed by label.
struct ProblemSpec {
  int n = 0;
  std::optional<LinearExtensor> metric;
  std::optional<LinearExtensor> extensor;
  std::optional<LinearExtensor> basis;  // columns are the basis vectors
  std::map<std::string, Multivector> multivectors;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;

  const Multivector& multivector(const std::string& label) const;
};

// n_override = 0 means "take n from the file" (then required there).
ProblemSpec parse_spec(const std::string& text, int n_override = 0);
ProblemSpec load_spec(const std::string& path, int n_override = 0);

json multivector_to_json(const Multivector& x);
Multivector multivector_from_json(int n, const json& j);
json matrix_to_json(const LinearExtensor& t);

// Reports carry a fixed key order so identical runs serialize identically;
// wall_time_ms always sits on its own line at the end.
struct Report {
  json body;
  bool pass = true;

  explicit Report(const std::string& command);
  void set_option(const std::string& key, const json& value);
  void set_output(const std::string& key, const json& value);
  void add_check(const std::string& name, double residual, double tolerance);
  std::string finalize(double wall_ms);
};

}  // namespace mcliff::io
