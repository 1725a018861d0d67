#include "mcliff/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcliff/common.hpp"
#include "mcliff/extensor.hpp"
#include "mcliff/gauge.hpp"
#include "mcliff/hodge.hpp"
#include "mcliff/io.hpp"
#include "mcliff/metric.hpp"
#include "mcliff/multivector.hpp"
#include "mcliff/verify.hpp"

namespace mcliff::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Options shared by every subcommand.  The option pointers let the dispatch
// code tell "flag given" apart from "default value", since a flag always wins
// over the problem file.
struct Common {
  std::string input;
  std::string output;
  int n = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
};

void add_common(CLI::App* cmd, Common& o) {
  cmd->add_option("--input", o.input, "problem file (json)");
  cmd->add_option("--n", o.n, "space dimension; overrides or completes the file")
      ->check(CLI::PositiveNumber);
  o.seed_opt = cmd->add_option("--seed", o.seed, "rng seed");
  o.tol_opt = cmd->add_option("--tolerance", o.tolerance, "residual tolerance")
                  ->check(CLI::PositiveNumber);
  cmd->add_option("--output", o.output, "write the json report here instead of stdout");
}

io::ProblemSpec load(const Common& o) {
  if (!o.input.empty()) return io::load_spec(o.input, o.n);
  if (o.n <= 0) throw parse_error("either --input or --n is required");
  require_dim(o.n);
  io::ProblemSpec spec;
  spec.n = o.n;
  return spec;
}

MetricExtensor metric_of(const io::ProblemSpec& spec) {
  if (spec.metric) return MetricExtensor(*spec.metric);
  return MetricExtensor::identity(spec.n);
}

BasisPair basis_of(const io::ProblemSpec& spec) {
  if (spec.basis) return BasisPair::from_extensor(*spec.basis);
  return BasisPair::fiducial(spec.n);
}

std::uint64_t pick_seed(const Common& o, const io::ProblemSpec& spec) {
  if (o.seed_opt && o.seed_opt->count() > 0) return o.seed;
  if (spec.seed) return *spec.seed;
  return 0;
}

double pick_tolerance(const Common& o, const io::ProblemSpec& spec, double fallback) {
  if (o.tol_opt && o.tol_opt->count() > 0) return o.tolerance;
  if (spec.tolerance) return *spec.tolerance;
  return fallback;
}

void emit(const Common& o, io::Report& rep, Clock::time_point start) {
  const std::string text = rep.finalize(elapsed_ms(start));
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw parse_error("cannot open output file '" + o.output + "'");
  out << text;
}

int cmd_factor(const Common& o) {
  const auto start = Clock::now();
  const io::ProblemSpec spec = load(o);
  const MetricExtensor g = metric_of(spec);
  const double tol = pick_tolerance(o, spec, 1e-9);

  io::Report rep("factor");
  rep.set_option("n", spec.n);
  rep.set_option("tolerance", tol);
  rep.set_output("h", io::matrix_to_json(g.gauge().h));
  rep.set_output("eta", io::json(g.gauge().eta_diag()));
  rep.set_output("signature", io::json::array({g.p(), g.q()}));
  rep.set_output("det", g.det());
  rep.set_output("eigenvalues", io::json(g.spectral().eigenvalues));
  rep.add_check("factorization_reconstruction",
                factorization_residual(g.gauge(), g.matrix()), tol);
  emit(o, rep, start);
  return 0;
}

int cmd_product(const Common& o, const std::string& op, const std::string& lhs,
                const std::string& rhs) {
  const auto start = Clock::now();
  const io::ProblemSpec spec = load(o);
  const MetricExtensor g = metric_of(spec);
  const Multivector x = spec.multivector(lhs);
  const Multivector y = spec.multivector(rhs);

  io::Report rep("product");
  rep.set_option("n", spec.n);
  rep.set_option("op", op);
  rep.set_option("lhs", lhs);
  rep.set_option("rhs", rhs);
  if (op == "scalar") {
    rep.set_output("scalar", g_scalar(g, x, y));
  } else {
    Multivector result = Multivector::scalar(spec.n, 0.0);
    if (op == "wedge") {
      result = wedge(x, y);
    } else if (op == "lcontract") {
      result = g_left_contract(g, x, y);
    } else if (op == "rcontract") {
      result = g_right_contract(g, x, y);
    } else {
      result = g_clifford(g, x, y);
    }
    rep.set_output("result", io::multivector_to_json(result));
  }
  emit(o, rep, start);
  return 0;
}

int cmd_hodge(const Common& o, const std::string& variant, const std::string& label) {
  const auto start = Clock::now();
  const io::ProblemSpec spec = load(o);
  const Multivector x = spec.multivector(label);
  const double tol = pick_tolerance(o, spec, 1e-9);
  const BasisPair e = basis_of(spec);

  io::Report rep("hodge");
  rep.set_option("n", spec.n);
  rep.set_option("variant", variant);
  rep.set_option("mv", label);
  rep.set_option("tolerance", tol);
  if (variant == "standard") {
    const Multivector tau = std_tau(e, tol);
    const Multivector result = std_hodge(x, tau);
    rep.set_output("tau", io::multivector_to_json(tau));
    rep.set_output("result", io::multivector_to_json(result));
    rep.add_check("inverse_roundtrip", rel_residual(std_hodge_inv(result, tau), x), tol);
  } else {
    if (!spec.metric) throw parse_error("variant=metric needs a metric in the problem file");
    const MetricExtensor g = metric_of(spec);
    const VolumeData vol = volume_data(g, e, tol);
    const Multivector result = metric_hodge(g, x, vol.tau_g);
    rep.set_output("tau_g", io::multivector_to_json(vol.tau_g));
    rep.set_output("det", vol.det_g);
    rep.set_output("result", io::multivector_to_json(result));
    rep.add_check("inverse_roundtrip",
                  rel_residual(metric_hodge_inv(g, result, vol.tau_g), x), tol);
    const auto [lhs, rhs] = hodge_relation_standard(g, x);
    rep.add_check("standard_map_relation", rel_residual(lhs, rhs), tol);
  }
  emit(o, rep, start);
  return 0;
}

int cmd_verify(const Common& o, const std::string& suite_name, int trials) {
  const auto start = Clock::now();
  const io::ProblemSpec spec = load(o);
  const MetricExtensor g = metric_of(spec);
  const std::uint64_t seed = pick_seed(o, spec);
  const double tol = pick_tolerance(o, spec, 1e-8);
  const verify::Suite suite = verify::suite_from_name(suite_name);

  const verify::SuiteReport result = verify::run_suite(g, suite, seed, trials, tol);

  io::Report rep("verify");
  rep.set_option("n", spec.n);
  rep.set_option("suite", verify::suite_name(suite));
  rep.set_option("seed", seed);
  rep.set_option("trials", trials);
  rep.set_option("tolerance", tol);
  int passed = 0;
  for (const verify::IdentityResult& id : result.identities) {
    rep.add_check(id.name, id.max_residual, id.tolerance);
    if (id.pass) ++passed;
  }
  rep.set_output("identities_total", static_cast<int>(result.identities.size()));
  rep.set_output("identities_passed", passed);
  emit(o, rep, start);
  return result.all_pass ? 0 : 3;
}

int cmd_bases(const Common& o) {
  const auto start = Clock::now();
  const io::ProblemSpec spec = load(o);
  const MetricExtensor g = metric_of(spec);
  const double tol = pick_tolerance(o, spec, 1e-8);
  const BasisPair e = basis_of(spec);
  const LinearExtensor f =
      spec.extensor ? *spec.extensor : LinearExtensor::identity(spec.n);

  const BasisPair metric_pair = reciprocal_bases(f, g, e);
  const BasisPair gauge_pair = gauge_bases(g.gauge(), e);

  io::Report rep("bases");
  rep.set_option("n", spec.n);
  rep.set_option("tolerance", tol);
  rep.set_output("metric_lower", io::matrix_to_json(metric_pair.lower));
  rep.set_output("metric_upper", io::matrix_to_json(metric_pair.upper));
  rep.set_output("gauge_lower", io::matrix_to_json(gauge_pair.lower));
  rep.set_output("gauge_upper", io::matrix_to_json(gauge_pair.upper));
  rep.add_check("metric_reciprocity", g_reciprocity_residual(g, metric_pair), tol);
  rep.add_check("gauge_b_reciprocity", gauge_pair.b_reciprocity_residual(), tol);

  // The gauge images must reproduce the metric grams of the source basis:
  // eta-grams of the lower images match g-grams, upper images match
  // inverse-g grams.
  const int n = spec.n;
  double gram_low = 0.0;
  double gram_up = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Multivector ej = e.lower_vector(j);
      const Multivector ek = e.lower_vector(k);
      const Multivector uj = e.upper_vector(j);
      const Multivector uk = e.upper_vector(k);
      gram_low = std::max(gram_low,
                          rel_residual(diag_scalar(gauge_pair.lower_vector(j),
                                                   gauge_pair.lower_vector(k),
                                                   g.eta()),
                                       g_scalar(g, ej, ek)));
      gram_up = std::max(gram_up,
                         rel_residual(diag_scalar(gauge_pair.upper_vector(j),
                                                  gauge_pair.upper_vector(k),
                                                  g.eta()),
                                      g_inv_scalar(g, uj, uk)));
    }
  }
  rep.add_check("gauge_metric_gram", gram_low, tol);
  rep.add_check("gauge_inverse_gram", gram_up, tol);
  emit(o, rep, start);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"metric clifford algebra kernel"};
  app.require_subcommand(1);

  Common factor_opts;
  Common product_opts;
  Common hodge_opts;
  Common verify_opts;
  Common bases_opts;

  CLI::App* factor = app.add_subcommand("factor", "factor a metric through a flat gauge");
  add_common(factor, factor_opts);

  CLI::App* product = app.add_subcommand("product", "evaluate one product of two multivectors");
  add_common(product, product_opts);
  std::string op;
  std::string lhs = "X";
  std::string rhs = "Y";
  product->add_option("--op", op, "wedge | scalar | lcontract | rcontract | clifford")
      ->required()
      ->check(CLI::IsMember({"wedge", "scalar", "lcontract", "rcontract", "clifford"}));
  product->add_option("--lhs", lhs, "label of the left factor");
  product->add_option("--rhs", rhs, "label of the right factor");

  CLI::App* hodge = app.add_subcommand("hodge", "apply the duality map to a multivector");
  add_common(hodge, hodge_opts);
  std::string variant = "metric";
  std::string mv_label = "X";
  hodge->add_option("--variant", variant, "standard | metric")
      ->check(CLI::IsMember({"standard", "metric"}));
  hodge->add_option("--mv", mv_label, "label of the multivector");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run randomized identity suites");
  add_common(verify_cmd, verify_opts);
  std::string suite = "all";
  int trials = 100;
  verify_cmd->add_option("--suite", suite, "all | metric-products | gauge | golden | hodge")
      ->check(CLI::IsMember({"all", "metric-products", "gauge", "golden", "hodge"}));
  verify_cmd->add_option("--trials", trials, "random trials per identity")
      ->check(CLI::PositiveNumber);

  CLI::App* bases = app.add_subcommand("bases", "reciprocal and gauge bases for a frame");
  add_common(bases, bases_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (factor->parsed()) return cmd_factor(factor_opts);
    if (product->parsed()) return cmd_product(product_opts, op, lhs, rhs);
    if (hodge->parsed()) return cmd_hodge(hodge_opts, variant, mv_label);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, suite, trials);
    if (bases->parsed()) return cmd_bases(bases_opts);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace mcliff::cli
