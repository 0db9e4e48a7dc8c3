// ffdg: character sums, spheres, random sets, embedding counts and theorem
// verification over F_q^d from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ffdg/char_sums.hpp"
#include "ffdg/harness.hpp"
#include "ffdg/json_writer.hpp"

namespace {

using namespace ffdg;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + out_path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string csv_cell(double v) { return format_double(v); }

int cmd_field(const std::string& q_spec, const std::string& out_path) {
  auto field = FiniteField::parse_spec(q_spec);
  std::string out;
  out += "spec " + field->spec_string() + "\n";
  out += "p " + std::to_string(field->p()) + "\n";
  out += "k " + std::to_string(field->k()) + "\n";
  out += "q " + std::to_string(field->q()) + "\n";
  if (field->k() > 1) {
    out += "modulus ";
    for (std::size_t i = 0; i < field->modulus().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(field->modulus()[i]);
    }
    out += "\n";
  }
  out += "generator " + std::to_string(field->generator()) + "\n";
  out += "eta_minus_one " + std::to_string(field->eta_minus_one()) + "\n";
  write_output(out, out_path);
  return 0;
}

void append_sum_row(std::string& out, const CharSumRecord& rec) {
  out += to_string(rec.kind);
  out += ',';
  if (rec.kind != CharSumKind::gauss) {
    out += std::to_string(rec.a) + "," + std::to_string(rec.b);
  } else {
    out += ",";
  }
  out += ',' + csv_cell(rec.value.real()) + ',' + csv_cell(rec.value.imag());
  out += ',' + csv_cell(rec.magnitude) + ',' + csv_cell(rec.bound);
  out += ',';
  if (!rec.bound_applies)
    out += "na";
  else
    out += rec.within_bound() ? '1' : '0';
  out += '\n';
}

int cmd_sums(const std::string& q_spec, const std::string& out_path) {
  auto field = FiniteField::parse_spec(q_spec);
  std::string out = "kind,a,b,value_re,value_im,magnitude,bound,pass\n";
  append_sum_row(out, gauss_sum(*field));
  for (Elem a = 0; a < field->q(); ++a)
    for (Elem b = 0; b < field->q(); ++b)
      append_sum_row(out, kloosterman_sum(*field, a, b));
  for (Elem a = 0; a < field->q(); ++a)
    for (Elem b = 0; b < field->q(); ++b)
      append_sum_row(out, salie_sum(*field, a, b));
  write_output(out, out_path);
  return 0;
}

int cmd_sphere(const std::string& q_spec, int d, std::optional<Elem> lambda,
               const std::string& out_path) {
  auto field = FiniteField::parse_spec(q_spec);
  VectorSpace space(field, d);
  SphereIndex spheres(space);
  std::string out = "lambda,shell_size,sigma_mean,margin,bound,pass\n";
  Elem from = lambda.value_or(1);
  Elem to = lambda ? *lambda + 1 : field->q();
  if (lambda && (*lambda == 0 || *lambda >= field->q()))
    throw std::invalid_argument("lambda must be a nonzero field element");
  for (Elem l = from; l < to; ++l) {
    double margin = spheres.lemma_margin(l);
    double bound = spheres.lemma_bound();
    out += std::to_string(l) + ',' + std::to_string(spheres.shell_size(l));
    out += ',' + csv_cell(spheres.sigma_mean(l)) + ',' + csv_cell(margin);
    out += ',' + csv_cell(bound) + ',';
    out += (margin <= bound + 1e-9) ? '1' : '0';
    out += '\n';
  }
  write_output(out, out_path);
  return 0;
}

int cmd_gen_set(const std::string& q_spec, int d, double density,
                std::uint64_t seed, const std::string& out_path) {
  auto field = FiniteField::parse_spec(q_spec);
  VectorSpace space(field, d);
  PointSet set = random_set(space, density, seed);
  write_output(set.serialize(), out_path);
  return 0;
}

int cmd_count(const std::string& graph_source, const std::string& set_file,
              const std::string& q_spec, int d, std::optional<double> density,
              std::uint64_t seed, bool oracle, std::uint64_t budget,
              const std::string& out_path) {
  PointSet set = [&]() {
    if (!set_file.empty()) return PointSet::parse(read_file(set_file));
    if (q_spec.empty())
      throw std::invalid_argument("count needs --set or --q/--d");
    auto field = FiniteField::parse_spec(q_spec);
    VectorSpace space(field, d);
    if (density) return random_set(space, *density, seed);
    return PointSet::full(space);
  }();
  const VectorSpace& space = set.space();
  DistanceGraph graph =
      load_graph_source(graph_source, space.field().q(), seed);

  EmbeddingCount counts;
  if (oracle) {
    counts = count_bruteforce(set, graph, budget);
  } else {
    SphereIndex spheres(space);
    counts = count_backtracking(set, graph, spheres);
  }

  std::ostringstream out;
  out << "graph " << graph_source << "\n";
  out << "n " << graph.n() << "\n";
  out << "m " << graph.m() << "\n";
  out << "t " << graph.t() << "\n";
  out << "q " << space.field().spec_string() << "\n";
  out << "d " << space.dim() << "\n";
  out << "set_size " << set.count() << "\n";
  out << "alpha " << format_double(set.alpha()) << "\n";
  out << "C " << counts.tuples << "\n";
  out << "C_star " << counts.tuples_distinct << "\n";
  out << "N " << counts.normalized << "\n";
  out << "N_approx " << format_double(counts.normalized_f) << "\n";
  out << "N_star " << counts.normalized_distinct << "\n";
  out << "N_star_approx " << format_double(counts.normalized_distinct_f)
      << "\n";
  write_output(out.str(), out_path);
  return 0;
}

int cmd_verify(ExperimentSpec spec, const std::string& out_path) {
  ExperimentResult result = run_experiment(spec);
  write_output(result.json, out_path);
  return result.summary.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character sums, Fourier averages and distance-graph "
               "embedding counts over F_q^d"};
  app.require_subcommand(1);

  std::uint64_t default_budget = kDefaultCountBudget;
  if (const char* env = std::getenv("FFDG_BUDGET")) {
    try {
      default_budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ffdg: bad FFDG_BUDGET value '" << env << "'\n";
      return 2;
    }
  }

  std::string q_spec, out_path, graph_source, set_file, suite = "all";
  int d = 2;
  double density = -1.0;
  std::uint64_t seed = 0;
  std::uint64_t budget = default_budget;
  std::uint32_t lambda_raw = 0;
  bool oracle = false;

  auto* field_cmd = app.add_subcommand("field", "describe a finite field");
  field_cmd->add_option("--q", q_spec, "field spec p^k[/modulus]")->required();
  field_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* sums_cmd =
      app.add_subcommand("sums", "Gauss/Kloosterman/Salie sums as CSV");
  sums_cmd->add_option("--q", q_spec, "field spec")->required();
  sums_cmd->add_option("--out", out_path, "output path");

  auto* sphere_cmd =
      app.add_subcommand("sphere", "sphere sizes and sigma means as CSV");
  sphere_cmd->add_option("--q", q_spec, "field spec")->required();
  sphere_cmd->add_option("--d", d, "dimension")->required();
  auto* sphere_lambda =
      sphere_cmd->add_option("--lambda", lambda_raw, "single shell only");
  sphere_cmd->add_option("--out", out_path, "output path");

  auto* gen_cmd =
      app.add_subcommand("gen-set", "sample a Bernoulli point set file");
  gen_cmd->add_option("--q", q_spec, "field spec")->required();
  gen_cmd->add_option("--d", d, "dimension")->required();
  gen_cmd->add_option("--density", density, "inclusion probability")
      ->required();
  gen_cmd->add_option("--seed", seed, "SplitMix64 seed");
  gen_cmd->add_option("--out", out_path, "output path");

  auto* count_cmd =
      app.add_subcommand("count", "embedding counts C, C*, N, N*");
  count_cmd->add_option("--graph", graph_source,
                        "graph file or kind:n[:lambda|:rand]")
      ->required();
  count_cmd->add_option("--set", set_file, "point set file");
  count_cmd->add_option("--q", q_spec, "field spec (with --d, no --set)");
  count_cmd->add_option("--d", d, "dimension");
  auto* count_density = count_cmd->add_option(
      "--density", density, "Bernoulli density (default: full space)");
  count_cmd->add_option("--seed", seed, "SplitMix64 seed");
  count_cmd->add_flag("--oracle", oracle, "use the brute-force oracle");
  count_cmd->add_option("--budget", budget, "oracle tuple-check budget");
  count_cmd->add_option("--out", out_path, "output path");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite, emit JSON");
  verify_cmd->add_option("--suite", suite,
                         "sigma|distance|sums|asymptotic|genuine|all");
  verify_cmd->add_option("--q", q_spec, "field spec")->required();
  verify_cmd->add_option("--d", d, "dimension");
  verify_cmd->add_option("--graph", graph_source,
                         "graph file or kind:n[:lambda|:rand]");
  verify_cmd->add_option("--set", set_file, "point set file");
  auto* verify_density =
      verify_cmd->add_option("--density", density, "Bernoulli set density");
  verify_cmd->add_option("--seed", seed, "SplitMix64 seed");
  auto* verify_lambda =
      verify_cmd->add_option("--lambda", lambda_raw, "restrict to one shell");
  verify_cmd->add_option("--budget", budget, "oracle tuple-check budget");
  verify_cmd->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (field_cmd->parsed()) return cmd_field(q_spec, out_path);
    if (sums_cmd->parsed()) return cmd_sums(q_spec, out_path);
    if (sphere_cmd->parsed()) {
      std::optional<Elem> lambda;
      if (sphere_lambda->count() > 0) lambda = lambda_raw;
      return cmd_sphere(q_spec, d, lambda, out_path);
    }
    if (gen_cmd->parsed()) return cmd_gen_set(q_spec, d, density, seed, out_path);
    if (count_cmd->parsed()) {
      std::optional<double> dens;
      if (count_density->count() > 0) dens = density;
      return cmd_count(graph_source, set_file, q_spec, d, dens, seed, oracle,
                       budget, out_path);
    }
    if (verify_cmd->parsed()) {
      ExperimentSpec spec;
      spec.field_spec = q_spec;
      spec.d = d;
      spec.suite = suite;
      spec.graph_source = graph_source;
      spec.set_file = set_file;
      if (verify_density->count() > 0) spec.density = density;
      spec.seed = seed;
      if (verify_lambda->count() > 0) spec.lambda = lambda_raw;
      spec.count_budget = budget;
      return cmd_verify(std::move(spec), out_path);
    }
  } catch (const std::exception& err) {
    std::cerr << "ffdg: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
