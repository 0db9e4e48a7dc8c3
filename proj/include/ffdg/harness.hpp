#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ffdg/embeddings.hpp"
#include "ffdg/fourier.hpp"
#include "ffdg/splitmix64.hpp"

namespace ffdg {

/// Bernoulli(density) inclusion per vector index, one SplitMix64 draw per
/// index in ascending order: include v iff draw/2^53 < density. The stream
/// layout is part of the file-format contract; identical (field, d, density,
/// seed) always yields the identical set.
PointSet random_set(const VectorSpace& space, double density,
                    std::uint64_t seed,
                    std::uint64_t index_budget = kDefaultIndexBudget);

/// Random complex table with re, im uniform in [-1, 1); two draws per index
/// (re first), ascending index order.
FunctionTable random_table(const VectorSpace& space, std::uint64_t seed);

/// Resolves a graph source: a path to a graph file, or a generator
/// descriptor "kind:n", "kind:n:<lambda>", "kind:n:rand" (rand draws edge
/// lengths below q from SplitMix64 seeded with `seed`).
DistanceGraph load_graph_source(const std::string& source, std::uint32_t q,
                                std::uint64_t seed);

/// Everything run_experiment needs, fully explicit so that a spec echoes
/// into the report and two equal specs produce byte-identical output.
///
/// graph_source is either a path to a graph file or a generator descriptor
/// "kind:n", "kind:n:<lambda>", "kind:n:rand" (rand draws edge lengths from
/// SplitMix64 seeded with `seed`).
struct ExperimentSpec {
  std::string field_spec = "3";
  int d = 2;
  std::string suite = "all";  // sigma | distance | sums | asymptotic | genuine | all
  std::string graph_source;   // empty: no graph suites
  std::string set_file;       // empty: use density/full space
  std::optional<double> density;
  std::uint64_t seed = 0;
  std::optional<Elem> lambda;  // restrict sphere-indexed suites to one shell
  std::uint64_t index_budget = kDefaultIndexBudget;
  std::uint64_t count_budget = kDefaultCountBudget;
};

struct ExperimentSummary {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t failed = 0;
};

struct ExperimentResult {
  std::string json;  // complete report document, newline-terminated
  ExperimentSummary summary;
};

/// Runs the selected suite and renders the report. The caller decides the
/// exit status; the contract is nonzero iff summary.failed > 0.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Number of random (f, g) pairs per kind in the distance suite.
constexpr int kDistancePairs = 100;

}  // namespace ffdg
