#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ffdg/harness.hpp"
#include "ffdg/json_writer.hpp"

using namespace ffdg;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  REQUIRE(out.good());
  return path;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("splitmix64 reproduces the reference stream for seed 0") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
  SplitMix64 unit(12345);
  for (int i = 0; i < 1000; ++i) {
    double x = unit.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  SplitMix64 below(9);
  for (int i = 0; i < 1000; ++i) CHECK(below.next_below(6) < 6);
}

TEST_CASE("random_set follows the one-draw-per-index contract") {
  VectorSpace space(FiniteField::parse_spec("5"), 2);
  auto set = random_set(space, 0.37, 42);
  SplitMix64 rng(42);
  for (VecIndex v = 0; v < space.size(); ++v)
    CHECK(set.contains(v) == (rng.next_double() < 0.37));

  CHECK(random_set(space, 0.0, 7).count() == 0);
  CHECK(random_set(space, 1.0, 7).count() == space.size());
  CHECK(random_set(space, 0.37, 42).members() == set.members());
  CHECK(random_set(space, 0.37, 43).members() != set.members());

  // Cross-platform regression anchor: the exact seed-42 half-density plane.
  VectorSpace plane(FiniteField::parse_spec("3"), 2);
  CHECK(random_set(plane, 0.5, 42).members() ==
        std::vector<VecIndex>{1, 2, 3, 4, 6, 8});

  CHECK_THROWS_AS((void)random_set(space, -0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)random_set(space, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)random_set(space, 0.5, 0, 10), std::length_error);
}

TEST_CASE("random_table follows the two-draws-per-index contract") {
  VectorSpace space(FiniteField::parse_spec("3"), 2);
  auto table = random_table(space, 99);
  SplitMix64 rng(99);
  for (VecIndex v = 0; v < space.size(); ++v) {
    double re = 2.0 * rng.next_double() - 1.0;
    double im = 2.0 * rng.next_double() - 1.0;
    CHECK(table.at(v).real() == re);
    CHECK(table.at(v).imag() == im);
    CHECK(table.at(v).real() >= -1.0);
    CHECK(table.at(v).real() < 1.0);
  }
  CHECK(!table.is_spectrum());
}

TEST_CASE("graph sources: generators, files, failures") {
  CHECK(load_graph_source("path:3", 5, 0) ==
        DistanceGraph::generate(GraphKind::path, 3, 1));
  CHECK(load_graph_source("cycle:4:2", 5, 0) ==
        DistanceGraph::generate(GraphKind::cycle, 4, 2));
  CHECK(load_graph_source("complete:3:rand", 7, 11) ==
        DistanceGraph::generate_random_lengths(GraphKind::complete, 3, 7, 11));
  CHECK(load_graph_source("complete:3:rand", 7, 11) ==
        load_graph_source("complete:3:rand", 7, 11));

  auto g = DistanceGraph::make(3, {{0, 1, 2}, {1, 2, 1}});
  auto path = write_temp("ffdg_harness_graph.txt", g.serialize());
  CHECK(load_graph_source(path.string(), 5, 0) == g);

  CHECK_THROWS_AS((void)load_graph_source("tree:3", 5, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)load_graph_source("path:x", 5, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)load_graph_source("path:3:banana", 5, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)load_graph_source("no_such_file_anywhere", 5, 0),
                  std::invalid_argument);
}

TEST_CASE("json writer emits minified, ordered documents") {
  JsonWriter json;
  json.begin_object();
  json.key("name");
  json.value("a\"b\\c\nd");
  json.key("third");
  json.value(1.0 / 3.0);
  json.key("items");
  json.begin_array();
  json.value(std::int64_t(-4));
  json.value(true);
  json.null();
  json.begin_object();
  json.end_object();
  json.end_array();
  json.end_object();
  CHECK(json.str() ==
        "{\"name\":\"a\\\"b\\\\c\\nd\",\"third\":0.33333333333333331,"
        "\"items\":[-4,true,null,{}]}");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.25) == "-1.25");
}

TEST_CASE("sigma suite: one record per shell, all held") {
  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.d = 2;
  spec.suite = "sigma";
  auto result = run_experiment(spec);
  CHECK(result.summary.checked == 2);
  CHECK(result.summary.held == 2);
  CHECK(result.summary.failed == 0);
  CHECK(result.summary.not_applicable == 0);
  CHECK(result.json.find("\"suite\":\"sigma\"") != std::string::npos);
  CHECK(result.json.back() == '\n');

  spec.lambda = 1;
  CHECK(run_experiment(spec).summary.checked == 1);
  spec.lambda = 0;
  CHECK_THROWS_AS((void)run_experiment(spec), std::invalid_argument);
}

TEST_CASE("sums suite: zero-parameter sums are reported but not scored") {
  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.suite = "sums";
  auto result = run_experiment(spec);
  // Gauss once, then Kloosterman and Salie over all q^2 parameter pairs;
  // K(0,0) and S(0,0) fall outside the square-root bound's scope.
  CHECK(result.summary.checked == 17);
  CHECK(result.summary.held == 17);
  CHECK(result.summary.not_applicable == 2);
  CHECK(result.summary.failed == 0);
  CHECK(result.json.find("\"kind\":\"gauss\",\"a\":null,\"b\":null") !=
        std::string::npos);
}

TEST_CASE("distance suite: full pair sweep holds") {
  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.d = 2;
  spec.suite = "distance";
  spec.seed = 31;
  auto result = run_experiment(spec);
  CHECK(result.summary.checked == 2 * kDistancePairs * 2);
  CHECK(result.summary.failed == 0);
  CHECK(result.json.find("\"kind\":\"complex\"") != std::string::npos);
  CHECK(result.json.find("\"kind\":\"indicator\"") != std::string::npos);
}

TEST_CASE("graph suites run off one spec and echo it") {
  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.d = 2;
  spec.suite = "all";
  spec.graph_source = "path:3";
  spec.density = 0.5;
  spec.seed = 5;
  auto result = run_experiment(spec);
  // path:3 in F_3^2 at density 1/2 sits far below both thresholds, so the
  // theorem records land in not_applicable next to K(0,0) and S(0,0).
  CHECK(result.summary.checked == 2 + 400 + 17);
  CHECK(result.summary.not_applicable == 4);
  CHECK(result.summary.failed == 0);
  CHECK(result.json.rfind("{\"spec\":{\"suite\":\"all\",\"q\":\"3\",\"d\":2,"
                          "\"seed\":5,\"density\":0.5,\"graph\":\"path:3\","
                          "\"set_file\":null,\"lambda\":null},\"records\":[",
                          0) == 0);
  CHECK(result.json.find("\"suite\":\"asymptotic\"") != std::string::npos);
  CHECK(result.json.find("\"suite\":\"genuine\"") != std::string::npos);

  // Same spec, same bytes.
  CHECK(run_experiment(spec).json == result.json);
}

TEST_CASE("all without a graph runs the graph-free suites only") {
  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.d = 2;
  spec.suite = "all";
  auto result = run_experiment(spec);
  CHECK(result.json.find("\"suite\":\"asymptotic\"") == std::string::npos);
  CHECK(result.json.find("\"suite\":\"genuine\"") == std::string::npos);
  CHECK(result.summary.failed == 0);

  spec.suite = "asymptotic";
  CHECK_THROWS_AS((void)run_experiment(spec), std::invalid_argument);
  spec.suite = "nonsense";
  CHECK_THROWS_AS((void)run_experiment(spec), std::invalid_argument);
}

TEST_CASE("set files feed the graph suites") {
  auto space = VectorSpace(FiniteField::parse_spec("3"), 2);
  auto set = random_set(space, 0.6, 9);
  auto path = write_temp("ffdg_harness_set.txt", set.serialize());

  ExperimentSpec spec;
  spec.field_spec = "3";
  spec.d = 2;
  spec.suite = "genuine";
  spec.graph_source = "complete:3";
  spec.set_file = path.string();
  auto result = run_experiment(spec);
  CHECK(result.summary.failed == 0);
  // File-backed sets have no sampling seed to report.
  CHECK(result.json.find("\"seed\":null") != std::string::npos);
  CHECK(result.json.find("\"set_file\":\"" + path.string() + "\"") !=
        std::string::npos);

  auto other = VectorSpace(FiniteField::parse_spec("5"), 2);
  auto mismatched =
      write_temp("ffdg_harness_set5.txt",
                 random_set(other, 0.6, 9).serialize());
  spec.set_file = mismatched.string();
  CHECK_THROWS_AS((void)run_experiment(spec), std::invalid_argument);
}

}  // TEST_SUITE
