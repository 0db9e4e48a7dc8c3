#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "ffdg/geometry.hpp"

using namespace ffdg;

TEST_SUITE("geometry") {

TEST_CASE("encode/decode round-trip, coordinate 0 least significant") {
  auto f = FiniteField::make(3);
  VectorSpace space(f, 2);
  CHECK(space.size() == 9);
  std::array<Elem, 2> c{1, 2};
  VecIndex v = space.encode(c);
  CHECK(v == 1 + 2 * 3);
  std::array<Elem, 2> back{};
  space.decode(v, back);
  CHECK(back == c);
  CHECK(space.coord(v, 0) == 1);
  CHECK(space.coord(v, 1) == 2);
  CHECK_THROWS_AS((void)space.encode(std::array<Elem, 3>{0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)space.encode(std::array<Elem, 2>{3, 0}),
                  std::invalid_argument);
}

TEST_CASE("vector arithmetic is componentwise") {
  auto f = FiniteField::make(5);
  VectorSpace space(f, 3);
  std::array<Elem, 3> a{1, 4, 2}, b{3, 3, 4};
  VecIndex va = space.encode(a), vb = space.encode(b);
  std::array<Elem, 3> sum{}, diff{};
  space.decode(space.add(va, vb), sum);
  space.decode(space.sub(va, vb), diff);
  for (int j = 0; j < 3; ++j) {
    CHECK(sum[std::size_t(j)] == f->add(a[std::size_t(j)], b[std::size_t(j)]));
    CHECK(diff[std::size_t(j)] == f->sub(a[std::size_t(j)], b[std::size_t(j)]));
  }
  CHECK(space.add(va, space.negate(va)) == 0);
  // dot and norm against a manual accumulation
  Elem dot = 0;
  for (int j = 0; j < 3; ++j)
    dot = f->add(dot, f->mul(a[std::size_t(j)], b[std::size_t(j)]));
  CHECK(space.dot(va, vb) == dot);
  CHECK(space.dot(va, vb) == space.dot(vb, va));
  CHECK(space.norm(va) == space.dot(va, va));
  CHECK(space.distance(va, vb) == space.norm(space.sub(va, vb)));
}

TEST_CASE("space equality needs field and dimension") {
  auto f3 = FiniteField::make(3);
  auto f9 = FiniteField::make(3, 2);
  CHECK(VectorSpace(f3, 2) == VectorSpace(FiniteField::make(3), 2));
  CHECK(VectorSpace(f3, 2) != VectorSpace(f3, 3));
  CHECK(VectorSpace(f3, 2) != VectorSpace(f9, 2));
  CHECK(VectorSpace(f9, 2) !=
        VectorSpace(FiniteField::make(3, 2, std::vector<Elem>{2, 2, 1}), 2));
}

TEST_CASE("sphere shells over F_3^2 are the frozen sets") {
  auto f = FiniteField::make(3);
  VectorSpace space(f, 2);
  SphereIndex spheres(space);
  CHECK(spheres.shell_size(0) == 1);
  CHECK(spheres.shell(0)[0] == 0);
  std::vector<std::uint32_t> s1(spheres.shell(1).begin(),
                                spheres.shell(1).end());
  std::vector<std::uint32_t> s2(spheres.shell(2).begin(),
                                spheres.shell(2).end());
  CHECK(s1 == std::vector<std::uint32_t>{1, 2, 3, 6});
  CHECK(s2 == std::vector<std::uint32_t>{4, 5, 7, 8});
  CHECK(spheres.sigma_mean(1) == doctest::Approx(4.0 / 3.0));
  CHECK(spheres.lemma_margin(1) == doctest::Approx(1.0 / 3.0));
  CHECK(spheres.lemma_bound() == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("shells partition the space and match norms") {
  for (auto [q, d] : {std::pair{5u, 3}, {9u, 2}, {7u, 2}, {3u, 4}}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    VectorSpace space(f, d);
    SphereIndex spheres(space);
    std::uint64_t total = 0;
    for (Elem l = 0; l < q; ++l) {
      for (std::uint32_t v : spheres.shell(l)) CHECK(space.norm(v) == l);
      total += spheres.shell_size(l);
    }
    CHECK(total == space.size());
  }
}

TEST_CASE("sigma mean obeys the sphere-size bound on a sweep") {
  for (auto [q, d] : {std::pair{3u, 2}, {5u, 3}, {9u, 2}, {7u, 3}}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    VectorSpace space(f, d);
    SphereIndex spheres(space);
    for (Elem l = 1; l < q; ++l)
      CHECK(spheres.lemma_margin(l) <= spheres.lemma_bound() + 1e-9);
  }
}

TEST_CASE("sigma mean rejects lambda = 0 and out-of-range lambda") {
  auto f = FiniteField::make(3);
  VectorSpace space(f, 2);
  SphereIndex spheres(space);
  CHECK_THROWS_AS((void)spheres.sigma_mean(0), std::domain_error);
  CHECK_THROWS_AS((void)spheres.sigma_mean(3), std::invalid_argument);
  CHECK_THROWS_AS((void)spheres.shell(3), std::invalid_argument);
}

TEST_CASE("point sets: membership, density, member order") {
  auto f = FiniteField::make(3);
  VectorSpace space(f, 2);
  auto all = PointSet::full(space);
  CHECK(all.count() == 9);
  CHECK(all.alpha() == doctest::Approx(1.0));
  auto none = PointSet::empty(space);
  CHECK(none.count() == 0);
  std::vector<VecIndex> idx{7, 2, 4};
  auto set = PointSet::from_indices(space, idx);
  CHECK(set.count() == 3);
  CHECK(set.members() == std::vector<VecIndex>{2, 4, 7});
  CHECK(set.contains(4));
  CHECK(!set.contains(3));
  CHECK(set.alpha() == doctest::Approx(3.0 / 9.0));

  CHECK_THROWS_AS(
      (void)PointSet::from_indices(space, std::vector<VecIndex>{1, 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)PointSet::from_indices(space, std::vector<VecIndex>{9}),
      std::invalid_argument);
}

TEST_CASE("point set files round-trip") {
  auto f = FiniteField::make(3, 2);
  VectorSpace space(f, 2);
  auto set = PointSet::from_indices(space, std::vector<VecIndex>{0, 5, 80});
  std::string text = set.serialize();
  CHECK(text == "set q=3^2/1,0,1 d=2\n0\n5\n80\n");
  auto back = PointSet::parse(text);
  CHECK(back.space() == space);
  CHECK(back.members() == set.members());
  CHECK(PointSet::parse(back.serialize()).serialize() == text);

  // comments and blank lines are tolerated
  auto commented = PointSet::parse("# A\nset q=3 d=2  # header\n\n4\n8 # pt\n");
  CHECK(commented.members() == std::vector<VecIndex>{4, 8});

  CHECK_THROWS_AS((void)PointSet::parse("3\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)PointSet::parse("set q=3 d=2\n1\n1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)PointSet::parse("set q=3 d=2\n9\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)PointSet::parse("set d=2 q=3\n"),
                  std::invalid_argument);
}

TEST_CASE("index budgets guard big allocations") {
  auto f = FiniteField::make(3);
  CHECK_THROWS_AS((void)VectorSpace(f, 50), std::length_error);
  VectorSpace space(f, 4);  // 81 points
  CHECK_THROWS_AS((void)PointSet::full(space, 80), std::length_error);
  CHECK_THROWS_AS((void)SphereIndex(space, 80), std::length_error);
  CHECK_NOTHROW((void)SphereIndex(space, 81));
}

}  // TEST_SUITE
