#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "ffdg/finite_field.hpp"

using namespace ffdg;

namespace {

// Odd prime powers up to a cap, for exhaustive-axiom sweeps.
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t cap) {
  auto is_prime = [](std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 3; q <= cap; q += 2) {
    std::uint32_t v = q, p = 0;
    for (std::uint32_t d = 3; d * d <= v; d += 2)
      if (v % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = v;
    if (!is_prime(p)) continue;
    while (v % p == 0) v /= p;
    if (v == 1) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_SUITE("finite_field") {

TEST_CASE("prime field basics") {
  auto f = FiniteField::make(3);
  CHECK(f->p() == 3);
  CHECK(f->k() == 1);
  CHECK(f->q() == 3);
  CHECK(f->modulus().empty());
  CHECK(f->add(1, 2) == 0);
  CHECK(f->sub(0, 1) == 2);
  CHECK(f->mul(2, 2) == 1);
  CHECK(f->inv(2) == 2);
  CHECK(f->neg(1) == 2);
  CHECK(f->trace(2) == 2);
  CHECK(f->embed(-1) == 2);
  CHECK(f->embed(7) == 1);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS((void)FiniteField::make(2), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(9), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(15), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(3, 1, std::vector<Elem>{1, 1}),
                  std::invalid_argument);
  // x^2 and x^2 + 2x + 1 = (x+1)^2 are reducible over F_3.
  CHECK_THROWS_AS((void)FiniteField::make(3, 2, std::vector<Elem>{0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(3, 2, std::vector<Elem>{1, 2, 1}),
                  std::invalid_argument);
  // wrong degree, non-monic, coefficient out of range
  CHECK_THROWS_AS((void)FiniteField::make(3, 2, std::vector<Elem>{1, 0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(3, 2, std::vector<Elem>{1, 0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::make(3, 2, std::vector<Elem>{3, 0, 1}),
                  std::invalid_argument);
  // q over the desk-scale limit
  CHECK_THROWS_AS((void)FiniteField::make(3, 11), std::length_error);
  CHECK_THROWS_AS((void)FiniteField::make(65521, 1, std::nullopt, 1000),
                  std::length_error);
}

TEST_CASE("F_9 default modulus is t^2 + 1") {
  auto f = FiniteField::make(3, 2);
  CHECK(f->modulus() == std::vector<Elem>{1, 0, 1});
  CHECK(f->q() == 9);
  // t has encoding 3 (coefficients (0, 1)).
  const Elem t = 3;
  CHECK(f->mul(t, t) == f->neg(1));  // t^2 = -1
  CHECK(f->trace(t) == 0);
  CHECK(f->trace(1) == 2);
  CHECK(f->additive_char(t) == std::complex<double>(1.0, 0.0));
  CHECK(f->quadratic_char(f->neg(1)) == 1);  // q = 1 mod 4
  CHECK(f->eta_minus_one() == 1);
}

TEST_CASE("F_27 default modulus is the least irreducible cubic") {
  auto f = FiniteField::make(3, 3);
  CHECK(f->modulus() == std::vector<Elem>{1, 0, 2, 1});
  CHECK(f->q() == 27);
  CHECK(f->eta_minus_one() == -1);  // q = 3 mod 4
}

TEST_CASE("quadratic character matches the squares oracle") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 25u, 27u}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    std::set<Elem> squares;
    for (Elem a = 1; a < f->q(); ++a) squares.insert(f->mul(a, a));
    CHECK(squares.size() == (f->q() - 1) / 2);
    for (Elem a = 1; a < f->q(); ++a)
      CHECK(f->quadratic_char(a) == (squares.count(a) ? 1 : -1));
  }
  auto f7 = FiniteField::make(7);
  CHECK(f7->quadratic_char(3) == -1);  // squares mod 7: {1, 2, 4}
  CHECK(f7->quadratic_char(1) == 1);
  CHECK(f7->quadratic_char(2) == 1);
  CHECK(f7->quadratic_char(4) == 1);
  CHECK_THROWS_AS((void)f7->quadratic_char(0), std::domain_error);
}

TEST_CASE("eta is multiplicative with (q-1)/2 squares") {
  for (std::uint32_t q : {9u, 27u, 49u, 121u}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    int plus = 0;
    for (Elem a = 1; a < f->q(); ++a)
      if (f->quadratic_char(a) == 1) ++plus;
    CHECK(plus == int((f->q() - 1) / 2));
    for (Elem a = 1; a < f->q(); ++a)
      for (Elem b = 1; b < f->q(); ++b)
        CHECK(f->quadratic_char(f->mul(a, b)) ==
              f->quadratic_char(a) * f->quadratic_char(b));
  }
}

TEST_CASE("additive character: values, orthogonality, homomorphism") {
  auto f3 = FiniteField::make(3);
  CHECK(f3->additive_char(0) == std::complex<double>(1.0, 0.0));
  auto w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  CHECK(std::abs(f3->additive_char(1) - w) < 1e-15);

  for (std::uint32_t q : {3u, 5u, 9u, 27u, 49u}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    for (Elem c = 0; c < f->q(); ++c) {
      std::complex<double> acc = 0.0;
      for (Elem a = 0; a < f->q(); ++a) acc += f->additive_char(f->mul(c, a));
      double expect = c == 0 ? double(f->q()) : 0.0;
      CHECK(std::abs(acc - expect) < 1e-9 * f->q());
    }
    for (Elem a = 0; a < f->q(); ++a)
      for (Elem b = 0; b < f->q(); ++b)
        CHECK(std::abs(f->additive_char(f->add(a, b)) -
                       f->additive_char(a) * f->additive_char(b)) < 1e-12);
  }
}

TEST_CASE("trace is F_p-linear and surjective") {
  for (std::uint32_t q : {9u, 27u, 25u, 81u}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    std::set<Elem> image;
    for (Elem a = 0; a < f->q(); ++a) {
      CHECK(f->trace(a) < f->p());
      image.insert(f->trace(a));
      for (Elem b = 0; b < f->q(); ++b)
        CHECK(f->trace(f->add(a, b)) ==
              (f->trace(a) + f->trace(b)) % f->p());
    }
    CHECK(image.size() == f->p());
    // scaling by prime-subfield constants
    for (Elem c = 0; c < f->p(); ++c)
      for (Elem a = 0; a < f->q(); ++a)
        CHECK(f->trace(f->mul(f->embed(c), a)) ==
              Elem((std::uint64_t(c) * f->trace(a)) % f->p()));
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 121") {
  for (std::uint32_t q : odd_prime_powers(121)) {
    CAPTURE(q);
    auto f = FiniteField::parse_spec(std::to_string(q));
    REQUIRE(f->q() == q);
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->mul(a, 0) == 0);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->div(1, a) == f->inv(a));
      }
    }
    // Commutativity and the generator's order.
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
      }
    // Associativity and distributivity, full triple loop.
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b)
        for (Elem c = 0; c < q; ++c) {
          if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c)))
            FAIL("add associativity at q=" << q);
          if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c)))
            FAIL("mul associativity at q=" << q);
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c)))
            FAIL("distributivity at q=" << q);
        }
  }
}

TEST_CASE("generator has full multiplicative order") {
  for (std::uint32_t q : {3u, 9u, 27u, 121u, 113u}) {
    auto f = FiniteField::parse_spec(std::to_string(q));
    Elem g = f->generator();
    std::set<Elem> seen;
    Elem cur = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      seen.insert(cur);
      cur = f->mul(cur, g);
    }
    CHECK(cur == 1);  // g^{q-1} = 1
    CHECK(seen.size() == q - 1);
  }
}

TEST_CASE("pow matches repeated multiplication") {
  auto f = FiniteField::make(3, 2);
  for (Elem a = 0; a < f->q(); ++a) {
    Elem acc = 1;
    for (std::uint64_t e = 0; e < 12; ++e) {
      CHECK(f->pow(a, e) == acc);
      acc = f->mul(acc, a);
    }
  }
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
}

TEST_CASE("spec strings parse and round-trip") {
  CHECK(FiniteField::parse_spec("3")->spec_string() == "3");
  CHECK(FiniteField::parse_spec("3^2")->spec_string() == "3^2/1,0,1");
  CHECK(FiniteField::parse_spec("9")->spec_string() == "3^2/1,0,1");
  CHECK(FiniteField::parse_spec("27")->spec_string() == "3^3/1,0,2,1");
  CHECK(FiniteField::parse_spec("3^2/1,0,1")->spec_string() == "3^2/1,0,1");
  CHECK(FiniteField::parse_spec("121")->q() == 121);
  // custom modulus round-trips verbatim
  auto f = FiniteField::parse_spec("3^2/2,2,1");
  CHECK(f->spec_string() == "3^2/2,2,1");
  CHECK(f->q() == 9);

  CHECK_THROWS_AS((void)FiniteField::parse_spec(""), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::parse_spec("2"), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::parse_spec("15"), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::parse_spec("abc"), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::parse_spec("3^"), std::invalid_argument);
  CHECK_THROWS_AS((void)FiniteField::parse_spec("3^2/1,0"),
                  std::invalid_argument);
}

TEST_CASE("custom irreducible modulus yields a valid field") {
  // x^2 + x + 2 over F_5: no roots (0,1,2,3,4 -> 2,4,3,4,2).
  auto f = FiniteField::make(5, 2, std::vector<Elem>{2, 1, 1});
  CHECK(f->q() == 25);
  for (Elem a = 1; a < 25; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

}  // TEST_SUITE
