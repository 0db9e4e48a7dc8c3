#include "ffdg/char_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace ffdg {

std::string_view to_string(CharSumKind kind) {
  switch (kind) {
    case CharSumKind::gauss:
      return "gauss";
    case CharSumKind::kloosterman:
      return "kloosterman";
    case CharSumKind::salie:
      return "salie";
  }
  throw std::invalid_argument("unknown character sum kind");
}

CharSumRecord gauss_sum(const FiniteField& f) {
  std::complex<double> g = 0.0;
  for (Elem a = 1; a < f.q(); ++a)
    g += f.additive_char(a) * double(f.quadratic_char(a));
  CharSumRecord rec;
  rec.kind = CharSumKind::gauss;
  rec.value = g;
  rec.magnitude = std::abs(g);
  rec.bound = std::sqrt(double(f.q()));
  rec.bound_applies = true;
  return rec;
}

namespace {

CharSumRecord twisted_sum(const FiniteField& f, Elem a, Elem b, bool twist) {
  if (a >= f.q() || b >= f.q())
    throw std::invalid_argument("character sum parameter out of range");
  std::complex<double> v = 0.0;
  for (Elem s = 1; s < f.q(); ++s) {
    Elem arg = f.add(f.mul(a, s), f.mul(b, f.inv(s)));
    std::complex<double> term = f.additive_char(arg);
    if (twist) term *= double(f.quadratic_char(s));
    v += term;
  }
  CharSumRecord rec;
  rec.kind = twist ? CharSumKind::salie : CharSumKind::kloosterman;
  rec.a = a;
  rec.b = b;
  rec.value = v;
  rec.magnitude = std::abs(v);
  rec.bound = 2.0 * std::sqrt(double(f.q()));
  rec.bound_applies = !(a == 0 && b == 0);
  return rec;
}

}  // namespace

CharSumRecord kloosterman_sum(const FiniteField& f, Elem a, Elem b) {
  return twisted_sum(f, a, b, false);
}

CharSumRecord salie_sum(const FiniteField& f, Elem a, Elem b) {
  return twisted_sum(f, a, b, true);
}

}  // namespace ffdg
