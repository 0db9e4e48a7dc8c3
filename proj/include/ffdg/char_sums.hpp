#pragma once

#include <complex>
#include <string_view>

#include "ffdg/finite_field.hpp"

namespace ffdg {

enum class CharSumKind { gauss, kloosterman, salie };

std::string_view to_string(CharSumKind kind);

/// One evaluated complete character sum together with its square-root
/// magnitude bound: sqrt(q) for the Gauss sum, 2 sqrt(q) for Kloosterman and
/// Salie sums. The bound does not apply to the degenerate parameters
/// a = b = 0 (bound_applies is false there and the record carries the exact
/// degenerate value instead).
struct CharSumRecord {
  CharSumKind kind = CharSumKind::gauss;
  Elem a = 0;
  Elem b = 0;
  std::complex<double> value;
  double magnitude = 0.0;
  double bound = 0.0;
  bool bound_applies = true;

  bool within_bound(double tol = 1e-6) const {
    return !bound_applies || magnitude <= bound + tol;
  }
};

/// G = sum_{a != 0} chi(a) eta(a); |G| = sqrt(q) exactly.
CharSumRecord gauss_sum(const FiniteField& f);

/// K(a, b) = sum_{s != 0} chi(a s + b s^{-1}); always real.
CharSumRecord kloosterman_sum(const FiniteField& f, Elem a, Elem b);

/// S(a, b) = sum_{s != 0} chi(a s + b s^{-1}) eta(s);
/// conj(S(a, b)) = eta(-1) S(a, b).
CharSumRecord salie_sum(const FiniteField& f, Elem a, Elem b);

}  // namespace ffdg
