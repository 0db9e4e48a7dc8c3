#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ffdg {

/// Canonical integer encoding of a field element: the coefficient vector
/// (c_0, ..., c_{k-1}) over F_p packed as sum c_i * p^i. For prime fields
/// the encoding is the residue itself.
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Arithmetic in F_q for odd prime powers q = p^k.
///
/// Multiplication, inversion and powers run in O(1) through exp/log tables
/// over a fixed generator of the multiplicative group. The trace map, the
/// canonical additive character chi(a) = exp(2 pi i Tr(a)/p) and the
/// quadratic character are precomputed per element. Instances are immutable
/// after construction and safe to share across threads.
class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 16;

  /// Builds F_{p^k}. When `modulus` is absent and k > 1, the
  /// lexicographically least monic irreducible polynomial of degree k over
  /// F_p is selected (coefficient tuples compared low degree first), so the
  /// default field for a given (p, k) is deterministic. A supplied modulus
  /// must be monic of degree k, coefficients in [0, p), irreducible.
  static FieldPtr make(std::uint32_t p, std::uint32_t k = 1,
                       std::optional<std::vector<Elem>> modulus = std::nullopt,
                       std::uint64_t max_q = kDefaultMaxQ);

  /// Parses a field spec string: "p", "p^k", "p^k/c0,c1,...,ck", or a bare
  /// prime power such as "27".
  static FieldPtr parse_spec(std::string_view spec,
                             std::uint64_t max_q = kDefaultMaxQ);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Modulus polynomial, low degree first, length k+1; empty when k = 1.
  const std::vector<Elem>& modulus() const { return modulus_; }

  /// Canonical spec string: "p" for prime fields, "p^k/c0,...,ck" otherwise.
  std::string spec_string() const;

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    if (k_ == 1) {
      Elem s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    return add_digits(a, b);
  }

  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  /// Multiplicative inverse; rejects 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[std::uint32_t((std::uint64_t(log_[a]) * (e % (q_ - 1))) %
                              (q_ - 1))];
  }

  /// Image of the integer v under Z -> F_q (lands in the prime subfield).
  Elem embed(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return Elem(r);
  }

  /// Tr(a) = a + a^p + ... + a^{p^{k-1}}, an element of the prime subfield
  /// (encoding in [0, p)).
  Elem trace(Elem a) const { return trace_[a]; }

  /// chi(a) = exp(2 pi i Tr(a) / p).
  std::complex<double> additive_char(Elem a) const { return chi_[a]; }

  /// +1 on nonzero squares, -1 on non-squares; rejects 0.
  int quadratic_char(Elem a) const;

  int eta_minus_one() const { return eta_minus_one_; }

  /// Least element (by encoding) generating the multiplicative group.
  Elem generator() const { return generator_; }

 private:
  FiniteField() = default;
  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<Elem> modulus_;       // empty for k = 1
  Elem generator_ = 0;
  int eta_minus_one_ = 0;
  std::vector<Elem> exp_;           // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[g^i] = i; log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;           // inv_[0] unused
  std::vector<Elem> trace_;
  std::vector<std::complex<double>> chi_;
  std::vector<Elem> add_table_;     // q*q entries when q is small, else empty
};

}  // namespace ffdg
