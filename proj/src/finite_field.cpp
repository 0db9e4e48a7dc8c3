#include "ffdg/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffdg {
namespace {

constexpr std::uint64_t kAddTableMaxQ = 512;  // q*q table up to 1 MiB

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, low degree first, no
// trailing-zero trimming required by callers.
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[std::size_t(i)] != 0) return i;
  return -1;
}

// a mod m, in place; m monic of degree dm >= 1.
void reduce(Poly& a, const Poly& m, std::uint32_t p) {
  int dm = degree(m);
  for (int i = degree(a); i >= dm; --i) {
    std::uint32_t c = a[std::size_t(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      auto& t = a[std::size_t(i - dm + j)];
      t = std::uint32_t((t + std::uint64_t(p - 1) * c % p * m[std::size_t(j)]) % p);
    }
  }
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = std::uint32_t((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  reduce(c, m, p);
  c.resize(m.size() - 1);
  return c;
}

bool poly_is_zero_mod(const Poly& a, const Poly& m, std::uint32_t p) {
  Poly r = a;
  reduce(r, m, p);
  return degree(r) < 0;
}

// Trial division by every monic divisor of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  int df = degree(f);
  if (df < 1) return false;
  if (f[0] == 0) return df == 1;  // divisible by x
  for (int dd = 1; dd <= df / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div(std::size_t(dd) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        div[std::size_t(i)] = std::uint32_t(c % p);
        c /= p;
      }
      div[std::size_t(dd)] = 1;
      if (poly_is_zero_mod(f, div, p)) return false;
    }
  }
  return true;
}

// Lexicographically least monic irreducible of degree k, coefficients
// (c_0, ..., c_{k-1}) compared as a base-p number with c_0 most significant.
Poly default_modulus(std::uint32_t p, std::uint32_t k) {
  Poly f(k + 1, 0);
  f[k] = 1;
  std::vector<std::uint32_t> digits(k, 0);
  while (true) {
    for (std::uint32_t i = 0; i < k; ++i) f[i] = digits[i];
    if (is_irreducible(f, p)) return f;
    int pos = int(k) - 1;  // c_0 most significant: increment from the tail
    while (pos >= 0 && digits[std::size_t(pos)] == p - 1) {
      digits[std::size_t(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw std::logic_error("no irreducible polynomial found");
    ++digits[std::size_t(pos)];
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Elem FiniteField::add_digits(Elem a, Elem b) const {
  Elem out = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int FiniteField::quadratic_char(Elem a) const {
  if (a == 0) throw std::domain_error("quadratic character of zero");
  return (log_[a] & 1) ? -1 : 1;
}

FieldPtr FiniteField::make(std::uint32_t p, std::uint32_t k,
                           std::optional<std::vector<Elem>> modulus,
                           std::uint64_t max_q) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("p must be an odd prime");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q)
      throw std::length_error("field size p^k exceeds the configured limit");
  }

  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->k_ = k;
  f->q_ = std::uint32_t(q);

  if (k == 1) {
    if (modulus && !modulus->empty())
      throw std::invalid_argument("modulus not allowed for prime fields");
  } else if (modulus) {
    const auto& m = *modulus;
    if (m.size() != std::size_t(k) + 1)
      throw std::invalid_argument("modulus must have degree k");
    for (Elem c : m)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    Poly poly(m.begin(), m.end());
    if (!is_irreducible(poly, p))
      throw std::invalid_argument("modulus is reducible");
    f->modulus_ = m;
  } else {
    Poly m = default_modulus(p, k);
    f->modulus_.assign(m.begin(), m.end());
  }

  Poly mod_poly;
  if (k == 1)
    mod_poly = {0, 1};  // placeholder; prime-field path never reduces by it
  else
    mod_poly.assign(f->modulus_.begin(), f->modulus_.end());

  auto decode = [&](Elem e) {
    Poly c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = e % p;
      e /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    Elem e = 0, mult = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      e += c[i] * mult;
      mult *= p;
    }
    return e;
  };
  auto mul_slow = [&](Elem a, Elem b) -> Elem {
    if (k == 1) return Elem(std::uint64_t(a) * b % p);
    if (a == 0 || b == 0) return 0;
    return encode(poly_mul_mod(decode(a), decode(b), mod_poly, p));
  };
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };

  // Least generator of the multiplicative group: order q-1 certified by
  // checking g^{(q-1)/r} != 1 for every prime r | q-1.
  auto factors = prime_factors(q - 1);
  Elem g = 0;
  for (Elem cand = 2; cand < f->q_; ++cand) {
    bool ok = true;
    for (auto r : factors) {
      if (pow_slow(cand, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no generator found");
  f->generator_ = g;

  f->exp_.resize(q - 1);
  f->log_.assign(q, 0);
  f->exp_[0] = 1;
  for (std::uint64_t i = 1; i < q - 1; ++i)
    f->exp_[i] = mul_slow(f->exp_[i - 1], g);
  for (std::uint64_t i = 0; i < q - 1; ++i) f->log_[f->exp_[i]] = std::uint32_t(i);

  f->neg_.resize(q);
  f->neg_[0] = 0;
  for (Elem a = 1; a < f->q_; ++a) {
    Poly c = decode(a);
    for (auto& ci : c) ci = ci == 0 ? 0 : p - ci;
    f->neg_[a] = encode(c);
  }

  f->inv_.assign(q, 0);
  f->inv_[1] = 1;
  for (std::uint64_t i = 1; i < q - 1; ++i)
    f->inv_[f->exp_[i]] = f->exp_[q - 1 - i];

  if (q <= kAddTableMaxQ) {
    f->add_table_.resize(q * q);
    for (Elem a = 0; a < f->q_; ++a)
      for (Elem b = 0; b < f->q_; ++b)
        f->add_table_[std::size_t(a) * q + b] =
            k == 1 ? Elem((a + b) % p) : f->add_digits(a, b);
  }

  f->trace_.resize(q);
  for (Elem a = 0; a < f->q_; ++a) {
    Elem acc = a, frob = a;
    for (std::uint32_t i = 1; i < k; ++i) {
      frob = f->pow(frob, p);
      acc = f->add(acc, frob);
    }
    if (acc >= p) throw std::logic_error("trace left the prime subfield");
    f->trace_[a] = acc;
  }

  // Each character value comes straight from Tr(a)/p; no accumulated
  // products of roots of unity.
  std::vector<std::complex<double>> roots(p);
  for (std::uint32_t r = 0; r < p; ++r)
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * double(r) / double(p));
  f->chi_.resize(q);
  for (Elem a = 0; a < f->q_; ++a) f->chi_[a] = roots[f->trace_[a]];

  f->eta_minus_one_ = f->quadratic_char(f->neg_[1]);
  return f;
}

FieldPtr FiniteField::parse_spec(std::string_view spec, std::uint64_t max_q) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument("bad field spec '" + std::string(spec) +
                                "': " + why);
  };
  if (spec.empty()) bad("empty");

  auto parse_u32 = [&](std::string_view s) -> std::uint32_t {
    if (s.empty() || s.size() > 9) bad("bad integer");
    std::uint32_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') bad("bad integer");
      v = v * 10 + std::uint32_t(ch - '0');
    }
    return v;
  };

  std::string_view head = spec;
  std::string_view mod_part;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    head = spec.substr(0, slash);
    mod_part = spec.substr(slash + 1);
  }

  std::uint32_t p = 0, k = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_u32(head.substr(0, caret));
    k = parse_u32(head.substr(caret + 1));
  } else {
    std::uint32_t v = parse_u32(head);
    if (v < 3) bad("q must be an odd prime power >= 3");
    if (is_prime(v)) {
      p = v;
    } else {
      // Bare prime power: recover (p, k).
      std::uint32_t base = 0;
      for (std::uint32_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) {
          base = d;
          break;
        }
      if (base == 0 || !is_prime(base)) bad("q must be an odd prime power");
      std::uint32_t rem = v;
      k = 0;
      while (rem % base == 0) {
        rem /= base;
        ++k;
      }
      if (rem != 1) bad("q must be an odd prime power");
      p = base;
    }
  }

  std::optional<std::vector<Elem>> modulus;
  if (!mod_part.empty()) {
    std::vector<Elem> coeffs;
    std::size_t start = 0;
    while (start <= mod_part.size()) {
      auto comma = mod_part.find(',', start);
      auto piece = comma == std::string_view::npos
                       ? mod_part.substr(start)
                       : mod_part.substr(start, comma - start);
      coeffs.push_back(parse_u32(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    modulus = std::move(coeffs);
  }
  return make(p, k, std::move(modulus), max_q);
}

std::string FiniteField::spec_string() const {
  if (k_ == 1) return std::to_string(p_);
  std::string out = std::to_string(p_) + "^" + std::to_string(k_) + "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(modulus_[i]);
  }
  return out;
}

}  // namespace ffdg
