#include "ffdg/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "ffdg/char_sums.hpp"

namespace ffdg {

FunctionTable::FunctionTable(const VectorSpace& space,
                             std::vector<std::complex<double>> values,
                             bool is_spectrum)
    : space_(space), values_(std::move(values)), is_spectrum_(is_spectrum) {
  if (values_.size() != space_.size())
    throw std::invalid_argument("value table length must equal q^d");
}

FunctionTable FunctionTable::zero(const VectorSpace& space, bool is_spectrum) {
  return FunctionTable(space,
                       std::vector<std::complex<double>>(space.size(), 0.0),
                       is_spectrum);
}

FunctionTable FunctionTable::constant(const VectorSpace& space,
                                      std::complex<double> value) {
  return FunctionTable(space,
                       std::vector<std::complex<double>>(space.size(), value),
                       false);
}

FunctionTable FunctionTable::indicator(const PointSet& set) {
  auto table = zero(set.space(), false);
  for (VecIndex v : set.members()) table[v] = 1.0;
  return table;
}

std::complex<double> FunctionTable::sum() const {
  std::complex<double> acc = 0.0;
  for (const auto& v : values_) acc += v;
  return acc;
}

std::complex<double> FunctionTable::mean() const {
  return sum() / double(space_.size());
}

double FunctionTable::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::norm(v);
  return std::sqrt(acc / double(space_.size()));
}

namespace {

// Applies the q x q one-coordinate character matrix along every coordinate.
// kernel(t, u) = chi(t u) for the forward transform, chi(-t u) for the
// inverse; the q^{-d} normalization is handled by the caller.
std::vector<std::complex<double>> staged_transform(const VectorSpace& space,
                                                   std::span<const std::complex<double>> in,
                                                   bool inverse) {
  const FiniteField& f = space.field();
  const std::uint64_t q = f.q();
  std::vector<std::complex<double>> kernel(q * q);
  for (Elem t = 0; t < q; ++t)
    for (Elem u = 0; u < q; ++u) {
      Elem prod = f.mul(t, u);
      kernel[t * q + u] = f.additive_char(inverse ? f.neg(prod) : prod);
    }

  std::vector<std::complex<double>> cur(in.begin(), in.end());
  std::vector<std::complex<double>> line(q);
  const std::uint64_t n = space.size();
  std::uint64_t stride = 1;
  for (int pos = 0; pos < space.dim(); ++pos) {
    for (std::uint64_t hi = 0; hi < n / (stride * q); ++hi) {
      const std::uint64_t block = hi * stride * q;
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        const std::uint64_t base = block + lo;
        for (std::uint64_t u = 0; u < q; ++u) {
          std::complex<double> acc = 0.0;
          const std::complex<double>* row = kernel.data() + u;
          for (std::uint64_t t = 0; t < q; ++t)
            acc += cur[base + t * stride] * row[t * q];
          line[u] = acc;
        }
        for (std::uint64_t u = 0; u < q; ++u) cur[base + u * stride] = line[u];
      }
    }
    stride *= q;
  }
  return cur;
}

}  // namespace

FunctionTable fourier_transform(const FunctionTable& f) {
  if (f.is_spectrum())
    throw std::invalid_argument("fourier_transform expects a physical-side table");
  auto out = staged_transform(f.space(), f.values(), false);
  const double scale = 1.0 / double(f.space().size());
  for (auto& v : out) v *= scale;
  return FunctionTable(f.space(), std::move(out), true);
}

FunctionTable inverse_transform(const FunctionTable& fhat) {
  if (!fhat.is_spectrum())
    throw std::invalid_argument("inverse_transform expects a spectrum-side table");
  auto out = staged_transform(fhat.space(), fhat.values(), true);
  return FunctionTable(fhat.space(), std::move(out), false);
}

std::complex<double> quadratic_phase_mean(const VectorSpace& space, Elem ell,
                                          VecIndex xi) {
  const FiniteField& f = space.field();
  if (ell >= f.q()) throw std::invalid_argument("ell out of range");
  if (ell == 0) throw std::domain_error("quadratic phase requires ell != 0");
  if (xi >= space.size()) throw std::invalid_argument("xi out of range");

  std::complex<double> gd = 1.0;
  const std::complex<double> g = gauss_sum(f).value;
  for (int i = 0; i < space.dim(); ++i) gd *= g;
  const double eta_ell_d =
      (space.dim() % 2 == 0) ? 1.0 : double(f.quadratic_char(ell));
  // chi(-|xi|^2 / (4 ell)); 4 ell is invertible in odd characteristic.
  Elem arg = f.neg(f.div(space.norm(xi), f.mul(f.embed(4), ell)));
  return gd * f.additive_char(arg) * eta_ell_d / double(space.size());
}

std::complex<double> distance_bilinear(const FunctionTable& f,
                                       const FunctionTable& g, Elem lambda,
                                       const SphereIndex& spheres) {
  const VectorSpace& space = f.space();
  if (space != g.space() || space != spheres.space())
    throw std::invalid_argument("distance_bilinear requires one common space");
  if (f.is_spectrum() || g.is_spectrum())
    throw std::invalid_argument("distance_bilinear expects physical-side tables");
  if (lambda >= space.field().q())
    throw std::invalid_argument("lambda out of range");
  if (lambda == 0)
    throw std::domain_error("distance averages require lambda != 0");

  auto fhat = fourier_transform(f);
  auto ghat = fourier_transform(g);
  auto cross = FunctionTable::zero(space, true);
  for (VecIndex xi = 0; xi < space.size(); ++xi)
    cross[xi] = fhat.at(space.negate(xi)) * ghat.at(xi);
  // h(u) = E_x f(x) g(x + u) has spectrum fhat(-xi) ghat(xi).
  auto h = inverse_transform(cross);

  std::complex<double> acc = 0.0;
  for (std::uint32_t u : spheres.shell(lambda)) acc += h.at(u);
  const double scale = double(space.field().q()) / double(space.size());
  return scale * acc;
}

DistanceGapRecord distance_theorem_gap(const FunctionTable& f,
                                       const FunctionTable& g, Elem lambda,
                                       const SphereIndex& spheres) {
  DistanceGapRecord rec;
  rec.bilinear = distance_bilinear(f, g, lambda, spheres);
  rec.product_term = f.mean() * g.mean();
  rec.gap = std::abs(rec.bilinear - rec.product_term);
  rec.bound = 2.0 *
              std::pow(double(f.space().field().q()),
                       -0.5 * (f.space().dim() - 1)) *
              f.l2_norm() * g.l2_norm();
  rec.holds = rec.gap <= rec.bound + 1e-9;
  return rec;
}

}  // namespace ffdg
