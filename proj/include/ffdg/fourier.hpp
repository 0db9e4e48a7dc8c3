#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ffdg/geometry.hpp"

namespace ffdg {

/// A complex-valued table on F_q^d, indexed by vector index. The same
/// container holds physical-side functions and spectra; the `is_spectrum`
/// flag records which side the values live on, and the transforms check it.
class FunctionTable {
 public:
  FunctionTable(const VectorSpace& space,
                std::vector<std::complex<double>> values,
                bool is_spectrum = false);

  static FunctionTable zero(const VectorSpace& space, bool is_spectrum = false);
  static FunctionTable constant(const VectorSpace& space,
                                std::complex<double> value);
  static FunctionTable indicator(const PointSet& set);

  const VectorSpace& space() const { return space_; }
  bool is_spectrum() const { return is_spectrum_; }
  std::span<const std::complex<double>> values() const { return values_; }
  std::complex<double> at(VecIndex v) const { return values_[v]; }
  std::complex<double>& operator[](VecIndex v) { return values_[v]; }

  /// E_x f(x) (physical side) or the plain sum (spectrum side).
  std::complex<double> mean() const;
  std::complex<double> sum() const;
  /// sqrt(E_x |f(x)|^2), the normalized L2 norm of a physical-side table.
  double l2_norm() const;

 private:
  VectorSpace space_;
  std::vector<std::complex<double>> values_;
  bool is_spectrum_ = false;
};

/// fhat(xi) = q^{-d} sum_x f(x) chi(x . xi), computed one coordinate at a
/// time in O(d q^{d+1}) character-table multiplications.
FunctionTable fourier_transform(const FunctionTable& f);

/// f(x) = sum_xi fhat(xi) chi(-x . xi); inverse_transform(fourier_transform(f))
/// reproduces f.
FunctionTable inverse_transform(const FunctionTable& fhat);

/// E_y chi(ell |y|^2 + y . xi) evaluated in closed form through the Gauss
/// sum: q^{-d} G^d eta(ell)^d chi(-|xi|^2 / (4 ell)); requires ell != 0.
std::complex<double> quadratic_phase_mean(const VectorSpace& space, Elem ell,
                                          VecIndex xi);

/// The bilinear distance average E_{x,y} f(x) g(y) sigma_lambda(x - y),
/// evaluated spectrally: the correlation h(u) = E_x conj()-free product
/// f(x) g(x + u) is recovered from fhat(-xi) ghat(xi) and summed over the
/// sphere S_lambda with weight q / q^d per point.
std::complex<double> distance_bilinear(const FunctionTable& f,
                                       const FunctionTable& g, Elem lambda,
                                       const SphereIndex& spheres);

struct DistanceGapRecord {
  std::complex<double> bilinear;
  std::complex<double> product_term;  // E f * E g
  double gap = 0.0;                   // |bilinear - product_term|
  double bound = 0.0;                 // 2 q^{-(d-1)/2} ||f||_2 ||g||_2
  bool holds = false;                 // gap <= bound + 1e-9
};

/// Checks the spectral-gap inequality for one pair (f, g) and one lambda != 0.
DistanceGapRecord distance_theorem_gap(const FunctionTable& f,
                                       const FunctionTable& g, Elem lambda,
                                       const SphereIndex& spheres);

}  // namespace ffdg
