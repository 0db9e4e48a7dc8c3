#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffdg/finite_field.hpp"

namespace ffdg {

/// Canonical index of a vector: coordinates (v_0, ..., v_{d-1}) packed base q
/// with v_0 as the least significant digit.
using VecIndex = std::uint64_t;

/// Allocation guard for structures indexed by all q^d points.
constexpr std::uint64_t kDefaultIndexBudget = std::uint64_t{1} << 28;

/// The coordinate space F_q^d together with the dot product and the distance
/// quadratic form |v|^2 = v . v.
class VectorSpace {
 public:
  VectorSpace(FieldPtr field, int dim);

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  VecIndex encode(std::span<const Elem> coords) const;
  void decode(VecIndex v, std::span<Elem> out) const;
  Elem coord(VecIndex v, int j) const;

  VecIndex add(VecIndex v, VecIndex w) const;
  VecIndex sub(VecIndex v, VecIndex w) const;
  VecIndex negate(VecIndex v) const;
  Elem dot(VecIndex v, VecIndex w) const;
  Elem norm(VecIndex v) const { return dot(v, v); }
  /// |v - w|^2 without materializing the difference vector.
  Elem distance(VecIndex v, VecIndex w) const;

  /// Same field (p, k, modulus) and same dimension.
  bool operator==(const VectorSpace& other) const;
  bool operator!=(const VectorSpace& other) const { return !(*this == other); }

 private:
  FieldPtr field_;
  int dim_ = 0;
  std::uint64_t size_ = 0;
};

/// A subset of F_q^d held as a membership bitmap plus the sorted member
/// list. Serializes to a plain text format:
///
///   set q=<spec> d=<dim>
///   <index>        (one decimal vector index per line, ascending)
class PointSet {
 public:
  static PointSet empty(const VectorSpace& space,
                        std::uint64_t index_budget = kDefaultIndexBudget);
  static PointSet full(const VectorSpace& space,
                       std::uint64_t index_budget = kDefaultIndexBudget);
  /// Indices must be in range; duplicates are rejected.
  static PointSet from_indices(const VectorSpace& space,
                               std::span<const VecIndex> indices,
                               std::uint64_t index_budget = kDefaultIndexBudget);

  const VectorSpace& space() const { return space_; }
  bool contains(VecIndex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  std::uint64_t count() const { return members_.size(); }
  const std::vector<VecIndex>& members() const { return members_; }
  /// Density |A| / q^d.
  double alpha() const {
    return double(count()) / double(space_.size());
  }

  std::string serialize() const;
  static PointSet parse(std::string_view text,
                        std::uint64_t max_q = FiniteField::kDefaultMaxQ,
                        std::uint64_t index_budget = kDefaultIndexBudget);

 private:
  PointSet(VectorSpace space, std::vector<VecIndex> members);

  VectorSpace space_;
  std::vector<VecIndex> members_;
  std::vector<std::uint64_t> words_;
};

/// Partition of [0, q^d) by the value of |v|^2. Shell lists are ascending;
/// building the index costs one field operation per point.
class SphereIndex {
 public:
  explicit SphereIndex(const VectorSpace& space,
                       std::uint64_t index_budget = kDefaultIndexBudget);

  const VectorSpace& space() const { return space_; }
  std::span<const std::uint32_t> shell(Elem lambda) const;
  std::uint64_t shell_size(Elem lambda) const;

  /// E sigma_lambda = q^{1-d} |S_lambda|; defined for lambda != 0.
  double sigma_mean(Elem lambda) const;
  /// |E sigma_lambda - 1|.
  double lemma_margin(Elem lambda) const {
    double m = sigma_mean(lambda) - 1.0;
    return m < 0 ? -m : m;
  }
  /// q^{-(d-1)/2}, the sphere-size deviation bound.
  double lemma_bound() const;

 private:
  VectorSpace space_;
  std::vector<std::vector<std::uint32_t>> shells_;
};

}  // namespace ffdg
