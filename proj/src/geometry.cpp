#include "ffdg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ffdg {

VectorSpace::VectorSpace(FieldPtr field, int dim)
    : field_(std::move(field)), dim_(dim) {
  if (!field_) throw std::invalid_argument("null field");
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  std::uint64_t size = 1;
  for (int i = 0; i < dim; ++i) {
    if (size > (std::uint64_t{1} << 62) / field_->q())
      throw std::length_error("q^d does not fit in the index type");
    size *= field_->q();
  }
  size_ = size;
}

VecIndex VectorSpace::encode(std::span<const Elem> coords) const {
  if (int(coords.size()) != dim_)
    throw std::invalid_argument("coordinate count does not match dimension");
  VecIndex v = 0;
  for (int j = dim_ - 1; j >= 0; --j) {
    Elem c = coords[std::size_t(j)];
    if (c >= field_->q()) throw std::invalid_argument("coordinate out of range");
    v = v * field_->q() + c;
  }
  return v;
}

void VectorSpace::decode(VecIndex v, std::span<Elem> out) const {
  if (int(out.size()) != dim_)
    throw std::invalid_argument("coordinate count does not match dimension");
  for (int j = 0; j < dim_; ++j) {
    out[std::size_t(j)] = Elem(v % field_->q());
    v /= field_->q();
  }
}

Elem VectorSpace::coord(VecIndex v, int j) const {
  if (j < 0 || j >= dim_) throw std::invalid_argument("coordinate out of range");
  for (int i = 0; i < j; ++i) v /= field_->q();
  return Elem(v % field_->q());
}

VecIndex VectorSpace::add(VecIndex v, VecIndex w) const {
  const FiniteField& f = *field_;
  VecIndex out = 0, mult = 1;
  for (int j = 0; j < dim_; ++j) {
    out += VecIndex(f.add(Elem(v % f.q()), Elem(w % f.q()))) * mult;
    mult *= f.q();
    v /= f.q();
    w /= f.q();
  }
  return out;
}

VecIndex VectorSpace::sub(VecIndex v, VecIndex w) const {
  const FiniteField& f = *field_;
  VecIndex out = 0, mult = 1;
  for (int j = 0; j < dim_; ++j) {
    out += VecIndex(f.sub(Elem(v % f.q()), Elem(w % f.q()))) * mult;
    mult *= f.q();
    v /= f.q();
    w /= f.q();
  }
  return out;
}

VecIndex VectorSpace::negate(VecIndex v) const {
  const FiniteField& f = *field_;
  VecIndex out = 0, mult = 1;
  for (int j = 0; j < dim_; ++j) {
    out += VecIndex(f.neg(Elem(v % f.q()))) * mult;
    mult *= f.q();
    v /= f.q();
  }
  return out;
}

Elem VectorSpace::dot(VecIndex v, VecIndex w) const {
  const FiniteField& f = *field_;
  Elem acc = 0;
  for (int j = 0; j < dim_; ++j) {
    acc = f.add(acc, f.mul(Elem(v % f.q()), Elem(w % f.q())));
    v /= f.q();
    w /= f.q();
  }
  return acc;
}

Elem VectorSpace::distance(VecIndex v, VecIndex w) const {
  const FiniteField& f = *field_;
  Elem acc = 0;
  for (int j = 0; j < dim_; ++j) {
    Elem c = f.sub(Elem(v % f.q()), Elem(w % f.q()));
    acc = f.add(acc, f.mul(c, c));
    v /= f.q();
    w /= f.q();
  }
  return acc;
}

bool VectorSpace::operator==(const VectorSpace& other) const {
  return dim_ == other.dim_ && field_->p() == other.field_->p() &&
         field_->k() == other.field_->k() &&
         field_->modulus() == other.field_->modulus();
}

// --- PointSet ---

PointSet::PointSet(VectorSpace space, std::vector<VecIndex> members)
    : space_(space), members_(std::move(members)) {
  words_.assign(std::size_t((space_.size() + 63) / 64), 0);
  for (VecIndex v : members_) words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

namespace {

void check_budget(const VectorSpace& space, std::uint64_t budget) {
  if (space.size() > budget)
    throw std::length_error("q^d exceeds the index budget");
}

}  // namespace

PointSet PointSet::empty(const VectorSpace& space, std::uint64_t budget) {
  check_budget(space, budget);
  return PointSet(space, {});
}

PointSet PointSet::full(const VectorSpace& space, std::uint64_t budget) {
  check_budget(space, budget);
  std::vector<VecIndex> members(space.size());
  for (VecIndex v = 0; v < space.size(); ++v) members[v] = v;
  return PointSet(space, std::move(members));
}

PointSet PointSet::from_indices(const VectorSpace& space,
                                std::span<const VecIndex> indices,
                                std::uint64_t budget) {
  check_budget(space, budget);
  std::vector<VecIndex> members(indices.begin(), indices.end());
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= space.size())
      throw std::invalid_argument("point index out of range");
    if (i > 0 && members[i] == members[i - 1])
      throw std::invalid_argument("duplicate point index");
  }
  return PointSet(space, std::move(members));
}

std::string PointSet::serialize() const {
  std::string out = "set q=" + space_.field().spec_string() +
                    " d=" + std::to_string(space_.dim()) + "\n";
  for (VecIndex v : members_) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

PointSet PointSet::parse(std::string_view text, std::uint64_t max_q,
                         std::uint64_t budget) {
  std::istringstream in{std::string(text)};
  std::string line;
  FieldPtr field;
  int dim = -1;
  std::vector<VecIndex> indices;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("set file line " + std::to_string(lineno) +
                                  ": " + why);
    };
    if (!header_seen) {
      if (tok != "set") fail("expected 'set q=<spec> d=<dim>' header");
      std::string qtok, dtok;
      if (!(ls >> qtok >> dtok)) fail("incomplete header");
      if (qtok.rfind("q=", 0) != 0 || dtok.rfind("d=", 0) != 0)
        fail("expected 'set q=<spec> d=<dim>' header");
      field = FiniteField::parse_spec(qtok.substr(2), max_q);
      dim = std::stoi(dtok.substr(2));
      std::string extra;
      if (ls >> extra) fail("trailing tokens in header");
      header_seen = true;
      continue;
    }
    VecIndex v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') fail("bad point index '" + tok + "'");
      v = v * 10 + VecIndex(ch - '0');
    }
    indices.push_back(v);
    std::string extra;
    if (ls >> extra) fail("trailing tokens after index");
  }
  if (!header_seen)
    throw std::invalid_argument("set file: missing header line");
  VectorSpace space(field, dim);
  return from_indices(space, indices, budget);
}

// --- SphereIndex ---

SphereIndex::SphereIndex(const VectorSpace& space, std::uint64_t budget)
    : space_(space) {
  check_budget(space, budget);
  const FiniteField& f = space.field();
  const std::uint32_t q = f.q();
  std::vector<Elem> sq(q);
  for (Elem c = 0; c < q; ++c) sq[c] = f.mul(c, c);

  // First pass counts shell sizes so the fill pass allocates exactly once.
  std::vector<std::uint64_t> sizes(q, 0);
  for (int pass = 0; pass < 2; ++pass) {
    // Odometer over coordinates (digit 0 least significant) with a rolling
    // norm: each digit change adjusts the norm by sub/add of one square.
    std::vector<Elem> digit(std::size_t(space.dim()), 0);
    Elem norm = 0;
    for (VecIndex v = 0;; ++v) {
      if (pass == 0)
        ++sizes[norm];
      else
        shells_[norm].push_back(std::uint32_t(v));
      int j = 0;
      while (j < space.dim() && digit[std::size_t(j)] == q - 1) {
        norm = f.sub(norm, sq[q - 1]);
        digit[std::size_t(j)] = 0;
        ++j;
      }
      if (j == space.dim()) break;
      norm = f.sub(norm, sq[digit[std::size_t(j)]]);
      ++digit[std::size_t(j)];
      norm = f.add(norm, sq[digit[std::size_t(j)]]);
    }
    if (pass == 0) {
      shells_.resize(q);
      for (Elem norm_val = 0; norm_val < q; ++norm_val)
        shells_[norm_val].reserve(sizes[norm_val]);
    }
  }
}

std::span<const std::uint32_t> SphereIndex::shell(Elem lambda) const {
  if (lambda >= space_.field().q())
    throw std::invalid_argument("sphere parameter out of range");
  return shells_[lambda];
}

std::uint64_t SphereIndex::shell_size(Elem lambda) const {
  return shell(lambda).size();
}

double SphereIndex::sigma_mean(Elem lambda) const {
  if (lambda >= space_.field().q())
    throw std::invalid_argument("sphere parameter out of range");
  if (lambda == 0)
    throw std::domain_error("sigma mean is defined for lambda != 0");
  // q^{1-d} |S_lambda|; both factors are exact doubles at supported sizes.
  double scale = double(space_.field().q()) / double(space_.size());
  return scale * double(shells_[lambda].size());
}

double SphereIndex::lemma_bound() const {
  return std::pow(double(space_.field().q()), -0.5 * (space_.dim() - 1));
}

}  // namespace ffdg
