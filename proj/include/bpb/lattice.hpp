#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "bpb/error.hpp"
#include "bpb/scalar.hpp"

namespace bpb {

/// Finite set of atoms carrying strictly positive weights.
///
/// Zero-weight atoms are rejected, so essential suprema are plain maxima and
/// there are no almost-everywhere equivalence classes to track.
template <class Real>
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<Real> weights);

  static std::shared_ptr<const MeasureSpace> counting(std::size_t size);
  static std::shared_ptr<const MeasureSpace> make(std::vector<Real> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const Real& weight(std::size_t i) const { return weights_[i]; }
  std::span<const Real> weights() const noexcept { return weights_; }
  bool is_counting() const;

  bool operator==(const MeasureSpace& other) const { return weights_ == other.weights_; }

 private:
  std::vector<Real> weights_;
};

template <class Real>
using SpacePtr = std::shared_ptr<const MeasureSpace<Real>>;

template <class Real>
bool same_space(const SpacePtr<Real>& a, const SpacePtr<Real>& b) {
  return a == b || (a && b && *a == *b);
}

/// Subset of the atoms of a space, stored as a membership mask.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : mask_(universe, false) {}
  IndexSet(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const noexcept { return mask_.size(); }
  bool contains(std::size_t i) const { return mask_[i]; }
  void insert(std::size_t i);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;

  IndexSet complement() const;
  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  bool disjoint_from(const IndexSet& o) const { return (*this & o).empty(); }

  bool operator==(const IndexSet& o) const = default;

 private:
  std::vector<bool> mask_;
};

/// Real-valued function on the atoms of a MeasureSpace.
template <class Real>
class LatticeVector {
 public:
  LatticeVector(SpacePtr<Real> space, std::vector<Real> values);

  static LatticeVector zeros(SpacePtr<Real> space);
  static LatticeVector ones(SpacePtr<Real> space);
  static LatticeVector indicator(SpacePtr<Real> space, const IndexSet& set);

  std::size_t size() const noexcept { return values_.size(); }
  const Real& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Real> values() const noexcept { return values_; }
  const SpacePtr<Real>& space() const noexcept { return space_; }

  /// Pointwise product with the indicator of `set`.
  LatticeVector restrict_to(const IndexSet& set) const;
  LatticeVector abs() const;
  bool is_nonnegative() const;
  /// {j : g_j > 0}; in float mode the cut is kFloatSupportThreshold.
  IndexSet support() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Real& c) const;

  bool operator==(const LatticeVector& o) const {
    return values_ == o.values_ && same_space(space_, o.space_);
  }

 private:
  SpacePtr<Real> space_;
  std::vector<Real> values_;
};

/// m x n matrix acting from `domain` (n atoms) to `codomain` (m atoms):
/// (Tf)_j = sum_i T[j][i] f_i.
template <class Real>
class LinearOperator {
 public:
  LinearOperator(SpacePtr<Real> domain, SpacePtr<Real> codomain, std::vector<Real> row_major);
  LinearOperator(SpacePtr<Real> domain, SpacePtr<Real> codomain,
                 const std::vector<std::vector<Real>>& rows);

  static LinearOperator zero(SpacePtr<Real> domain, SpacePtr<Real> codomain);

  std::size_t rows() const noexcept { return codomain_->size(); }
  std::size_t cols() const noexcept { return domain_->size(); }
  const Real& at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  std::span<const Real> entries() const noexcept { return entries_; }
  const SpacePtr<Real>& domain() const noexcept { return domain_; }
  const SpacePtr<Real>& codomain() const noexcept { return codomain_; }

  bool is_positive() const;

  LinearOperator operator-(const LinearOperator& o) const;
  LinearOperator scaled(const Real& c) const;

  bool operator==(const LinearOperator& o) const {
    return entries_ == o.entries_ && same_space(domain_, o.domain_) &&
           same_space(codomain_, o.codomain_);
  }

 private:
  SpacePtr<Real> domain_;
  SpacePtr<Real> codomain_;
  std::vector<Real> entries_;
};

/// Operator with every matrix entry >= 0, which for the coordinate order is
/// exactly "x >= 0 implies Tx >= 0". Construction validates.
template <class Real>
class PositiveOperator {
 public:
  /// Throws Error(NotPositive).
  explicit PositiveOperator(LinearOperator<Real> op);

  const LinearOperator<Real>& op() const noexcept { return op_; }
  operator const LinearOperator<Real>&() const noexcept { return op_; }

  std::size_t rows() const noexcept { return op_.rows(); }
  std::size_t cols() const noexcept { return op_.cols(); }
  const Real& at(std::size_t row, std::size_t col) const { return op_.at(row, col); }

  bool operator==(const PositiveOperator& o) const { return op_ == o.op_; }

 private:
  LinearOperator<Real> op_;
};

inline constexpr std::size_t kDefaultExactCap = 20;

template <class Real>
Real sup_norm(const LatticeVector<Real>& f);

template <class Real>
Real l1_norm(const LatticeVector<Real>& g);

/// Throws Error(DimensionMismatch) unless f lives on T's domain.
template <class Real>
LatticeVector<Real> apply(const LinearOperator<Real>& T, const LatticeVector<Real>& f);

/// ||T|| = ||T(1)||_1 for positive T.
template <class Real>
Real opnorm_positive(const PositiveOperator<Real>& T);

/// Same, for an unchecked operator. Throws Error(NotPositive).
template <class Real>
Real opnorm_positive(const LinearOperator<Real>& T);

/// Exact infinity-to-one norm: max over sign vectors s of ||Ts||_1.
/// The unit ball of the sup norm is the convex hull of the sign vectors, so
/// the maximum of the convex map f -> ||Tf||_1 is attained at one of them.
/// Throws Error(DimensionTooLarge) when cols() > cap.
template <class Real>
Real opnorm_exact(const LinearOperator<Real>& T, std::size_t cap = kDefaultExactCap);

/// sum_{j,i} w_j |T[j][i]|, an upper bound on the infinity-to-one norm.
template <class Real>
Real entry_mass_bound(const LinearOperator<Real>& T);

/// Scales T to unit norm, using ||T(1)||_1 when T is positive and sign
/// enumeration otherwise. Throws Error(ZeroOperator).
template <class Real>
LinearOperator<Real> normalize_operator(const LinearOperator<Real>& T,
                                        std::size_t cap = kDefaultExactCap);

template <class Real>
PositiveOperator<Real> normalize_operator(const PositiveOperator<Real>& T);

/// Converts every scalar of an exact object to double.
SpacePtr<double> to_float(const SpacePtr<Rational>& space);
LatticeVector<double> to_float(const LatticeVector<Rational>& f, const SpacePtr<double>& space);
LinearOperator<double> to_float(const LinearOperator<Rational>& T, const SpacePtr<double>& domain,
                                const SpacePtr<double>& codomain);

}  // namespace bpb
