#include "bpb/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace bpb {

// ---------------------------------------------------------------------------
// MeasureSpace

template <class Real>
MeasureSpace<Real>::MeasureSpace(std::vector<Real> weights) : weights_(std::move(weights)) {
  require(!weights_.empty(), ErrorCode::InvalidArgument, "measure space needs at least one atom");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    require(weights_[i] > 0, ErrorCode::InvalidArgument,
            "atom " + std::to_string(i) + " has non-positive weight " +
                ScalarTraits<Real>::format(weights_[i]));
}

template <class Real>
std::shared_ptr<const MeasureSpace<Real>> MeasureSpace<Real>::counting(std::size_t size) {
  return std::make_shared<const MeasureSpace>(std::vector<Real>(size, Real(1)));
}

template <class Real>
std::shared_ptr<const MeasureSpace<Real>> MeasureSpace<Real>::make(std::vector<Real> weights) {
  return std::make_shared<const MeasureSpace>(std::move(weights));
}

template <class Real>
bool MeasureSpace<Real>::is_counting() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Real& w) { return w == 1; });
}

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::size_t universe, std::span<const std::size_t> members) : mask_(universe, false) {
  for (std::size_t i : members) insert(i);
}

void IndexSet::insert(std::size_t i) {
  require(i < mask_.size(), ErrorCode::InvalidArgument,
          "index " + std::to_string(i) + " outside universe of size " + std::to_string(mask_.size()));
  mask_[i] = true;
}

std::size_t IndexSet::count() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

IndexSet IndexSet::complement() const {
  IndexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = !mask_[i];
  return out;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  require(universe() == o.universe(), ErrorCode::DimensionMismatch, "index sets over different universes");
  IndexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || o.mask_[i];
  return out;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  require(universe() == o.universe(), ErrorCode::DimensionMismatch, "index sets over different universes");
  IndexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && o.mask_[i];
  return out;
}

// ---------------------------------------------------------------------------
// LatticeVector

template <class Real>
LatticeVector<Real>::LatticeVector(SpacePtr<Real> space, std::vector<Real> values)
    : space_(std::move(space)), values_(std::move(values)) {
  require(space_ != nullptr, ErrorCode::InvalidArgument, "vector without a measure space");
  require(values_.size() == space_->size(), ErrorCode::DimensionMismatch,
          "vector has " + std::to_string(values_.size()) + " values but space has " +
              std::to_string(space_->size()) + " atoms");
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::zeros(SpacePtr<Real> space) {
  std::size_t n = space->size();
  return LatticeVector(std::move(space), std::vector<Real>(n, Real(0)));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::ones(SpacePtr<Real> space) {
  std::size_t n = space->size();
  return LatticeVector(std::move(space), std::vector<Real>(n, Real(1)));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::indicator(SpacePtr<Real> space, const IndexSet& set) {
  require(set.universe() == space->size(), ErrorCode::DimensionMismatch, "indicator set size");
  std::vector<Real> v(space->size(), Real(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (set.contains(i)) v[i] = 1;
  return LatticeVector(std::move(space), std::move(v));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::restrict_to(const IndexSet& set) const {
  require(set.universe() == size(), ErrorCode::DimensionMismatch, "restriction set size");
  std::vector<Real> v(size(), Real(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (set.contains(i)) v[i] = values_[i];
  return LatticeVector(space_, std::move(v));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::abs() const {
  std::vector<Real> v;
  v.reserve(size());
  for (const Real& x : values_) v.push_back(abs_value(x));
  return LatticeVector(space_, std::move(v));
}

template <class Real>
bool LatticeVector<Real>::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](const Real& x) { return x >= 0; });
}

template <class Real>
IndexSet LatticeVector<Real>::support() const {
  IndexSet s(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (ScalarTraits<Real>::in_support(values_[i])) s.insert(i);
  return s;
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::operator+(const LatticeVector& o) const {
  require(same_space(space_, o.space_), ErrorCode::DimensionMismatch, "adding vectors on different spaces");
  std::vector<Real> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = values_[i] + o.values_[i];
  return LatticeVector(space_, std::move(v));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::operator-(const LatticeVector& o) const {
  require(same_space(space_, o.space_), ErrorCode::DimensionMismatch, "subtracting vectors on different spaces");
  std::vector<Real> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = values_[i] - o.values_[i];
  return LatticeVector(space_, std::move(v));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::operator-() const {
  std::vector<Real> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = -values_[i];
  return LatticeVector(space_, std::move(v));
}

template <class Real>
LatticeVector<Real> LatticeVector<Real>::scaled(const Real& c) const {
  std::vector<Real> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = c * values_[i];
  return LatticeVector(space_, std::move(v));
}

// ---------------------------------------------------------------------------
// LinearOperator

template <class Real>
LinearOperator<Real>::LinearOperator(SpacePtr<Real> domain, SpacePtr<Real> codomain, std::vector<Real> row_major)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(row_major)) {
  require(domain_ && codomain_, ErrorCode::InvalidArgument, "operator without domain or codomain");
  require(entries_.size() == domain_->size() * codomain_->size(), ErrorCode::DimensionMismatch,
          "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
              std::to_string(codomain_->size()) + "x" + std::to_string(domain_->size()));
}

namespace {

template <class Real>
std::vector<Real> flatten(const std::vector<std::vector<Real>>& rows, std::size_t cols) {
  std::vector<Real> out;
  out.reserve(rows.size() * cols);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    require(rows[j].size() == cols, ErrorCode::DimensionMismatch,
            "matrix row " + std::to_string(j) + " has " + std::to_string(rows[j].size()) +
                " entries, expected " + std::to_string(cols));
    out.insert(out.end(), rows[j].begin(), rows[j].end());
  }
  return out;
}

}  // namespace

template <class Real>
LinearOperator<Real>::LinearOperator(SpacePtr<Real> domain, SpacePtr<Real> codomain,
                                     const std::vector<std::vector<Real>>& rows)
    : LinearOperator(domain, codomain, flatten(rows, domain ? domain->size() : 0)) {
  require(rows.size() == codomain_->size(), ErrorCode::DimensionMismatch,
          "matrix has " + std::to_string(rows.size()) + " rows, codomain has " +
              std::to_string(codomain_->size()) + " atoms");
}

template <class Real>
LinearOperator<Real> LinearOperator<Real>::zero(SpacePtr<Real> domain, SpacePtr<Real> codomain) {
  std::size_t n = domain->size() * codomain->size();
  return LinearOperator(std::move(domain), std::move(codomain), std::vector<Real>(n, Real(0)));
}

template <class Real>
bool LinearOperator<Real>::is_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Real& x) { return x >= 0; });
}

template <class Real>
LinearOperator<Real> LinearOperator<Real>::operator-(const LinearOperator& o) const {
  require(same_space(domain_, o.domain_) && same_space(codomain_, o.codomain_), ErrorCode::DimensionMismatch,
          "operator difference across different spaces");
  std::vector<Real> v(entries_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = entries_[k] - o.entries_[k];
  return LinearOperator(domain_, codomain_, std::move(v));
}

template <class Real>
LinearOperator<Real> LinearOperator<Real>::scaled(const Real& c) const {
  std::vector<Real> v(entries_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * entries_[k];
  return LinearOperator(domain_, codomain_, std::move(v));
}

template <class Real>
PositiveOperator<Real>::PositiveOperator(LinearOperator<Real> op) : op_(std::move(op)) {
  for (std::size_t j = 0; j < op_.rows(); ++j)
    for (std::size_t i = 0; i < op_.cols(); ++i)
      require(op_.at(j, i) >= 0, ErrorCode::NotPositive,
              "entry (" + std::to_string(j) + "," + std::to_string(i) + ") = " +
                  ScalarTraits<Real>::format(op_.at(j, i)) + " is negative");
}

// ---------------------------------------------------------------------------
// Norms

template <class Real>
Real sup_norm(const LatticeVector<Real>& f) {
  Real best = 0;
  for (const Real& x : f.values()) {
    Real a = abs_value(x);
    if (a > best) best = a;
  }
  return best;
}

template <class Real>
Real l1_norm(const LatticeVector<Real>& g) {
  Real sum = 0;
  const auto& space = *g.space();
  for (std::size_t j = 0; j < g.size(); ++j) sum += space.weight(j) * abs_value(g[j]);
  return sum;
}

template <class Real>
LatticeVector<Real> apply(const LinearOperator<Real>& T, const LatticeVector<Real>& f) {
  require(same_space(T.domain(), f.space()), ErrorCode::DimensionMismatch,
          "vector does not live on the operator's domain");
  std::vector<Real> out(T.rows(), Real(0));
  for (std::size_t j = 0; j < T.rows(); ++j) {
    Real acc = 0;
    for (std::size_t i = 0; i < T.cols(); ++i) acc += T.at(j, i) * f[i];
    out[j] = acc;
  }
  return LatticeVector<Real>(T.codomain(), std::move(out));
}

template <class Real>
Real opnorm_positive(const PositiveOperator<Real>& T) {
  return l1_norm(apply(T.op(), LatticeVector<Real>::ones(T.op().domain())));
}

template <class Real>
Real opnorm_positive(const LinearOperator<Real>& T) {
  return opnorm_positive(PositiveOperator<Real>(T));
}

namespace {

// Integer Gray-code walk: rescale the matrix and weights to integers, keep
// y = A s up to date with one column update per flipped sign, and fix the
// last sign to +1 since s and -s give the same norm.
Rational opnorm_exact_rational(const LinearOperator<Rational>& T) {
  const std::size_t m = T.rows(), n = T.cols();
  mpz_class den = 1, wden = 1;
  for (const Rational& x : T.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (const Rational& w : T.codomain()->weights()) mpz_lcm(wden.get_mpz_t(), wden.get_mpz_t(), w.get_den_mpz_t());

  std::vector<mpz_class> a(m * n), twice(m * n), w(m);
  for (std::size_t k = 0; k < m * n; ++k) {
    const Rational& x = T.entries()[k];
    a[k] = x.get_num() * (den / x.get_den());
    twice[k] = 2 * a[k];
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Rational& x = T.codomain()->weight(j);
    w[j] = x.get_num() * (wden / x.get_den());
  }

  std::vector<mpz_class> y(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) y[j] += a[j * n + i];
  std::vector<bool> negative(n, false);

  mpz_class best = 0, cur, tmp;
  auto evaluate = [&] {
    cur = 0;
    for (std::size_t j = 0; j < m; ++j) {
      mpz_abs(tmp.get_mpz_t(), y[j].get_mpz_t());
      mpz_addmul(cur.get_mpz_t(), w[j].get_mpz_t(), tmp.get_mpz_t());
    }
    if (cur > best) best = cur;
  };
  evaluate();
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < patterns; ++k) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(k));
    if (negative[bit]) {
      for (std::size_t j = 0; j < m; ++j) y[j] += twice[j * n + bit];
    } else {
      for (std::size_t j = 0; j < m; ++j) y[j] -= twice[j * n + bit];
    }
    negative[bit] = !negative[bit];
    evaluate();
  }
  Rational result(best, den * wden);
  result.canonicalize();
  return result;
}

// Each pattern is evaluated from scratch so the value for a given sign vector
// does not depend on the enumeration order.
double opnorm_exact_float(const LinearOperator<double>& T) {
  const std::size_t m = T.rows(), n = T.cols();
  const auto weights = T.codomain()->weights();
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  double best = 0.0;
  for (std::uint64_t k = 0; k < patterns; ++k) {
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double v = T.at(j, i);
        acc += ((k >> i) & 1U) ? -v : v;
      }
      total += weights[j] * std::fabs(acc);
    }
    best = std::max(best, total);
  }
  return best;
}

}  // namespace

template <class Real>
Real opnorm_exact(const LinearOperator<Real>& T, std::size_t cap) {
  require(T.cols() <= cap && T.cols() < 63, ErrorCode::DimensionTooLarge,
          "sign enumeration over " + std::to_string(T.cols()) + " columns exceeds cap " + std::to_string(cap));
  if constexpr (ScalarTraits<Real>::exact)
    return opnorm_exact_rational(T);
  else
    return opnorm_exact_float(T);
}

template <class Real>
Real entry_mass_bound(const LinearOperator<Real>& T) {
  Real sum = 0;
  for (std::size_t j = 0; j < T.rows(); ++j)
    for (std::size_t i = 0; i < T.cols(); ++i) sum += T.codomain()->weight(j) * abs_value(T.at(j, i));
  return sum;
}

template <class Real>
LinearOperator<Real> normalize_operator(const LinearOperator<Real>& T, std::size_t cap) {
  const Real norm = T.is_positive() ? opnorm_positive(T) : opnorm_exact(T, cap);
  require(norm != 0, ErrorCode::ZeroOperator, "cannot normalize the zero operator");
  if (norm == 1) return T;
  return T.scaled(Real(1) / norm);
}

template <class Real>
PositiveOperator<Real> normalize_operator(const PositiveOperator<Real>& T) {
  const Real norm = opnorm_positive(T);
  require(norm != 0, ErrorCode::ZeroOperator, "cannot normalize the zero operator");
  if (norm == 1) return T;
  return PositiveOperator<Real>(T.op().scaled(Real(1) / norm));
}

SpacePtr<double> to_float(const SpacePtr<Rational>& space) {
  std::vector<double> w;
  for (const Rational& x : space->weights()) w.push_back(to_double(x));
  return MeasureSpace<double>::make(std::move(w));
}

LatticeVector<double> to_float(const LatticeVector<Rational>& f, const SpacePtr<double>& space) {
  std::vector<double> v;
  for (const Rational& x : f.values()) v.push_back(to_double(x));
  return LatticeVector<double>(space, std::move(v));
}

LinearOperator<double> to_float(const LinearOperator<Rational>& T, const SpacePtr<double>& domain,
                                const SpacePtr<double>& codomain) {
  std::vector<double> v;
  for (const Rational& x : T.entries()) v.push_back(to_double(x));
  return LinearOperator<double>(domain, codomain, std::move(v));
}

#define BPB_INSTANTIATE(Real)                                                                     \
  template class MeasureSpace<Real>;                                                              \
  template class LatticeVector<Real>;                                                             \
  template class LinearOperator<Real>;                                                            \
  template class PositiveOperator<Real>;                                                          \
  template Real sup_norm(const LatticeVector<Real>&);                                             \
  template Real l1_norm(const LatticeVector<Real>&);                                              \
  template LatticeVector<Real> apply(const LinearOperator<Real>&, const LatticeVector<Real>&);    \
  template Real opnorm_positive(const PositiveOperator<Real>&);                                   \
  template Real opnorm_positive(const LinearOperator<Real>&);                                     \
  template Real opnorm_exact(const LinearOperator<Real>&, std::size_t);                           \
  template Real entry_mass_bound(const LinearOperator<Real>&);                                    \
  template LinearOperator<Real> normalize_operator(const LinearOperator<Real>&, std::size_t);     \
  template PositiveOperator<Real> normalize_operator(const PositiveOperator<Real>&);

BPB_INSTANTIATE(Rational)
BPB_INSTANTIATE(double)

#undef BPB_INSTANTIATE

}  // namespace bpb
