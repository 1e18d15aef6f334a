#include "bpb/disjoint_support.hpp"

#include <algorithm>

namespace bpb {

template <class Real>
CertificateEntry<Real> make_entry(std::string name, Real lhs, std::string relation, Real rhs) {
  using Tr = ScalarTraits<Real>;
  bool pass = false;
  if (relation == "<")
    pass = Tr::lt(lhs, rhs);
  else if (relation == "<=")
    pass = Tr::le(lhs, rhs);
  else if (relation == "=")
    pass = Tr::eq(lhs, rhs);
  else if (relation == ">=")
    pass = Tr::le(rhs, lhs);
  else if (relation == ">")
    pass = Tr::lt(rhs, lhs);
  else
    throw Error(ErrorCode::InvalidArgument, "unknown relation " + relation);
  return CertificateEntry<Real>{std::move(name), std::move(lhs), std::move(relation), std::move(rhs), pass};
}

template <class Real>
bool all_pass(const std::vector<CertificateEntry<Real>>& entries) {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

template <class Real>
SupportSets support_sets(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps) {
  require(same_space(f1.space(), f2.space()), ErrorCode::DimensionMismatch, "f1 and f2 on different spaces");
  const std::size_t n = f1.size();
  SupportSets s{IndexSet(n), IndexSet(n), IndexSet(n)};
  const Real keep = Real(1) - eps;
  for (std::size_t t = 0; t < n; ++t) {
    const Real diff = abs_value(Real(f1[t] - f2[t]));
    if (diff <= keep * (f1[t] + f2[t]))
      s.W.insert(t);
    else if (f1[t] > f2[t])
      s.G1.insert(t);
    else if (f2[t] > f1[t])
      s.G2.insert(t);
    // f1 = f2 forces diff = 0 <= keep (f1 + f2), so t is already in W.
  }
  return s;
}

template <class Real>
void check_lemma_hypotheses(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps) {
  using Tr = ScalarTraits<Real>;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); };
  if (!same_space(f1.space(), f2.space())) throw Error(ErrorCode::DimensionMismatch, "f1 and f2 on different spaces");
  if (!(eps > 0) || !(eps < Tr::ratio(1, 5))) fail("eps must lie in (0, 1/5), got " + Tr::format(eps));
  if (!f1.is_nonnegative()) fail("f1 is not positive");
  if (!f2.is_nonnegative()) fail("f2 is not positive");
  const Real sum_norm = l1_norm(f1 + f2);
  if (!Tr::le(sum_norm, Real(1))) fail("||f1 + f2||_1 = " + Tr::format(sum_norm) + " exceeds 1");
  const Real diff_norm = l1_norm(f1 - f2);
  const Real floor = Real(1) - eps * eps;
  if (!Tr::le(floor, diff_norm))
    fail("||f1 - f2||_1 = " + Tr::format(diff_norm) + " is below 1 - eps^2 = " + Tr::format(floor));
}

namespace {

// Atoms that are not in exactly one of W, G1, G2.
std::size_t partition_defects(const IndexSet& W, const IndexSet& G1, const IndexSet& G2) {
  std::size_t bad = 0;
  for (std::size_t t = 0; t < W.universe(); ++t) {
    const int hits = int(W.contains(t)) + int(G1.contains(t)) + int(G2.contains(t));
    if (hits != 1) ++bad;
  }
  return bad;
}

template <class Real>
Real min_entry(const LatticeVector<Real>& g) {
  return *std::min_element(g.values().begin(), g.values().end());
}

template <class Real>
Real integral_over(const LatticeVector<Real>& f, const IndexSet& set) {
  return l1_norm(f.restrict_to(set));
}

}  // namespace

template <class Real>
std::vector<CertificateEntry<Real>> lemma_certificate(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2,
                                                      const Real& eps, const LemmaWitness<Real>& w) {
  const Real two_eps = 2 * eps;
  std::vector<CertificateEntry<Real>> out;
  out.push_back(make_entry<Real>("partition_W_G1_G2", Real(long(partition_defects(w.W, w.G1, w.G2))), "=", Real(0)));
  out.push_back(make_entry<Real>("int_W_small", integral_over(f1 + f2, w.W), "<=", eps));
  out.push_back(make_entry<Real>("int_G1_f2_small", integral_over(f2, w.G1), "<=", eps));
  out.push_back(make_entry<Real>("int_G2_f1_small", integral_over(f1, w.G2), "<=", eps));
  out.push_back(make_entry<Real>("f1_close_f1G1", l1_norm(f1 - f1.restrict_to(w.G1)), "<=", two_eps));
  out.push_back(make_entry<Real>("f2_close_f2G2", l1_norm(f2 - f2.restrict_to(w.G2)), "<=", two_eps));
  out.push_back(make_entry<Real>("g1G1_g2G2_big", w.normalizer, ">=", Real(1 - eps * eps - 4 * eps)));
  out.push_back(make_entry<Real>("normalizer_lower", w.normalizer, ">", Real(1 - 5 * eps)));
  out.push_back(make_entry<Real>("g1_nonnegative", min_entry(w.g1), ">=", Real(0)));
  out.push_back(make_entry<Real>("g2_nonnegative", min_entry(w.g2), ">=", Real(0)));
  out.push_back(make_entry<Real>("supports_disjoint", Real(long((w.g1.support() & w.g2.support()).count())), "=",
                                 Real(0)));
  out.push_back(make_entry<Real>("sum_unit", l1_norm(w.g1 + w.g2), "=", Real(1)));
  out.push_back(make_entry<Real>("g1_close_f1", l1_norm(w.g1 - f1), "<", Real(7 * eps)));
  out.push_back(make_entry<Real>("g2_close_f2", l1_norm(w.g2 - f2), "<", Real(7 * eps)));
  return out;
}

template <class Real>
LemmaWitness<Real> disjointify(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps) {
  check_lemma_hypotheses(f1, f2, eps);
  SupportSets sets = support_sets(f1, f2, eps);
  const LatticeVector<Real> kept = f1.restrict_to(sets.G1) + f2.restrict_to(sets.G2);
  const Real normalizer = l1_norm(kept);
  require(normalizer > 0, ErrorCode::InternalInvariant, "degenerate normalizer ||f1 chi_G1 + f2 chi_G2||_1 = 0");
  const Real inv = Real(1) / normalizer;
  LemmaWitness<Real> w{f1.restrict_to(sets.G1).scaled(inv), f2.restrict_to(sets.G2).scaled(inv),
                       std::move(sets.W), std::move(sets.G1), std::move(sets.G2), normalizer};
  for (const auto& e : lemma_certificate(f1, f2, eps, w))
    require(e.pass, ErrorCode::InternalInvariant,
            "lemma certificate '" + e.name + "' failed: " + ScalarTraits<Real>::format(e.lhs) + " " + e.relation +
                " " + ScalarTraits<Real>::format(e.rhs));
  return w;
}

#define BPB_INSTANTIATE(Real)                                                                                  \
  template CertificateEntry<Real> make_entry(std::string, Real, std::string, Real);                            \
  template bool all_pass(const std::vector<CertificateEntry<Real>>&);                                          \
  template SupportSets support_sets(const LatticeVector<Real>&, const LatticeVector<Real>&, const Real&);      \
  template void check_lemma_hypotheses(const LatticeVector<Real>&, const LatticeVector<Real>&, const Real&);   \
  template LemmaWitness<Real> disjointify(const LatticeVector<Real>&, const LatticeVector<Real>&, const Real&); \
  template std::vector<CertificateEntry<Real>> lemma_certificate(                                              \
      const LatticeVector<Real>&, const LatticeVector<Real>&, const Real&, const LemmaWitness<Real>&);

BPB_INSTANTIATE(Rational)
BPB_INSTANTIATE(double)

#undef BPB_INSTANTIATE

}  // namespace bpb
