#include "bpb/correct.hpp"

#include <algorithm>

namespace bpb {

template <class Real>
EtaThreshold<Real> eta_of_eps(const Real& eps) {
  require(eps > 0 && eps < 1, ErrorCode::EpsOutOfRange,
          "eps must lie in (0, 1), got " + ScalarTraits<Real>::format(eps));
  const Real root = eps / 58;
  const Real eta = root * root;
  return {eta, Real(eta * eta)};
}

template <class Real>
DomainPartition<Real> partition_domain(const LatticeVector<Real>& f0, const Real& eta) {
  require(eta > 0 && eta < 1, ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
  require(sup_norm(f0) <= 1, ErrorCode::VectorOutOfBall,
          "||f0||_inf = " + ScalarTraits<Real>::format(sup_norm(f0)) + " exceeds 1");
  const std::size_t n = f0.size();
  DomainPartition<Real> p{IndexSet(n), IndexSet(n), IndexSet(n), eta};
  const Real low = Real(-1) + eta;
  const Real high = Real(1) - eta;
  for (std::size_t t = 0; t < n; ++t) {
    const Real& x = f0[t];
    if (x < low)
      p.A.insert(t);
    else if (x > high)
      p.B.insert(t);
    else
      p.C.insert(t);
  }
  return p;
}

namespace {

template <class Real>
struct Chain {
  std::vector<CertificateEntry<Real>> entries;

  void add(std::string name, Real lhs, std::string relation, Real rhs) {
    entries.push_back(make_entry<Real>(std::move(name), std::move(lhs), std::move(relation), std::move(rhs)));
    const auto& e = entries.back();
    require(e.pass, ErrorCode::InternalInvariant,
            "correction step '" + e.name + "' failed: " + ScalarTraits<Real>::format(e.lhs) + " " + e.relation +
                " " + ScalarTraits<Real>::format(e.rhs));
  }
};

// V(f) = S(f chi_A) chi_{supp g1} + S(f chi_B) chi_{supp g2}
template <class Real>
PositiveOperator<Real> build_v(const PositiveOperator<Real>& S, const IndexSet& A, const IndexSet& B,
                               const IndexSet& supp1, const IndexSet& supp2) {
  const auto& op = S.op();
  std::vector<Real> entries(op.rows() * op.cols(), Real(0));
  for (std::size_t j = 0; j < op.rows(); ++j)
    for (std::size_t i = 0; i < op.cols(); ++i)
      if ((A.contains(i) && supp1.contains(j)) || (B.contains(i) && supp2.contains(j)))
        entries[j * op.cols() + i] = op.at(j, i);
  return PositiveOperator<Real>(LinearOperator<Real>(op.domain(), op.codomain(), std::move(entries)));
}

}  // namespace

template <class Real>
Correction<Real> correct_linfty_l1(const PositiveOperator<Real>& S, const LatticeVector<Real>& f0, const Real& eps,
                                   const CorrectOptions& options) {
  using Tr = ScalarTraits<Real>;
  const auto [eta, threshold] = eta_of_eps(eps);
  const auto& dom = S.op().domain();
  require(same_space(dom, f0.space()), ErrorCode::DimensionMismatch, "f0 does not live on the domain of S");

  const Real s_norm = opnorm_positive(S);
  require(Tr::eq(s_norm, Real(1)), ErrorCode::NotUnitNorm, "||S|| = " + Tr::format(s_norm) + ", expected 1");
  const Real f0_norm = sup_norm(f0);
  require(f0_norm <= 1 || Tr::eq(f0_norm, Real(1)), ErrorCode::VectorOutOfBall,
          "||f0||_inf = " + Tr::format(f0_norm) + " exceeds 1");
  require(Tr::eq(f0_norm, Real(1)), ErrorCode::NotUnitVector, "||f0||_inf = " + Tr::format(f0_norm) + ", expected 1");
  const Real sf0 = l1_norm(apply(S.op(), f0));
  if (!(sf0 > Real(1) - threshold))
    throw Error(ErrorCode::NotNearNorming, "||S f0||_1 = " + Tr::format(sf0) + " is not above 1 - (eps/58)^4; deficit " +
                                               Tr::format(Real(1) - sf0) + " >= threshold " + Tr::format(threshold));

  Chain<Real> chain;
  chain.add("eta_below_eps", eta, "<", eps);

  DomainPartition<Real> part = partition_domain(f0, eta);
  require(!(part.A.empty() && part.B.empty()), ErrorCode::InternalInvariant,
          "A and B are both empty although ||S f0||_1 > 1 - eta^2");

  const auto chi_a = LatticeVector<Real>::indicator(dom, part.A);
  const auto chi_b = LatticeVector<Real>::indicator(dom, part.B);
  const auto chi_c = LatticeVector<Real>::indicator(dom, part.C);
  const auto s_a = apply(S.op(), chi_a);
  const auto s_b = apply(S.op(), chi_b);

  const Real sfc_mass = l1_norm(apply(S.op(), chi_c));
  chain.add("SfC_small", sfc_mass, "<=", eta);
  chain.add("Sf0AB_approx_A", l1_norm(apply(S.op(), f0.restrict_to(part.A) + chi_a)), "<=", eta);
  chain.add("Sf0AB_approx_B", l1_norm(apply(S.op(), f0.restrict_to(part.B) - chi_b)), "<=", eta);
  chain.add("SB_A_small", l1_norm(s_b - s_a), ">=", Real(1 - 4 * eta));
  chain.add("lemma_sum_bound", l1_norm(s_a + s_b), "<=", Real(1));

  // 7 * eps_lemma = 14 sqrt(eta) = 7 eps / 29, and eps_lemma^2 = 4 eta.
  const Real eps_lemma = eps / 29;
  const Real seven_lemma = 7 * eps_lemma;
  LemmaWitness<Real> witness = [&] {
    try {
      return disjointify(s_a, s_b, eps_lemma);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PreconditionViolated)
        throw Error(ErrorCode::InternalInvariant, std::string("lemma hypotheses failed: ") + e.what());
      throw;
    }
  }();
  chain.add("g1_close_SA", l1_norm(witness.g1 - s_a), "<", seven_lemma);
  chain.add("g2_close_SB", l1_norm(witness.g2 - s_b), "<", seven_lemma);

  const IndexSet supp1 = witness.g1.support();
  const IndexSet supp2 = witness.g2.support();
  const Real off_a = l1_norm(s_a.restrict_to(supp1.complement()));
  const Real off_b = l1_norm(s_b.restrict_to(supp2.complement()));
  chain.add("S_A", off_a, "<", seven_lemma);
  chain.add("S_B", off_b, "<", seven_lemma);

  PositiveOperator<Real> V = build_v(S, part.A, part.B, supp1, supp2);
  const Real norm_v = opnorm_positive(V);
  const Real dist_vs = off_a + off_b + sfc_mass;
  const Real half_eps = eps / 2;
  chain.add("V_le_S", norm_v, "<=", Real(1));
  chain.add("V_minus_S_budget", Real(14 * eps / 29 + eta), "<", half_eps);
  chain.add("V_minus_S", dist_vs, "<", half_eps);
  chain.add("norm_V_lower", norm_v, ">=", Real(1 - half_eps));
  chain.add("norm_V_positive", norm_v, ">", Real(0));

  // u0 = chi_B - chi_A + f0 chi_C
  const LatticeVector<Real> u0 = chi_b - chi_a + f0.restrict_to(part.C);
  chain.add("V_attains", l1_norm(apply(V.op(), u0)), "=", norm_v);

  PositiveOperator<Real> T(V.op().scaled(Real(1) / norm_v));
  chain.add("T_unit", opnorm_positive(T), "=", Real(1));
  chain.add("T_attains", l1_norm(apply(T.op(), u0)), "=", Real(1));
  chain.add("u0_unit", sup_norm(u0), "=", Real(1));

  const Real dist_point = sup_norm(u0 - f0);
  chain.add("u0_close", dist_point, "<=", eta);

  const Real dist_op_bound = abs_value(Real(1 - norm_v)) + dist_vs;
  chain.add("T_minus_S_bound", dist_op_bound, "<=", Real(2 * dist_vs));
  chain.add("T_minus_S", dist_op_bound, "<", eps);

  std::optional<Real> dist_op_exact;
  if (dom->size() <= options.exact_cap) {
    dist_op_exact = opnorm_exact(T.op() - S.op(), options.exact_cap);
    chain.add("exact_le_bound", *dist_op_exact, "<=", dist_op_bound);
  }

  CorrectionCertificate<Real> cert{eps,
                                   eps_lemma,
                                   dist_point,
                                   dist_op_bound,
                                   std::move(dist_op_exact),
                                   dist_vs,
                                   norm_v,
                                   sfc_mass,
                                   std::move(V),
                                   std::move(witness),
                                   std::move(part),
                                   std::move(chain.entries)};
  return Correction<Real>{std::move(T), u0, eta, std::move(cert)};
}

template <class Real>
Correction<Real> correct_c0_l1(const PositiveOperator<Real>& S, const LatticeVector<Real>& x0, const Real& eps,
                               bool tail_declared_zero, const CorrectOptions& options) {
  require(tail_declared_zero, ErrorCode::TailNotDeclared,
          "c0 instances must declare that coordinates and columns past the explicit ones are zero");
  require(x0.size() == S.cols(), ErrorCode::DimensionMismatch, "x0 length differs from the column count of S");
  // A and B are finite and the C-mass is the finite sum ||S chi_C||_1, so the
  // construction is the same line by line.
  return correct_linfty_l1(S, x0, eps, options);
}

template <class Real>
bool VerificationReport<Real>::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

template <class Real>
const Check<Real>* VerificationReport<Real>::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

template <class Real>
VerificationReport<Real> verify_correction(const PositiveOperator<Real>& S, const LatticeVector<Real>& f0,
                                           const Real& eps, const Correction<Real>& c, std::size_t exact_cap) {
  using Tr = ScalarTraits<Real>;
  const auto& T = c.op.op();
  require(same_space(T.domain(), S.op().domain()) && same_space(T.codomain(), S.op().codomain()),
          ErrorCode::DimensionMismatch, "T and S act between different spaces");
  require(same_space(f0.space(), S.op().domain()) && same_space(c.u0.space(), S.op().domain()),
          ErrorCode::DimensionMismatch, "f0 or u0 does not live on the domain of S");

  VerificationReport<Real> report;
  auto add = [&](std::string name, bool pass, std::optional<Real> value, std::optional<Real> bound,
                 std::string detail) {
    report.checks.push_back(Check<Real>{std::move(name), pass, std::move(value), std::move(bound), std::move(detail)});
  };

  Real min_entry = T.entries().empty() ? Real(0) : *std::min_element(T.entries().begin(), T.entries().end());
  add("positive", min_entry >= 0, min_entry, Real(0), "minimum matrix entry of T");

  const Real t_norm = l1_norm(apply(T, LatticeVector<Real>::ones(T.domain())));
  add("unit_norm", Tr::eq(t_norm, Real(1)), t_norm, Real(1), "||T|| = ||T 1||_1");

  const Real u_norm = sup_norm(c.u0);
  add("unit_sphere", Tr::eq(u_norm, Real(1)), u_norm, Real(1), "||u0||_inf");

  const Real attained = l1_norm(apply(T, c.u0));
  add("norm_attainment", Tr::eq(attained, t_norm), attained, t_norm,
      "deficit " + Tr::format(Real(t_norm - attained)));

  const Real dist_point = sup_norm(c.u0 - f0);
  add("point_distance", Tr::lt(dist_point, eps), dist_point, eps, "||u0 - f0||_inf < eps");

  const auto diff = T - S.op();
  if (T.cols() <= exact_cap) {
    const Real d = opnorm_exact(diff, exact_cap);
    add("operator_distance", Tr::lt(d, eps), d, eps, "||T - S|| by sign enumeration");
  } else {
    const Real d = entry_mass_bound(diff);
    add("operator_distance", Tr::lt(d, eps), d, eps, "||T - S|| <= entry-mass bound");
  }

  if (f0.is_nonnegative())
    add("positivity_preservation", c.u0.is_nonnegative(), std::nullopt, std::nullopt, "f0 >= 0 requires u0 >= 0");
  else
    add("positivity_preservation", true, std::nullopt, std::nullopt, "not applicable: f0 has a negative coordinate");
  return report;
}

template <class Real>
bool same_correction(const Correction<Real>& a, const Correction<Real>& b) {
  const auto& x = a.certificate;
  const auto& y = b.certificate;
  auto same_entries = [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k].name != q[k].name || p[k].lhs != q[k].lhs || p[k].rhs != q[k].rhs || p[k].pass != q[k].pass)
        return false;
    return true;
  };
  return a.op == b.op && a.u0 == b.u0 && a.eta == b.eta && x.eps == y.eps && x.eps_lemma == y.eps_lemma &&
         x.dist_point == y.dist_point && x.dist_op_bound == y.dist_op_bound && x.dist_op_exact == y.dist_op_exact &&
         x.dist_VS_bound == y.dist_VS_bound && x.norm_V == y.norm_V && x.sfc_mass == y.sfc_mass && x.V == y.V &&
         x.lemma_witness.g1 == y.lemma_witness.g1 && x.lemma_witness.g2 == y.lemma_witness.g2 &&
         x.lemma_witness.W == y.lemma_witness.W && x.lemma_witness.G1 == y.lemma_witness.G1 &&
         x.lemma_witness.G2 == y.lemma_witness.G2 && x.lemma_witness.normalizer == y.lemma_witness.normalizer &&
         x.partition.A == y.partition.A && x.partition.B == y.partition.B && x.partition.C == y.partition.C &&
         same_entries(x.chain, y.chain);
}

#define BPB_INSTANTIATE(Real)                                                                                       \
  template EtaThreshold<Real> eta_of_eps(const Real&);                                                              \
  template DomainPartition<Real> partition_domain(const LatticeVector<Real>&, const Real&);                          \
  template Correction<Real> correct_linfty_l1(const PositiveOperator<Real>&, const LatticeVector<Real>&,             \
                                              const Real&, const CorrectOptions&);                                  \
  template Correction<Real> correct_c0_l1(const PositiveOperator<Real>&, const LatticeVector<Real>&, const Real&,    \
                                          bool, const CorrectOptions&);                                             \
  template struct VerificationReport<Real>;                                                                         \
  template VerificationReport<Real> verify_correction(const PositiveOperator<Real>&, const LatticeVector<Real>&,     \
                                                      const Real&, const Correction<Real>&, std::size_t);           \
  template bool same_correction(const Correction<Real>&, const Correction<Real>&);

BPB_INSTANTIATE(Rational)
BPB_INSTANTIATE(double)

#undef BPB_INSTANTIATE

}  // namespace bpb
