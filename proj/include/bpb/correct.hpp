#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpb/disjoint_support.hpp"
#include "bpb/lattice.hpp"

namespace bpb {

/// eta = (eps/58)^2 and the admissible deficit threshold = eta^2.
template <class Real>
struct EtaThreshold {
  Real eta;
  Real threshold;
};

/// Throws Error(EpsOutOfRange) unless 0 < eps < 1.
template <class Real>
EtaThreshold<Real> eta_of_eps(const Real& eps);

/// A = {-1 <= f0 < -1 + eta}, B = {1 - eta < f0 <= 1}, C = {|f0| <= 1 - eta}.
template <class Real>
struct DomainPartition {
  IndexSet A, B, C;
  Real eta;
};

/// Throws Error(VectorOutOfBall) if ||f0||_inf > 1.
template <class Real>
DomainPartition<Real> partition_domain(const LatticeVector<Real>& f0, const Real& eta);

template <class Real>
struct CorrectionCertificate {
  Real eps;
  /// eps/29; the lemma is run at this parameter so that 7 eps_lemma = 7 eps/29.
  Real eps_lemma;
  Real dist_point;  ///< ||u0 - f0||_inf
  /// (1 - ||V||) + ||V - S|| bound; dominates ||T - S||.
  Real dist_op_bound;
  std::optional<Real> dist_op_exact;  ///< sign enumeration, when cols <= cap
  /// ||S chi_A off supp g1|| + ||S chi_B off supp g2|| + ||S chi_C||.
  Real dist_VS_bound;
  Real norm_V;
  /// ||S chi_C||_1; on c0 this is the limit of ||S chi_{C_n}||_1, a finite sum.
  Real sfc_mass;
  PositiveOperator<Real> V;
  LemmaWitness<Real> lemma_witness;
  DomainPartition<Real> partition;
  /// Every intermediate inequality of the construction, in order.
  std::vector<CertificateEntry<Real>> chain;
};

/// Norm-one positive operator `op` attaining its norm at `u0`.
template <class Real>
struct Correction {
  PositiveOperator<Real> op;
  LatticeVector<Real> u0;
  Real eta;
  CorrectionCertificate<Real> certificate;
};

struct CorrectOptions {
  std::size_t exact_cap = kDefaultExactCap;
};

/// Corrects a near-norming pair (S, f0) for the pair (L_inf(mu), L_1(nu)).
///
/// Requires ||S|| = 1, ||f0||_inf = 1, 0 < eps < 1 and
/// ||S f0||_1 > 1 - (eps/58)^4. Returns T >= 0 with ||T|| = 1,
/// ||T u0||_1 = 1, ||u0 - f0||_inf <= (eps/58)^2 and ||T - S|| < eps.
/// If f0 >= 0 then u0 >= 0.
///
/// Errors: EpsOutOfRange, NotUnitNorm, NotUnitVector, VectorOutOfBall,
/// DimensionMismatch, NotNearNorming (message carries the exact deficit).
template <class Real>
Correction<Real> correct_linfty_l1(const PositiveOperator<Real>& S, const LatticeVector<Real>& f0, const Real& eps,
                                   const CorrectOptions& options = {});

/// Same construction for (c0, L_1(mu)) on finitely supported data: coordinates
/// past the explicit ones are zero in x0 and zero columns in S, so
/// lim_n ||S chi_{C_n}||_1 is the finite sum ||S chi_C||_1.
/// Throws Error(TailNotDeclared) unless `tail_declared_zero`.
template <class Real>
Correction<Real> correct_c0_l1(const PositiveOperator<Real>& S, const LatticeVector<Real>& x0, const Real& eps,
                               bool tail_declared_zero, const CorrectOptions& options = {});

template <class Real>
struct Check {
  std::string name;
  bool pass = false;
  std::optional<Real> value;
  std::optional<Real> bound;
  std::string detail;
};

template <class Real>
struct VerificationReport {
  std::vector<Check<Real>> checks;
  bool all_pass() const;
  const Check<Real>* find(const std::string& name) const;
};

/// Re-checks a correction from scratch without reading its certificate.
/// Failures are report entries, not exceptions; mismatched dimensions throw
/// Error(DimensionMismatch).
template <class Real>
VerificationReport<Real> verify_correction(const PositiveOperator<Real>& S, const LatticeVector<Real>& f0,
                                           const Real& eps, const Correction<Real>& c,
                                           std::size_t exact_cap = kDefaultExactCap);

/// Mathematical content equality (operator, point, eta and all certificate
/// values).
template <class Real>
bool same_correction(const Correction<Real>& a, const Correction<Real>& b);

}  // namespace bpb
