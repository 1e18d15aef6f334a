#pragma once

#include <string>
#include <vector>

#include "bpb/lattice.hpp"

namespace bpb {

/// One checked inequality `lhs relation rhs`, with its outcome.
template <class Real>
struct CertificateEntry {
  std::string name;
  Real lhs;
  std::string relation;  // "<", "<=", "=", ">=", ">"
  Real rhs;
  bool pass = false;
};

template <class Real>
CertificateEntry<Real> make_entry(std::string name, Real lhs, std::string relation, Real rhs);

template <class Real>
bool all_pass(const std::vector<CertificateEntry<Real>>& entries);

/// Sets of the disjoint-support construction for (f1, f2, eps):
///   W  = {t : |f1 - f2| <= (1 - eps)(f1 + f2)}
///   G1 = complement(W) with f1 > f2,  G2 = complement(W) with f2 > f1.
struct SupportSets {
  IndexSet W, G1, G2;
};

/// Output of disjointify.
template <class Real>
struct LemmaWitness {
  LatticeVector<Real> g1;
  LatticeVector<Real> g2;
  IndexSet W, G1, G2;
  /// ||f1 chi_G1 + f2 chi_G2||_1
  Real normalizer;
};

/// Raw set construction, with no hypothesis checks. Homogeneous in (f1, f2).
template <class Real>
SupportSets support_sets(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps);

/// Checks 0 < eps < 1/5, f1, f2 >= 0, ||f1 + f2||_1 <= 1 and
/// ||f1 - f2||_1 >= 1 - eps^2. Throws Error(PreconditionViolated) naming the
/// failed hypothesis.
template <class Real>
void check_lemma_hypotheses(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps);

/// Approximates two positive L1 functions whose sum and difference have nearly
/// equal norms by disjointly supported positive functions g1, g2 with
/// ||g1 + g2||_1 = 1 and ||g_i - f_i||_1 < 7 eps.
///
/// g_i = f_i chi_{G_i} / ||f1 chi_G1 + f2 chi_G2||_1.
///
/// Every inequality of lemma_certificate is asserted before returning; a
/// failure raises Error(InternalInvariant).
template <class Real>
LemmaWitness<Real> disjointify(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2, const Real& eps);

/// The intermediate inequalities of the construction plus the output
/// guarantees, evaluated on a witness.
template <class Real>
std::vector<CertificateEntry<Real>> lemma_certificate(const LatticeVector<Real>& f1, const LatticeVector<Real>& f2,
                                                      const Real& eps, const LemmaWitness<Real>& w);

}  // namespace bpb
