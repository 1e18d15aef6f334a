#include <doctest.h>

#include "bpb/disjoint_support.hpp"
#include "bpb/harness.hpp"
#include "oracles.hpp"

using bpb::ErrorCode;
using bpb::IndexSet;
using bpb::MeasureSpace;
using bpb::Rational;
using oracle::q;
using oracle::qs;

namespace {

using Vec = bpb::LatticeVector<Rational>;

Vec vec(std::initializer_list<const char*> v) { return Vec(MeasureSpace<Rational>::counting(v.size()), qs(v)); }

IndexSet set_of(std::size_t n, std::initializer_list<std::size_t> one_based) {
  IndexSet s(n);
  for (std::size_t i : one_based) s.insert(i - 1);
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bpb::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariant;
}

// The construction written out coordinate by coordinate.
struct Expected {
  std::vector<bool> W, G1, G2;
  std::vector<Rational> g1, g2;
  Rational normalizer;
};

Expected by_hand(const Vec& f1, const Vec& f2, const Rational& eps) {
  Expected e;
  const std::size_t n = f1.size();
  Rational norm = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const Rational a = f1[t], b = f2[t];
    const bool w = abs(a - b) <= (1 - eps) * (a + b);
    e.W.push_back(w);
    e.G1.push_back(!w && a > b);
    e.G2.push_back(!w && b > a);
    if (e.G1.back()) norm += f1.space()->weight(t) * a;
    if (e.G2.back()) norm += f2.space()->weight(t) * b;
  }
  e.normalizer = norm;
  for (std::size_t t = 0; t < n; ++t) {
    e.g1.push_back(e.G1[t] ? Rational(f1[t] / norm) : Rational(0));
    e.g2.push_back(e.G2[t] ? Rational(f2[t] / norm) : Rational(0));
  }
  return e;
}

void check_against_hand(const Vec& f1, const Vec& f2, const Rational& eps) {
  const auto w = bpb::disjointify(f1, f2, eps);
  const Expected e = by_hand(f1, f2, eps);
  for (std::size_t t = 0; t < f1.size(); ++t) {
    CHECK(w.W.contains(t) == e.W[t]);
    CHECK(w.G1.contains(t) == e.G1[t]);
    CHECK(w.G2.contains(t) == e.G2[t]);
    CHECK(w.g1[t] == e.g1[t]);
    CHECK(w.g2[t] == e.g2[t]);
    CHECK(w.g1[t] * w.g2[t] == 0);
  }
  CHECK(w.normalizer == e.normalizer);
  const auto mu = oracle::weights_of(f1.space());
  std::vector<Rational> sum, d1, d2;
  for (std::size_t t = 0; t < f1.size(); ++t) {
    sum.push_back(e.g1[t] + e.g2[t]);
    d1.push_back(e.g1[t] - f1[t]);
    d2.push_back(e.g2[t] - f2[t]);
  }
  CHECK(oracle::weighted_abs_sum(mu, sum) == 1);
  CHECK(oracle::weighted_abs_sum(mu, d1) < 7 * eps);
  CHECK(oracle::weighted_abs_sum(mu, d2) < 7 * eps);
}

}  // namespace

TEST_CASE("disjointify: already disjoint and normalized input is kept") {
  const Vec f1 = vec({"1/2", "0"}), f2 = vec({"0", "1/2"});
  const auto w = bpb::disjointify(f1, f2, q("1/10"));
  CHECK(w.W.empty());
  CHECK(w.G1 == set_of(2, {1}));
  CHECK(w.G2 == set_of(2, {2}));
  CHECK(w.normalizer == 1);
  CHECK(w.g1 == f1);
  CHECK(w.g2 == f2);
}

TEST_CASE("disjointify: small overlap is cut and renormalized") {
  const Vec f1 = vec({"505/1000", "5/1000"}), f2 = vec({"5/1000", "485/1000"});
  const Rational eps = q("15/100");
  const auto w = bpb::disjointify(f1, f2, eps);
  CHECK(w.W.empty());
  CHECK(w.G1 == set_of(2, {1}));
  CHECK(w.G2 == set_of(2, {2}));
  CHECK(w.normalizer == q("99/100"));
  CHECK(w.g1 == Vec(f1.space(), {Rational(q("505/1000") / q("99/100")), Rational(0)}));
  CHECK(w.g2 == Vec(f1.space(), {Rational(0), Rational(q("485/1000") / q("99/100"))}));
  const Rational dist = bpb::l1_norm(w.g1 - f1);
  CHECK(dist == q("505/1000") / 99 + q("5/1000"));
  CHECK(dist < 7 * eps);
  check_against_hand(f1, f2, eps);
}

TEST_CASE("disjointify: hypotheses") {
  const Rational eps = q("1/10");
  CHECK(code_of([&] { bpb::disjointify(vec({"1/2", "0"}), vec({"1/2", "0"}), eps); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { bpb::disjointify(vec({"1/2", "0"}), vec({"0", "1/2"}), q("1/5")); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { bpb::disjointify(vec({"1/2", "0"}), vec({"0", "1/2"}), Rational(0)); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { bpb::disjointify(vec({"1/2", "-1/100"}), vec({"0", "1/2"}), eps); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { bpb::disjointify(vec({"3/5", "0"}), vec({"0", "1/2"}), eps); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { bpb::disjointify(vec({"1/2", "0"}), vec({"0", "1/2", "0"}), eps); }) ==
        ErrorCode::DimensionMismatch);
  try {
    bpb::check_lemma_hypotheses(vec({"1/2", "0"}), vec({"1/2", "0"}), eps);
  } catch (const bpb::Error& e) {
    CHECK(std::string(e.what()).find("1 - eps^2") != std::string::npos);
  }
}

TEST_CASE("support_sets: the W boundary is closed, the G sets are strict") {
  const Rational eps = q("1/10");
  // b / a = eps / (2 - eps) puts the atom exactly on the W boundary.
  const Rational a = q("19/40");
  const Rational b = a * eps / (2 - eps);
  const Vec f1(MeasureSpace<Rational>::counting(3), {a, Rational(0), q("1/4")});
  const Vec f2(f1.space(), {b, q("1/4"), q("1/4")});
  const auto s = bpb::support_sets(f1, f2, eps);
  CHECK(s.W == set_of(3, {1, 3}));
  CHECK(s.G1.empty());
  CHECK(s.G2 == set_of(3, {2}));

  const Vec f1b(f1.space(), {Rational(a + q("1/100000")), Rational(0), q("1/4")});
  CHECK(bpb::support_sets(f1b, f2, eps).G1 == set_of(3, {1}));
}

TEST_CASE("property: support sets are invariant under positive scaling") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = bpb::gen_lemma_instance(seed, 1 + seed % 16);
    const auto base = bpb::support_sets(inst.f1, inst.f2, inst.eps);
    for (const char* c : {"1/3", "7", "1000/999"}) {
      const auto s = bpb::support_sets(inst.f1.scaled(q(c)), inst.f2.scaled(q(c)), inst.eps);
      CHECK(s.W == base.W);
      CHECK(s.G1 == base.G1);
      CHECK(s.G2 == base.G2);
    }
    CHECK((base.W | base.G1 | base.G2).count() == inst.f1.size());
    CHECK(base.W.disjoint_from(base.G1));
    CHECK(base.W.disjoint_from(base.G2));
    CHECK(base.G1.disjoint_from(base.G2));
  }
}

TEST_CASE("property: generated instances match the hand construction") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = bpb::gen_lemma_instance(seed, 1 + seed % 16);
    bpb::check_lemma_hypotheses(inst.f1, inst.f2, inst.eps);
    check_against_hand(inst.f1, inst.f2, inst.eps);
    const auto w = bpb::disjointify(inst.f1, inst.f2, inst.eps);
    const auto cert = bpb::lemma_certificate(inst.f1, inst.f2, inst.eps, w);
    CHECK(bpb::all_pass(cert));
    CHECK(cert.size() >= 5);
  }
}

TEST_CASE("disjointify in float mode") {
  using VecD = bpb::LatticeVector<double>;
  const auto space = MeasureSpace<double>::counting(2);
  const auto w = bpb::disjointify(VecD(space, {0.505, 0.005}), VecD(space, {0.005, 0.485}), 0.15);
  CHECK(w.normalizer == doctest::Approx(0.99));
  CHECK(w.g1[0] == doctest::Approx(0.505 / 0.99));
  CHECK(w.g2[1] == doctest::Approx(0.485 / 0.99));
  CHECK(w.g1[1] == 0.0);
  CHECK(w.g2[0] == 0.0);
}
