#include <doctest.h>

#include "bpb/lattice.hpp"
#include "bpb/random.hpp"
#include "oracles.hpp"

using bpb::ErrorCode;
using bpb::LatticeVector;
using bpb::LinearOperator;
using bpb::MeasureSpace;
using bpb::PositiveOperator;
using bpb::Rational;
using oracle::q;
using oracle::qs;

namespace {

using Op = LinearOperator<Rational>;
using Vec = LatticeVector<Rational>;

auto counting(std::size_t n) { return MeasureSpace<Rational>::counting(n); }

Op op(std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
  return Op(counting(cols), counting(rows), qs(entries));
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

Op random_op(bpb::Rng& rng, std::size_t rows, std::size_t cols, long lo) {
  std::vector<Rational> w_dom, w_cod, e;
  for (std::size_t i = 0; i < cols; ++i) w_dom.push_back(rng.rational(1, 8, 4));
  for (std::size_t j = 0; j < rows; ++j) w_cod.push_back(rng.rational(1, 8, 4));
  for (std::size_t k = 0; k < rows * cols; ++k) e.push_back(rng.chance(1, 4) ? Rational(0) : rng.rational(lo, 50, 7));
  return Op(MeasureSpace<Rational>::make(w_dom), MeasureSpace<Rational>::make(w_cod), e);
}

std::vector<Rational> entries_of(const Op& T) { return {T.entries().begin(), T.entries().end()}; }

}  // namespace

TEST_CASE("sup_norm") {
  CHECK(bpb::sup_norm(Vec::zeros(counting(3))) == 0);
  CHECK(bpb::sup_norm(Vec(counting(3), qs({"1", "-1", "1/2"}))) == 1);

  // chi_B - chi_A + f0 chi_C with A, B nonempty
  bpb::IndexSet A(5), B(5), C(5);
  A.insert(0);
  B.insert(3);
  for (std::size_t i : {1, 2, 4}) C.insert(i);
  const Vec f0(counting(5), qs({"-1", "1/2", "-3/4", "1", "0"}));
  const Vec u = Vec::indicator(counting(5), B) - Vec::indicator(counting(5), A) + f0.restrict_to(C);
  Rational mx = 0;
  for (const auto& x : u.values()) mx = std::max(mx, Rational(abs(x)));
  CHECK(bpb::sup_norm(u) == mx);
  CHECK(mx == 1);
}

TEST_CASE("l1_norm") {
  CHECK(bpb::l1_norm(Vec::zeros(counting(2))) == 0);
  CHECK(bpb::l1_norm(Vec(counting(2), qs({"1/2", "-1/2"}))) == 1);
  const auto w = qs({"2", "3"});
  const Vec g(MeasureSpace<Rational>::make(w), qs({"1", "-1"}));
  CHECK(bpb::l1_norm(g) == oracle::weighted_abs_sum(w, qs({"1", "-1"})));
  CHECK(bpb::l1_norm(g) == 5);
}

TEST_CASE("apply") {
  const Op id = op(2, 2, {"1", "0", "0", "1"});
  const Vec f(counting(2), qs({"3/7", "-2"}));
  CHECK(bpb::apply(id, f) == f);
  CHECK(bpb::apply(op(1, 2, {"1", "1"}), Vec(counting(2), qs({"1", "-1"})))[0] == 0);
  CHECK(bpb::apply(op(1, 2, {"1/2", "1/2"}), Vec::ones(counting(2)))[0] == 1);
  CHECK(code_of([&] { bpb::apply(id, Vec::ones(counting(3))); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("opnorm_positive") {
  const Op id = op(2, 2, {"1", "0", "0", "1"});
  CHECK(bpb::opnorm_positive(PositiveOperator<Rational>(id)) == 2);
  const Op half = op(1, 2, {"1/2", "1/2"});
  CHECK(bpb::opnorm_positive(half) == 1);
  CHECK(oracle::brute_norm(half) == 1);
  CHECK(bpb::opnorm_positive(op(2, 3, {"0", "0", "0", "0", "0", "0"})) == 0);
  CHECK(code_of([] { bpb::opnorm_positive(op(1, 2, {"1", "-1"})); }) == ErrorCode::NotPositive);
  CHECK(code_of([] { PositiveOperator<Rational>(op(1, 2, {"1", "-1/9"})); }) == ErrorCode::NotPositive);
}

TEST_CASE("opnorm_exact") {
  CHECK(bpb::opnorm_exact(op(2, 2, {"1", "0", "0", "1"})) == 2);
  CHECK(bpb::opnorm_exact(op(1, 2, {"1", "-1"})) == 2);
  CHECK(bpb::opnorm_exact(op(2, 2, {"1", "1", "1", "-1"})) == 2);
  CHECK(oracle::brute_norm(op(2, 2, {"1", "1", "1", "-1"})) == 2);

  const Op wide(counting(21), counting(1), std::vector<Rational>(21, Rational(1)));
  CHECK(code_of([&] { bpb::opnorm_exact(wide); }) == ErrorCode::DimensionTooLarge);
  CHECK(bpb::opnorm_exact(wide, 21) == 21);
  CHECK(code_of([&] { bpb::opnorm_exact(op(1, 3, {"1", "2", "3"}), 2); }) == ErrorCode::DimensionTooLarge);
}

TEST_CASE("normalize_operator") {
  const Op half = op(1, 2, {"1/2", "1/2"});
  CHECK(bpb::normalize_operator(half) == half);
  CHECK(bpb::normalize_operator(op(1, 2, {"1", "1"})) == half);
  const Op id3 = op(2, 2, {"3", "0", "0", "3"});
  const Op n = bpb::normalize_operator(id3);
  CHECK(n == op(2, 2, {"1/2", "0", "0", "1/2"}));
  CHECK(oracle::brute_norm(n) == 1);

  const Op mixed = op(2, 2, {"1", "1", "1", "-1"});
  CHECK(oracle::brute_norm(bpb::normalize_operator(mixed)) == 1);
  CHECK(code_of([] { bpb::normalize_operator(op(1, 2, {"0", "0"})); }) == ErrorCode::ZeroOperator);
  CHECK(bpb::opnorm_positive(bpb::normalize_operator(PositiveOperator<Rational>(op(1, 2, {"2", "5"})))) == 1);
}

TEST_CASE("measure space and vector construction errors") {
  CHECK(code_of([] { MeasureSpace<Rational>::make(qs({"1", "0"})); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Vec(counting(2), qs({"1"})); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { Op(counting(2), counting(2), qs({"1", "2", "3"})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("property: positive norm equals sign enumeration") {
  bpb::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(8);
    const Op T = random_op(rng, rows, cols, 0);
    const Rational pos = bpb::opnorm_positive(T);
    CHECK(pos == oracle::positive_norm(T));
    CHECK(bpb::opnorm_exact(T) == pos);
    CHECK(oracle::brute_norm(T) == pos);
  }
}

TEST_CASE("property: exact norm matches plain enumeration on signed matrices") {
  bpb::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Op T = random_op(rng, 1 + rng.below(6), 1 + rng.below(8), -50);
    CHECK(bpb::opnorm_exact(T) == oracle::brute_norm(T));
    CHECK(bpb::opnorm_exact(T) <= bpb::entry_mass_bound(T));
  }
}

TEST_CASE("property: norm is homogeneous and subadditive") {
  bpb::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
    const Op A = random_op(rng, rows, cols, -30);
    const Op B(A.domain(), A.codomain(), entries_of(random_op(rng, rows, cols, -30)));
    const Rational c = rng.rational(-20, 20, 3);
    CHECK(bpb::opnorm_exact(A.scaled(c)) == abs(c) * bpb::opnorm_exact(A));
    CHECK(bpb::opnorm_exact(A - B) <= bpb::opnorm_exact(A) + bpb::opnorm_exact(B));
  }
}

TEST_CASE("property: l1 is a lattice norm and apply is linear") {
  bpb::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(9);
    std::vector<Rational> w, f, g;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(rng.rational(1, 9, 5));
      f.push_back(rng.rational(-9, 9, 4));
      // |g| >= |f| coordinatewise
      Rational extra = rng.rational(0, 9, 4);
      g.push_back(rng.chance(1, 2) ? Rational(abs(f.back()) + extra) : Rational(-abs(f.back()) - extra));
    }
    const auto space = MeasureSpace<Rational>::make(w);
    const Vec F(space, f), G(space, g);
    CHECK(bpb::l1_norm(F) <= bpb::l1_norm(G));
    CHECK(bpb::sup_norm(F) <= bpb::sup_norm(G));
    CHECK(bpb::l1_norm(F.abs()) == bpb::l1_norm(F));

    const Op T(space, counting(3), entries_of(random_op(rng, 3, n, -5)));
    const Rational a = rng.rational(-5, 5, 2);
    CHECK(bpb::apply(T, F.scaled(a) + G) == bpb::apply(T, F).scaled(a) + bpb::apply(T, G));
  }
}

TEST_CASE("float mode agrees with rational mode") {
  bpb::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Op T = random_op(rng, 1 + rng.below(4), 1 + rng.below(6), -10);
    const auto dom = bpb::to_float(T.domain());
    const auto cod = bpb::to_float(T.codomain());
    const LinearOperator<double> Tf = bpb::to_float(T, dom, cod);
    CHECK(bpb::opnorm_exact(Tf) == doctest::Approx(bpb::to_double(bpb::opnorm_exact(T))).epsilon(1e-12));
    CHECK(bpb::entry_mass_bound(Tf) == doctest::Approx(bpb::to_double(bpb::entry_mass_bound(T))).epsilon(1e-12));
  }
}
