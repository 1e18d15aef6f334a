#include "bpb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "bpb/random.hpp"

namespace bpb {

Profile parse_profile(std::string_view text) {
  if (text == "norming-perturbed") return Profile::NormingPerturbed;
  if (text == "sign-pattern") return Profile::SignPattern;
  if (text == "sparse") return Profile::Sparse;
  throw Error(ErrorCode::InvalidArgument, "unknown profile '" + std::string(text) + "'");
}

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::NormingPerturbed: return "norming-perturbed";
    case Profile::SignPattern: return "sign-pattern";
    case Profile::Sparse: return "sparse";
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  if (text == "linfty") return Kind::Linfty;
  if (text == "c0") return Kind::C0;
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + std::string(text) + "'");
}

std::string_view to_string(Kind k) { return k == Kind::Linfty ? "linfty" : "c0"; }

// ---------------------------------------------------------------------------
// Instance invariants

template <class Real>
void check_instance_invariants(const Instance<Real>& inst) {
  using Tr = ScalarTraits<Real>;
  auto violated = [](std::string_view which, const std::string& what) {
    throw Error(ErrorCode::InvariantViolated, std::string(which) + ": " + what);
  };
  if (!(inst.eps > 0 && inst.eps < 1)) violated("EpsOutOfRange", "eps = " + Tr::format(inst.eps));
  if (!inst.S.op().is_positive()) violated("NotPositive", "S has a negative entry");
  if (!same_space(inst.S.op().domain(), inst.f0.space())) violated("DimensionMismatch", "f0 is not on the domain of S");
  const Real norm = opnorm_positive(inst.S);
  if (!Tr::eq(norm, Real(1))) violated("NotUnitNorm", "||S|| = " + Tr::format(norm));
  const Real fnorm = sup_norm(inst.f0);
  if (!Tr::eq(fnorm, Real(1))) violated("NotUnitVector", "||f0||_inf = " + Tr::format(fnorm));
  const Real threshold = eta_of_eps(inst.eps).threshold;
  const Real sf0 = l1_norm(apply(inst.S.op(), inst.f0));
  if (!(sf0 > Real(1) - threshold))
    violated("NotNearNorming", "||S f0||_1 = " + Tr::format(sf0) + ", deficit " + Tr::format(Real(1 - sf0)));
  if (inst.kind == Kind::C0 && !inst.tail_declared_zero)
    violated("TailNotDeclared", "c0 instances must declare a zero tail");
}

// ---------------------------------------------------------------------------
// Generation

namespace {

enum class Role { Regular, CMass, Dead };

struct Draw {
  std::vector<Rational> dom_w, cod_w;
  std::vector<Role> role;
  std::vector<int> sign;    // per column
  std::vector<int> label;   // per row
  std::vector<Rational> base, leak;  // m x n row-major, leak unscaled in [0, 1]
  std::vector<Rational> r;           // perturbation direction for regular columns
  std::vector<Rational> fixed_f0;    // f0 for C and dead columns
};

Draw draw_structure(Rng& rng, std::size_t n, std::size_t m, Profile profile, Kind kind) {
  Draw d;
  for (std::size_t i = 0; i < n; ++i) d.dom_w.push_back(kind == Kind::C0 ? Rational(1) : rng.rational(1, 8, 4));
  for (std::size_t j = 0; j < m; ++j) d.cod_w.push_back(rng.rational(1, 8, 4));

  const bool signed_cols = profile != Profile::NormingPerturbed;
  for (std::size_t i = 0; i < n; ++i) {
    Role role = Role::Regular;
    if (n >= 2) {
      const auto u = rng.below(5);
      if (u == 0)
        role = Role::CMass;
      else if (u == 1 && profile == Profile::Sparse)
        role = Role::Dead;
    }
    d.role.push_back(role);
    d.sign.push_back(signed_cols && rng.chance(1, 2) ? -1 : 1);
  }
  bool any_regular = false;
  for (Role role : d.role) any_regular = any_regular || role == Role::Regular;
  if (!any_regular) d.role[rng.below(n)] = Role::Regular;

  for (std::size_t j = 0; j < m; ++j) {
    const auto u = rng.below(5);
    d.label.push_back(u == 0 ? 0 : (signed_cols ? (u <= 2 ? 1 : -1) : 1));
  }

  const std::uint64_t density = profile == Profile::Sparse ? 3 : 1;
  d.base.assign(m * n, Rational(0));
  d.leak.assign(m * n, Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = j * n + i;
      switch (d.role[i]) {
        case Role::Regular:
          if (d.label[j] == d.sign[i]) {
            if (rng.below(density) == 0) d.base[k] = rng.rational(1, 1000, 1000);
          } else if (rng.chance(1, 2)) {
            d.leak[k] = rng.rational(1, 1000, 1000);
          }
          break;
        case Role::CMass:
          if (rng.chance(2, 3)) d.leak[k] = rng.rational(1, 1000, 1000);
          break;
        case Role::Dead:
          break;
      }
    }

  std::vector<std::size_t> regular;
  for (std::size_t i = 0; i < n; ++i)
    if (d.role[i] == Role::Regular) regular.push_back(i);
  if (std::all_of(d.base.begin(), d.base.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    // Small sparse draws often end up empty; give one regular column a base entry.
    const std::size_t i = regular[rng.below(regular.size())], j = rng.below(m);
    d.label[j] = d.sign[i];
    d.base[j * n + i] = rng.rational(1, 1000, 1000);
    d.leak[j * n + i] = 0;
  }
  const std::size_t pinned = regular[rng.below(regular.size())];
  d.r.assign(n, Rational(0));
  d.fixed_f0.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    switch (d.role[i]) {
      case Role::Regular:
        if (i != pinned) d.r[i] = rng.rational(0, 1000, 1000);
        break;
      case Role::CMass:
        d.fixed_f0[i] = signed_cols ? rng.rational(-500, 500, 1000) : rng.rational(0, 500, 1000);
        break;
      case Role::Dead:
        d.fixed_f0[i] = rng.rational(-1000, 1000, 1000);
        break;
    }
  }
  return d;
}

}  // namespace

Instance<Rational> gen_instance(std::uint64_t seed, std::size_t n, std::size_t m, const Rational& eps, Profile profile,
                                Kind kind) {
  require(n >= 1 && m >= 1, ErrorCode::InvalidArgument, "n and m must be >= 1");
  const Rational threshold = eta_of_eps(eps).threshold;

  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    const Draw d = draw_structure(rng, n, m, profile, kind);

    auto dom = MeasureSpace<Rational>::make(d.dom_w);
    auto cod = MeasureSpace<Rational>::make(d.cod_w);
    Rational tau = threshold, delta = threshold;
    for (int halving = 0; halving < 96; ++halving, tau /= 2, delta /= 2) {
      std::vector<Rational> entries(m * n);
      for (std::size_t k = 0; k < m * n; ++k) entries[k] = d.base[k] + tau * d.leak[k];
      PositiveOperator<Rational> S = normalize_operator(PositiveOperator<Rational>(LinearOperator<Rational>(dom, cod, entries)));

      std::vector<Rational> f(n);
      for (std::size_t i = 0; i < n; ++i)
        f[i] = d.role[i] == Role::Regular ? Rational(d.sign[i] * (1 - delta * d.r[i])) : d.fixed_f0[i];
      LatticeVector<Rational> f0(dom, std::move(f));

      const Rational deficit = 1 - l1_norm(apply(S.op(), f0));
      if (deficit < threshold) {
        Instance<Rational> inst{std::move(S), std::move(f0), eps, kind, seed, profile, kind == Kind::C0};
        check_instance_invariants(inst);
        return inst;
      }
    }
  }
  throw Error(ErrorCode::InfeasiblePerturbation, "no admissible perturbation for seed " + std::to_string(seed));
}

Instance<double> to_float(const Instance<Rational>& inst) {
  auto dom = to_float(inst.S.op().domain());
  auto cod = to_float(inst.S.op().codomain());
  return Instance<double>{PositiveOperator<double>(to_float(inst.S.op(), dom, cod)), to_float(inst.f0, dom),
                          to_double(inst.eps), inst.kind, inst.seed, inst.profile, inst.tail_declared_zero};
}

// ---------------------------------------------------------------------------
// Instance files

template <class Real>
Json encode_instance(const Instance<Real>& inst) {
  return Json{{"S", encode_operator(inst.S.op())},
              {"f0", encode_vector(inst.f0)},
              {"eps", encode_scalar(inst.eps)},
              {"mode", std::string(to_string(Instance<Real>::mode))},
              {"kind", std::string(to_string(inst.kind))},
              {"seed", inst.seed},
              {"profile", std::string(to_string(inst.profile))},
              {"tail_declared_zero", inst.tail_declared_zero},
              {"measures",
               Json{{"domain", encode_space(*inst.S.op().domain())}, {"codomain", encode_space(*inst.S.op().codomain())}}}};
}

namespace {

template <class Real>
SpacePtr<Real> pick_space(const Json& measures, const char* key, const SpacePtr<Real>& from_op, bool op_explicit) {
  if (!measures.is_object() || !measures.contains(key)) return from_op;
  SpacePtr<Real> s = decode_space<Real>(measures[key], std::string("/measures/") + key);
  if (s->size() != from_op->size())
    throw Error(ErrorCode::ParseError, std::string("/measures/") + key + ": size differs from the matrix of S");
  if (op_explicit && !same_space(s, from_op))
    throw Error(ErrorCode::ParseError, std::string("/measures/") + key + ": conflicts with the measure given in S");
  return s;
}

}  // namespace

template <class Real>
RawInstance<Real> decode_raw_instance(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "/: expected an object");
  if (!j.contains("S")) throw Error(ErrorCode::ParseError, "/: missing key \"S\"");
  if (!j.contains("f0")) throw Error(ErrorCode::ParseError, "/: missing key \"f0\"");
  LinearOperator<Real> op = decode_operator<Real>(j["S"], "/S");
  const Json measures = j.value("measures", Json::object());
  auto dom = pick_space<Real>(measures, "domain", op.domain(), j["S"].contains("domain"));
  auto cod = pick_space<Real>(measures, "codomain", op.codomain(), j["S"].contains("codomain"));
  LinearOperator<Real> S(dom, cod, std::vector<Real>(op.entries().begin(), op.entries().end()));

  RawInstance<Real> raw{std::move(S), decode_vector<Real>(j["f0"], dom, "/f0"), std::nullopt};
  if (j.contains("eps")) raw.eps = decode_scalar<Real>(j["eps"], "/eps");
  try {
    if (j.contains("kind")) raw.kind = parse_kind(j["kind"].get<std::string>());
    if (j.contains("profile")) raw.profile = parse_profile(j["profile"].get<std::string>());
    if (j.contains("seed")) raw.seed = j["seed"].get<std::uint64_t>();
    raw.tail_declared_zero = j.value("tail_declared_zero", false);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("/: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("/: ") + e.what());
  }
  return raw;
}

template <class Real>
Instance<Real> decode_instance(const Json& j) {
  RawInstance<Real> raw = decode_raw_instance<Real>(j);
  if (!raw.eps) throw Error(ErrorCode::ParseError, "/: missing key \"eps\"");
  if (!raw.S.is_positive()) throw Error(ErrorCode::InvariantViolated, "NotPositive: S has a negative entry");
  Instance<Real> inst{PositiveOperator<Real>(std::move(raw.S)),
                      std::move(raw.f0),
                      *raw.eps,
                      raw.kind,
                      raw.seed,
                      raw.profile,
                      raw.tail_declared_zero};
  check_instance_invariants(inst);
  return inst;
}

template <class Real>
void save_instance(const Instance<Real>& inst, const std::string& path) {
  write_text_file(path, encode_instance(inst).dump(2) + "\n");
}

template <class Real>
Instance<Real> load_instance(const std::string& path) {
  return decode_instance<Real>(read_json_file(path));
}

// ---------------------------------------------------------------------------
// Lemma instances

LemmaInstance<Rational> gen_lemma_instance(std::uint64_t seed, std::size_t dim, std::optional<Rational> eps_in) {
  require(dim >= 1, ErrorCode::InvalidArgument, "dim must be >= 1");
  Rng eps_rng(derive_seed(seed, 0xE95));
  const Rational eps = eps_in ? *eps_in : eps_rng.rational(1, 199, 1000);
  require(eps > 0 && eps < Rational(1, 5), ErrorCode::EpsOutOfRange, "lemma eps must lie in (0, 1/5)");
  const Rational eps2 = eps * eps;
  const Rational boundary = eps / (2 - eps);  // b/a at which an atom enters W

  // lambda scales every cross-mass term; halve until the hypotheses hold.
  Rational lambda = eps;
  for (int attempt = 0; attempt < 96; ++attempt, lambda /= 2) {
    Rng rng(derive_seed(seed, 1));
    std::vector<Rational> w(dim), a(dim), b(dim);
    bool dominant = false;
    for (std::size_t t = 0; t < dim; ++t) {
      w[t] = rng.rational(1, 8, 4);
      const auto kind = rng.below(20);
      dominant = dominant || kind < 14;
      if (kind < 7) {  // f1 dominant
        a[t] = rng.rational(1, 1000, 1000);
        b[t] = a[t] * lambda * rng.rational(0, 1000, 1000);
      } else if (kind < 14) {  // f2 dominant
        b[t] = rng.rational(1, 1000, 1000);
        a[t] = b[t] * lambda * rng.rational(0, 1000, 1000);
      } else if (kind < 16) {  // near or on the W boundary
        Rational main = lambda * rng.rational(1, 1000, 1000);
        Rational ratio = rng.chance(1, 3) ? boundary : Rational(boundary * rng.rational(900, 1100, 1000));
        if (rng.chance(1, 2)) {
          a[t] = main;
          b[t] = main * ratio;
        } else {
          b[t] = main;
          a[t] = main * ratio;
        }
      } else if (kind < 18) {  // comparable masses, inside W
        a[t] = lambda * rng.rational(1, 1000, 1000);
        b[t] = rng.chance(1, 3) ? a[t] : Rational(a[t] * rng.rational(500, 1500, 1000));
      }  // else both zero
    }
    // Without a dominant atom all mass scales with lambda and halving cannot help.
    if (!dominant) {
      a[0] = 1;
      b[0] = 0;
    }
    auto space = MeasureSpace<Rational>::make(w);
    LatticeVector<Rational> f1(space, a), f2(space, b);
    const Rational total = l1_norm(f1 + f2);
    // ||f1 + f2||_1 lands in [1 - eps^2/4, 1].
    const Rational target = 1 - eps2 * rng.rational(0, 250, 1000);
    const Rational scale = target / total;
    f1 = f1.scaled(scale);
    f2 = f2.scaled(scale);
    if (l1_norm(f1 - f2) >= 1 - eps2) return {std::move(f1), std::move(f2), eps};
  }
  throw Error(ErrorCode::InfeasiblePerturbation, "no lemma instance for seed " + std::to_string(seed));
}

template <class Real>
Json encode_lemma_instance(const LemmaInstance<Real>& inst) {
  return Json{{"f1", encode_vector(inst.f1)},
              {"f2", encode_vector(inst.f2)},
              {"eps", encode_scalar(inst.eps)},
              {"measure", encode_space(*inst.f1.space())}};
}

template <class Real>
LemmaInstance<Real> decode_lemma_instance(const Json& j) {
  if (!j.is_object() || !j.contains("f1") || !j.contains("f2") || !j.contains("eps"))
    throw Error(ErrorCode::ParseError, "/: lemma instance needs \"f1\", \"f2\" and \"eps\"");
  std::vector<Real> a = decode_values<Real>(j["f1"], "/f1");
  SpacePtr<Real> space =
      j.contains("measure") ? decode_space<Real>(j["measure"], "/measure") : MeasureSpace<Real>::counting(a.size());
  return {LatticeVector<Real>(space, std::move(a)) , decode_vector<Real>(j["f2"], space, "/f2"),
          decode_scalar<Real>(j["eps"], "/eps")};
}

// ---------------------------------------------------------------------------
// Sweeps

SweepConfig parse_sweep_config(const Json& j) {
  SweepConfig c;
  try {
    if (j.contains("dims")) {
      for (const auto& d : j["dims"]) c.dims.emplace_back(d.at(0).get<std::size_t>(), d.at(1).get<std::size_t>());
    } else {
      for (const auto& n : j.at("n"))
        for (const auto& m : j.at("m")) c.dims.emplace_back(n.get<std::size_t>(), m.get<std::size_t>());
    }
    for (std::size_t k = 0; k < j.at("eps").size(); ++k)
      c.eps.push_back(decode_scalar<Rational>(j["eps"][k], "/eps/" + std::to_string(k)));
    c.trials = j.at("trials").get<std::size_t>();
    if (j.contains("mode")) c.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("kind")) c.kind = parse_kind(j["kind"].get<std::string>());
    if (j.contains("profiles")) {
      c.profiles.clear();
      for (const auto& p : j["profiles"]) c.profiles.push_back(parse_profile(p.get<std::string>()));
    }
    c.seed = j.value("seed", std::uint64_t{0});
    c.exact_cap = j.value("exact_cap", kDefaultExactCap);
    c.record_runtime = j.value("record_runtime", false);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("sweep config: ") + e.what());
  }
  require(!c.profiles.empty(), ErrorCode::InvalidArgument, "sweep config needs at least one profile");
  for (const auto& [n, m] : c.dims) require(n >= 1 && m >= 1, ErrorCode::InvalidArgument, "dims must be >= 1");
  for (const auto& e : c.eps) require(e > 0 && e < 1, ErrorCode::EpsOutOfRange, "sweep eps must lie in (0, 1)");
  return c;
}

namespace {

template <class Real>
Instance<Real> in_mode(Instance<Rational> inst) {
  if constexpr (ScalarTraits<Real>::exact)
    return inst;
  else
    return to_float(inst);
}

template <class Real>
void run_cell(const SweepConfig& config, std::size_t cell, std::size_t n, std::size_t m, const Rational& eps_exact,
              SweepResult& out) {
  using Tr = ScalarTraits<Real>;
  CellSummary summary;
  summary.cell = cell;
  summary.n = n;
  summary.m = m;
  summary.eps = format_rational(eps_exact);
  std::optional<Real> max_point, max_op;
  const std::uint64_t cell_seed = derive_seed(config.seed, cell);

  for (std::size_t t = 0; t < config.trials; ++t) {
    SweepRow row;
    row.seed = derive_seed(cell_seed, t);
    row.n = n;
    row.m = m;
    row.cell = cell;
    row.profile = config.profiles[t % config.profiles.size()];
    row.eps = Tr::format(Tr::from_rational(eps_exact));
    try {
      Instance<Real> inst = in_mode<Real>(gen_instance(row.seed, n, m, eps_exact, row.profile, config.kind));
      const auto start = std::chrono::steady_clock::now();
      CorrectOptions options{config.exact_cap};
      Correction<Real> c = config.kind == Kind::C0 ? correct_c0_l1(inst.S, inst.f0, inst.eps, true, options)
                                                   : correct_linfty_l1(inst.S, inst.f0, inst.eps, options);
      VerificationReport<Real> report = verify_correction(inst.S, inst.f0, inst.eps, c, config.exact_cap);
      row.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

      const auto& k = c.certificate;
      const Real achieved = k.dist_op_exact ? *k.dist_op_exact : k.dist_op_bound;
      const Real ratio_point = k.dist_point / inst.eps;
      const Real ratio_op = achieved / inst.eps;
      row.dist_point = Tr::format(k.dist_point);
      row.dist_op_exact = k.dist_op_exact ? Tr::format(*k.dist_op_exact) : "";
      row.dist_op_bound = Tr::format(k.dist_op_bound);
      row.ratio_point = Tr::format(ratio_point);
      row.ratio_op = Tr::format(ratio_op);
      row.all_checks_pass = report.all_pass();
      row.fixed_point = c.op == inst.S && c.u0 == inst.f0;
      if (!row.all_checks_pass) {
        for (const auto& chk : report.checks)
          if (!chk.pass) row.error += (row.error.empty() ? "" : "; ") + chk.name;
      }
      if (row.all_checks_pass) {
        if (!max_point || ratio_point > *max_point) max_point = ratio_point;
        if (!max_op || ratio_op > *max_op) max_op = ratio_op;
        summary.ratios_below_one = summary.ratios_below_one && ratio_point < 1 && ratio_op < 1;
      }
    } catch (const std::exception& e) {
      row.all_checks_pass = false;
      row.error = e.what();
    }
    ++summary.rows;
    summary.passed += row.all_checks_pass ? 1 : 0;
    summary.fixed_points += row.fixed_point ? 1 : 0;
    out.rows.push_back(std::move(row));
  }
  summary.max_ratio_point = max_point ? Tr::format(*max_point) : "";
  summary.max_ratio_op = max_op ? Tr::format(*max_op) : "";
  out.cells.push_back(std::move(summary));
}

template <class Real>
std::string max_rendered(const std::vector<CellSummary>& cells, std::string CellSummary::*field) {
  std::optional<Real> best;
  for (const auto& c : cells) {
    const std::string& s = c.*field;
    if (s.empty()) continue;
    Real v = ScalarTraits<Real>::parse(s);
    if (!best || v > *best) best = v;
  }
  return best ? ScalarTraits<Real>::format(*best) : "";
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  std::size_t cell = 0;
  for (const auto& [n, m] : config.dims)
    for (const Rational& eps : config.eps) {
      if (config.mode == ArithmeticMode::Rational)
        run_cell<Rational>(config, cell, n, m, eps, result);
      else
        run_cell<double>(config, cell, n, m, eps, result);
      ++cell;
    }
  for (const auto& c : result.cells) {
    result.passed += c.passed;
    result.fixed_points += c.fixed_points;
  }
  if (config.mode == ArithmeticMode::Rational) {
    result.max_ratio_point = max_rendered<Rational>(result.cells, &CellSummary::max_ratio_point);
    result.max_ratio_op = max_rendered<Rational>(result.cells, &CellSummary::max_ratio_op);
  } else {
    result.max_ratio_point = max_rendered<double>(result.cells, &CellSummary::max_ratio_point);
    result.max_ratio_op = max_rendered<double>(result.cells, &CellSummary::max_ratio_op);
  }
  return result;
}

std::string sweep_csv(const SweepResult& result, bool record_runtime) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& r : result.rows) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", record_runtime ? r.runtime_ms : 0.0);
    out << r.seed << ',' << r.n << ',' << r.m << ',' << r.eps << ',' << r.dist_point << ',' << r.dist_op_exact << ','
        << r.dist_op_bound << ',' << r.ratio_point << ',' << r.ratio_op << ',' << runtime << ','
        << (r.all_checks_pass ? "true" : "false") << "\n";
  }
  return out.str();
}

Json sweep_summary(const SweepResult& result) {
  Json cells = Json::array();
  for (const auto& c : result.cells)
    cells.push_back(Json{{"cell", c.cell},
                         {"n", c.n},
                         {"m", c.m},
                         {"eps", c.eps},
                         {"rows", c.rows},
                         {"passed", c.passed},
                         {"fixed_points", c.fixed_points},
                         {"max_ratio_point", c.max_ratio_point},
                         {"max_ratio_op", c.max_ratio_op},
                         {"ratios_below_one", c.ratios_below_one}});
  Json failures = Json::array();
  for (const auto& r : result.rows)
    if (!r.all_checks_pass) failures.push_back(Json{{"seed", r.seed}, {"cell", r.cell}, {"error", r.error}});
  return Json{{"rows", result.rows.size()},
              {"passed", result.passed},
              {"fixed_points", result.fixed_points},
              {"max_ratio_point", result.max_ratio_point},
              {"max_ratio_op", result.max_ratio_op},
              {"cells", std::move(cells)},
              {"failures", std::move(failures)}};
}

#define BPB_INSTANTIATE(Real)                                                \
  template void check_instance_invariants(const Instance<Real>&);            \
  template Json encode_instance(const Instance<Real>&);                      \
  template RawInstance<Real> decode_raw_instance(const Json&);               \
  template Instance<Real> decode_instance(const Json&);                      \
  template void save_instance(const Instance<Real>&, const std::string&);    \
  template Instance<Real> load_instance(const std::string&);                 \
  template Json encode_lemma_instance(const LemmaInstance<Real>&);           \
  template LemmaInstance<Real> decode_lemma_instance(const Json&);

BPB_INSTANTIATE(Rational)
BPB_INSTANTIATE(double)

#undef BPB_INSTANTIATE

}  // namespace bpb
