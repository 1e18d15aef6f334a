#include "bpb/api.hpp"

#include <cstdlib>

#include "bpb/counterexample.hpp"

namespace bpb::api {

ArithmeticMode resolve_mode(const std::optional<std::string>& flag, const Json* document) {
  if (flag) return parse_mode(*flag);
  if (const char* env = std::getenv("BPB_MODE"); env != nullptr && *env != '\0') return parse_mode(env);
  if (document && document->is_object() && document->contains("mode") && (*document)["mode"].is_string())
    return parse_mode((*document)["mode"].get<std::string>());
  return ArithmeticMode::Rational;
}

namespace {

template <class Real>
Json correct_impl(const Json& doc, const CorrectRequest& req) {
  using Tr = ScalarTraits<Real>;
  RawInstance<Real> raw = decode_raw_instance<Real>(doc);
  if (!req.eps && !raw.eps) throw Error(ErrorCode::InvalidArgument, "no eps given on the command line or in the instance");
  const Real eps = req.eps ? Tr::parse(*req.eps) : *raw.eps;

  PositiveOperator<Real> S(raw.S);
  Json normalization{{"applied", false}};
  if (req.normalize) {
    const Real input_norm = opnorm_positive(S);
    S = normalize_operator(S);
    normalization = Json{{"applied", true},
                         {"input_norm", encode_scalar(input_norm)},
                         {"factor", encode_scalar(Real(Real(1) / input_norm))}};
  }

  const bool c0 = req.c0 || raw.kind == Kind::C0;
  const CorrectOptions options{req.exact_cap};
  Correction<Real> c = c0 ? correct_c0_l1(S, raw.f0, eps, req.c0 || raw.tail_declared_zero, options)
                          : correct_linfty_l1(S, raw.f0, eps, options);
  VerificationReport<Real> report = verify_correction(S, raw.f0, eps, c, req.exact_cap);

  Json out{{"mode", std::string(to_string(Tr::mode))},
           {"kind", c0 ? "c0" : "linfty"},
           {"eps", encode_scalar(eps)},
           {"normalization", std::move(normalization)},
           {"correction", encode_correction(c)},
           {"report", encode_report(report)},
           {"all_pass", report.all_pass()}};
  if (c0)
    out["c0"] = Json{{"tail_declared_zero", true},
                     {"A_and_B_finite", true},
                     {"c_mass_limit", encode_scalar(c.certificate.sfc_mass)}};
  return out;
}

template <class Real>
Json lemma_impl(const Json& doc, const std::optional<std::string>& eps_flag) {
  LemmaInstance<Real> inst = decode_lemma_instance<Real>(doc);
  const Real eps = eps_flag ? ScalarTraits<Real>::parse(*eps_flag) : inst.eps;
  LemmaWitness<Real> w = disjointify(inst.f1, inst.f2, eps);
  auto entries = lemma_certificate(inst.f1, inst.f2, eps, w);
  const bool ok = all_pass(entries);
  return Json{{"mode", std::string(to_string(ScalarTraits<Real>::mode))},
              {"eps", encode_scalar(eps)},
              {"witness", encode_witness(w)},
              {"certificate", encode_entries(entries)},
              {"all_pass", ok}};
}

template <class Real>
Json norm_impl(const Json& doc, bool exact, std::size_t cap) {
  const Json& op_doc = doc.is_object() && doc.contains("S") ? doc["S"] : doc;
  LinearOperator<Real> T = decode_operator<Real>(op_doc, doc.contains("S") ? "/S" : "");
  Json out{{"mode", std::string(to_string(ScalarTraits<Real>::mode))},
           {"positive", T.is_positive()},
           {"rows", T.rows()},
           {"cols", T.cols()},
           {"entry_mass_bound", encode_scalar(entry_mass_bound(T))}};
  if (T.is_positive()) out["opnorm_positive"] = encode_scalar(opnorm_positive(T));
  if (exact || !T.is_positive()) out["opnorm_exact"] = encode_scalar(opnorm_exact(T, cap));
  return out;
}

}  // namespace

Json correct(const Json& instance, const CorrectRequest& request) {
  return request.mode == ArithmeticMode::Rational ? correct_impl<Rational>(instance, request)
                                                  : correct_impl<double>(instance, request);
}

Json lemma(const Json& instance, const std::optional<std::string>& eps, ArithmeticMode mode) {
  return mode == ArithmeticMode::Rational ? lemma_impl<Rational>(instance, eps) : lemma_impl<double>(instance, eps);
}

Json norm(const Json& op_document, ArithmeticMode mode, bool exact, std::size_t cap) {
  return mode == ArithmeticMode::Rational ? norm_impl<Rational>(op_document, exact, cap)
                                          : norm_impl<double>(op_document, exact, cap);
}

Json generate(std::uint64_t seed, std::size_t n, std::size_t m, const std::string& eps, Profile profile, Kind kind,
              ArithmeticMode mode) {
  Instance<Rational> inst = gen_instance(seed, n, m, parse_rational(eps), profile, kind);
  return mode == ArithmeticMode::Rational ? encode_instance(inst) : encode_instance(to_float(inst));
}

Json generate_lemma(std::uint64_t seed, std::size_t dim, const std::optional<std::string>& eps, ArithmeticMode mode) {
  std::optional<Rational> e;
  if (eps) e = parse_rational(*eps);
  LemmaInstance<Rational> inst = gen_lemma_instance(seed, dim, e);
  if (mode == ArithmeticMode::Rational) return encode_lemma_instance(inst);
  auto space = to_float(inst.f1.space());
  return encode_lemma_instance(
      LemmaInstance<double>{to_float(inst.f1, space), to_float(inst.f2, space), to_double(inst.eps)});
}

Json counterexample(const CounterexampleRequest& r) {
  namespace ce = bpb::counterexample;
  require(r.n_min >= 1 && r.n_min <= r.n_max, ErrorCode::InvalidArgument, "need 1 <= n_min <= n_max");
  require(r.k_min >= 1 && r.k_min <= r.k_max, ErrorCode::InvalidArgument, "need 1 <= k_min <= k_max");
  Json norms = Json::array();
  for (std::size_t n = r.n_min; n <= r.n_max; ++n) {
    Json row{{"N", n}, {"identity_norm", ce::identity_norm(n)}};
    if (n <= r.brute_force_max) row["brute_force"] = ce::identity_norm_brute_force(n);
    norms.push_back(std::move(row));
  }
  Json gaps = Json::array();
  for (std::size_t k = r.k_min; k <= r.k_max; ++k) gaps.push_back(Json{{"k", k}, {"gap", ce::attainment_gap(k)}});
  Json out{{"limit", ce::identity_norm_limit()}, {"identity_norm", std::move(norms)}, {"attainment_gap", std::move(gaps)}};
  if (r.convexity_trials > 0) {
    const auto s = ce::run_convexity_trials(r.convexity_trials, r.seed, r.convexity_max_dim);
    out["convexity"] = Json{{"trials", s.trials}, {"passed", s.passed}, {"worst_midpoint", s.worst_midpoint}};
  }
  return out;
}

}  // namespace bpb::api
