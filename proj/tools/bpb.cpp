#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "bpb/api.hpp"
#include "bpb/harness.hpp"

namespace {

struct Globals {
  std::optional<std::string> mode;
  std::optional<double> tol;
  int indent = 2;
};

void emit(const bpb::Json& j, const std::string& out, int indent) {
  const std::string text = j.dump(indent) + "\n";
  if (out.empty() || out == "-")
    std::cout << text;
  else
    bpb::write_text_file(out, text);
}

void apply_tolerance(const Globals& g) {
  if (g.tol) bpb::set_float_tolerance(*g.tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for the Bishop-Phelps-Bollobas property of L_inf -> L_1 operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--mode", g.mode, "rational or float (default: $BPB_MODE, then the file, then rational)");
  app.add_option("--tol", g.tol, "comparison tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_option("--indent", g.indent, "JSON indentation, -1 for compact output");

  int status = 0;

  // correct
  auto* correct = app.add_subcommand("correct", "correct a near-norming pair (S, f0) and verify the result");
  std::string instance_path, correct_out;
  std::optional<std::string> eps;
  bpb::api::CorrectRequest req;
  correct->add_option("--instance", instance_path, "instance JSON")->required();
  correct->add_option("--eps", eps, "eps as p/q (default: the instance's eps)");
  correct->add_flag("--normalize", req.normalize, "rescale S by 1/||S 1||_1 first");
  correct->add_flag("--c0", req.c0, "treat f0 as a c0 vector with zero tail");
  correct->add_option("--exact-cap", req.exact_cap, "largest domain size for sign enumeration");
  correct->add_option("--out", correct_out, "output file (default stdout)");
  correct->callback([&] {
    apply_tolerance(g);
    const bpb::Json doc = bpb::read_json_file(instance_path);
    req.eps = eps;
    req.mode = bpb::api::resolve_mode(g.mode, &doc);
    const bpb::Json result = bpb::api::correct(doc, req);
    emit(result, correct_out, g.indent);
    status = result["all_pass"].get<bool>() ? 0 : 1;
  });

  // lemma
  auto* lemma = app.add_subcommand("lemma", "run the disjoint-support construction and print its certificate");
  std::string lemma_path, lemma_out;
  std::optional<std::string> lemma_eps;
  lemma->add_option("--instance", lemma_path, "JSON with f1, f2, eps and optional measure")->required();
  lemma->add_option("--eps", lemma_eps, "eps as p/q (default: the instance's eps)");
  lemma->add_option("--out", lemma_out, "output file (default stdout)");
  lemma->callback([&] {
    apply_tolerance(g);
    const bpb::Json doc = bpb::read_json_file(lemma_path);
    const bpb::Json result = bpb::api::lemma(doc, lemma_eps, bpb::api::resolve_mode(g.mode, &doc));
    emit(result, lemma_out, g.indent);
    status = result["all_pass"].get<bool>() ? 0 : 1;
  });

  // norm
  auto* norm = app.add_subcommand("norm", "L_inf -> L_1 operator norm of a matrix");
  std::string op_path;
  bool exact = false;
  std::size_t cap = bpb::kDefaultExactCap;
  norm->add_option("--op", op_path, "operator JSON, or an instance with an \"S\" member")->required();
  norm->add_flag("--exact", exact, "also run the sign enumeration");
  norm->add_option("--exact-cap", cap, "largest domain size for sign enumeration");
  norm->callback([&] {
    apply_tolerance(g);
    const bpb::Json doc = bpb::read_json_file(op_path);
    emit(bpb::api::norm(doc, bpb::api::resolve_mode(g.mode, &doc), exact, cap), "", g.indent);
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "generate, correct and verify a grid of instances");
  std::string config_path, csv_out, summary_out;
  bool timing = false;
  sweep->add_option("--config", config_path, "sweep configuration JSON")->required();
  sweep->add_option("--out", csv_out, "CSV output file")->required();
  sweep->add_option("--summary", summary_out, "per-cell summary JSON (default stdout)");
  sweep->add_flag("--timing", timing, "record wall-clock runtime per row");
  sweep->callback([&] {
    apply_tolerance(g);
    const bpb::Json doc = bpb::read_json_file(config_path);
    bpb::SweepConfig config = bpb::parse_sweep_config(doc);
    config.mode = bpb::api::resolve_mode(g.mode, &doc);
    config.record_runtime = config.record_runtime || timing;
    const bpb::SweepResult result = bpb::run_sweep(config);
    bpb::write_text_file(csv_out, bpb::sweep_csv(result, config.record_runtime));
    emit(bpb::sweep_summary(result), summary_out, g.indent);
    status = result.passed == result.rows.size() ? 0 : 1;
  });

  // counterexample
  auto* ce = app.add_subcommand("counterexample", "numerics for the renormed c0 space without the property");
  bpb::api::CounterexampleRequest ce_req;
  bool ce_json = false;
  ce->add_option("--n-min", ce_req.n_min, "smallest N for ||Id_N||");
  ce->add_option("--n-max", ce_req.n_max, "largest N for ||Id_N||");
  ce->add_option("--k-min", ce_req.k_min, "smallest k for the attainment gap");
  ce->add_option("--k-max", ce_req.k_max, "largest k for the attainment gap");
  ce->add_option("--brute-force-max", ce_req.brute_force_max, "largest N checked by sign enumeration");
  ce->add_option("--convexity-trials", ce_req.convexity_trials, "random midpoint strict-convexity trials");
  ce->add_option("--max-dim", ce_req.convexity_max_dim, "largest support for convexity trials");
  ce->add_option("--seed", ce_req.seed, "seed for convexity trials");
  ce->add_flag("--json", ce_json, "print JSON instead of tables");
  ce->callback([&] {
    const bpb::Json r = bpb::api::counterexample(ce_req);
    if (ce_json) {
      emit(r, "", g.indent);
    } else {
      std::printf("%4s  %-22s  %-22s\n", "N", "identity_norm", "brute_force");
      for (const auto& row : r["identity_norm"]) {
        std::printf("%4zu  %-22.17g  ", row["N"].get<std::size_t>(), row["identity_norm"].get<double>());
        if (row.contains("brute_force"))
          std::printf("%-22.17g\n", row["brute_force"].get<double>());
        else
          std::printf("%-22s\n", "-");
      }
      std::printf("limit %.17g\n\n%4s  %s\n", r["limit"].get<double>(), "k", "attainment_gap");
      for (const auto& row : r["attainment_gap"])
        std::printf("%4zu  %.17g\n", row["k"].get<std::size_t>(), row["gap"].get<double>());
      if (r.contains("convexity")) {
        const auto& c = r["convexity"];
        std::printf("\nconvexity %zu/%zu strict, worst midpoint %.17g\n", c["passed"].get<std::size_t>(),
                    c["trials"].get<std::size_t>(), c["worst_midpoint"].get<double>());
      }
    }
    if (r.contains("convexity") && r["convexity"]["passed"] != r["convexity"]["trials"]) status = 1;
  });

  // gen
  auto* gen = app.add_subcommand("gen", "write a seeded instance");
  std::uint64_t seed = 0;
  std::size_t n = 4, m = 4, dim = 8;
  std::string gen_eps = "1/10", profile = "norming-perturbed", kind = "linfty", gen_out;
  bool lemma_inst = false;
  gen->add_option("--seed", seed, "master seed")->required();
  gen->add_option("--n", n, "domain size");
  gen->add_option("--m", m, "codomain size");
  gen->add_option("--eps", gen_eps, "eps as p/q");
  gen->add_option("--profile", profile, "norming-perturbed, sign-pattern or sparse");
  gen->add_option("--kind", kind, "linfty or c0");
  gen->add_flag("--lemma", lemma_inst, "write an (f1, f2, eps) instance instead");
  gen->add_option("--dim", dim, "support size for --lemma");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    const bpb::ArithmeticMode mode = bpb::api::resolve_mode(g.mode);
    if (lemma_inst) {
      std::optional<std::string> e;
      if (gen->count("--eps") > 0) e = gen_eps;
      emit(bpb::api::generate_lemma(seed, dim, e, mode), gen_out, g.indent);
    } else {
      emit(bpb::api::generate(seed, n, m, gen_eps, bpb::parse_profile(profile), bpb::parse_kind(kind), mode), gen_out,
           g.indent);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const bpb::Error& e) {
    std::cerr << "bpb: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bpb: " << e.what() << "\n";
    return 2;
  }
  return status;
}
