// Command-line surface: every pipeline with JSON input/output plus the
// property-suite runner. Exit codes: 0 success, 2 domain precondition
// failure (machine-readable error JSON on stderr), 3 parse/usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "swu2/serialize.hpp"
#include "swu2/suites.hpp"

using namespace swu2;

namespace {

struct Options {
  ll p = 5;
  int f = 1;
  int trunc = 8;
  uint64_t seed = 1;
  int trials = 0;
  int radius = 3;
  bool exhaustive = false;
};

json parse_json(const std::string& text) { return json::parse(text); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_jh(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  DLRepU r = dlrepu_from_json(parse_json(arg));
  emit(weights_to_json(jh_factors(ctx, r)));
  return 0;
}

int cmd_predict(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  TameLParam rho = lparam_from_json(ctx, parse_json(arg));
  emit(weights_to_json(predicted_weights(ctx, rho)));
  return 0;
}

int cmd_bc(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  json in = parse_json(arg);
  if (in.contains("type")) {
    emit(to_json(bc_type(ctx, dlrepu_from_json(in.at("type")))));
  } else if (in.contains("weight")) {
    SerreWeightU w = weightu_from_json(ctx, in.at("weight"));
    emit(to_json(bc_weight(ctx, w)));
  } else {
    fail(Err::PreconditionViolated, "bc: expected a \"type\" or \"weight\" key");
  }
  return 0;
}

int cmd_intersect(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  json in = parse_json(arg);
  auto wit = intersect_types(ctx, dlrepu_from_json(in.at("s1")),
                             dlrepu_from_json(in.at("s2")));
  if (!wit)
    emit(json{{"empty", true}});
  else
    emit(to_json(*wit));
  return 0;
}

int cmd_shape(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  json in = parse_json(arg);
  TameLParam rho = lparam_from_json(ctx, in.at("rho"));
  InertialTypeGL tau = inertial_from_json(ctx, in.at("tau"));
  auto shape = infer_shape(ctx, rho, tau);
  if (!shape)
    emit(json{{"empty", true}});
  else
    emit(json{{"shape", to_json(*shape)}});
  return 0;
}

int cmd_multiplicity(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  ShapeVec shape = shape_from_json(parse_json(arg));
  emit(to_json(ring_invariants(ctx, shape)));
  return 0;
}

int cmd_bm_check(const Options& opt, const std::string& arg) {
  PrimeContext ctx(opt.p, opt.f);
  json in = parse_json(arg);
  TameLParam rho = lparam_from_json(ctx, in.at("rho"));
  InertialTypeGL tau = inertial_from_json(ctx, in.at("tau"));
  emit(to_json(breuil_mezard_check(ctx, rho, tau)));
  return 0;
}

int cmd_check(const Options& opt, const std::string& name) {
  std::vector<SuiteResult> results;
  if (name == "all")
    results = suites::run_all(opt.seed);
  else
    results.push_back(suites::run_named(name, opt.seed, opt.trials,
                                        opt.exhaustive, opt.radius));
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%-18s %s  checks=%lld%s%s\n", r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.checks,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Serre-weight combinatorics for rank-2 unramified unitary groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", opt.p, "odd prime p");
  app.add_option("--f", opt.f, "number of embeddings f");
  app.add_option("--trunc", opt.trunc, "series truncation degree");
  app.add_option("--seed", opt.seed, "random seed for suites");
  app.add_option("--trials", opt.trials, "trial count override for suites");
  app.add_option("--radius", opt.radius, "search radius for disjoint types");
  app.add_flag("--exhaustive", opt.exhaustive, "run exhaustive suite legs");

  std::string arg;
  auto* jh = app.add_subcommand("jh", "Jordan-Hoelder factors of a type");
  jh->add_option("json", arg, "DL representation JSON")->required();
  auto* predict = app.add_subcommand("predict", "predicted weight set W?");
  predict->add_option("json", arg, "tame L-parameter JSON")->required();
  auto* bc = app.add_subcommand("bc", "base change of a type or weight");
  bc->add_option("json", arg, "{\"type\": ...} or {\"weight\": ...}")->required();
  auto* intersect = app.add_subcommand("intersect", "intersection witness");
  intersect->add_option("json", arg, "{\"s1\": ..., \"s2\": ...}")->required();
  auto* shape = app.add_subcommand("shape", "inferred Kisin shape");
  shape->add_option("json", arg, "{\"rho\": ..., \"tau\": ...}")->required();
  auto* mult = app.add_subcommand("multiplicity", "deformation-ring invariants");
  mult->add_option("json", arg, "shape vector JSON")->required();
  auto* bm = app.add_subcommand("bm-check", "multiplicity consistency report");
  bm->add_option("json", arg, "{\"rho\": ..., \"tau\": ...}")->required();
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", arg,
                    "jh-distinct | jh-bc | intersection | squaring | "
                    "eps-fixed | predict-bc | kisin-cells | bm | "
                    "neighbor-disjoint | dims | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (jh->parsed()) return cmd_jh(opt, arg);
    if (predict->parsed()) return cmd_predict(opt, arg);
    if (bc->parsed()) return cmd_bc(opt, arg);
    if (intersect->parsed()) return cmd_intersect(opt, arg);
    if (shape->parsed()) return cmd_shape(opt, arg);
    if (mult->parsed()) return cmd_multiplicity(opt, arg);
    if (bm->parsed()) return cmd_bm_check(opt, arg);
    if (check->parsed()) return cmd_check(opt, arg);
  } catch (const SpecError& e) {
    std::cerr << json{{"error", e.name()}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "ParseError"}, {"detail", e.what()}}.dump()
              << "\n";
    return 3;
  }
  return 3;
}
