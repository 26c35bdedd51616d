// Copyright 2026 The spinkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Exit codes: 0 ok, 1 internal error, 2 invalid input,
// 3 degenerate state.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "spinkin/spinkin.hpp"

using namespace spinkin;

namespace {

void put(const std::string& key, double v) { std::cout << key << ": " << fmt12(v) << '\n'; }
void put(const std::string& key, const std::string& v) { std::cout << key << ": " << v << '\n'; }

const char* const kAxes[3] = {"x", "y", "z"};

void print_header(const StateInput& in) {
  put("spin", in.spin.s());
  put("dim", std::to_string(in.dim()));
  put("pure", is_pure_state(in.rho) ? "true" : "false");
}

void cmd_variance(const std::string& path, const std::string& backend_name) {
  const StateInput in = load_state_file(path);
  const MetricBackend backend = backend_name == "dittmann" ? MetricBackend::dittmann : MetricBackend::eigen;
  const SpinMatrices g = in.generators();
  const StateMetric m = resolve(StateMetric::automatic, in.rho);
  print_header(in);
  put("metric", metric_name(m));
  double d = 0;
  for (int a = 0; a < 3; ++a) {
    const double v = axis_speed_sq(in.rho, g[a], m, backend);
    put(std::string("speed_sq_") + kAxes[a], v);
    d += v;
  }
  put("total_variance", d);
  put("avg_speed_sq", d / 3.0);
  if (in.ket) put("total_variance_closed", total_variance_pure(*in.ket));
}

void cmd_accel(const std::string& path, const std::string& route) {
  const StateInput in = load_state_file(path);
  const SpinMatrices g = in.generators();
  print_header(in);
  if (!is_pure_state(in.rho)) {
    if (route != "design" && route != "all")
      throw InvalidInput("only the design route is available for mixed states");
    put("metric", metric_name(StateMetric::bures));
    put("total_acceleration_design", total_acceleration_mixed(in.rho, g));
    return;
  }
  put("metric", metric_name(StateMetric::fubini_study));
  const bool all = route == "all";
  if (all || route == "exact") put("total_acceleration_exact", total_acceleration_exact(in.rho, g));
  if (all || route == "design") put("total_acceleration_design", total_acceleration_design(in.rho, g));
  if (all || route == "closed") {
    if (in.two_qubit) {
      if (!all) throw InvalidInput("the closed route needs an irreducible spin state");
    } else {
      put("total_acceleration_closed", total_acceleration_closed(in.rho, in.spin));
    }
  }
}

void cmd_excess(const std::string& path) {
  const StateInput in = load_state_file(path);
  if (in.spin.two_s != 2) throw InvalidInput("speed excess needs a spin-1 or two-qubit state");
  ExcessBreakdown b;
  if (in.two_qubit) {
    b = excess_breakdown(in.rho);
  } else if (in.ket) {
    b = excess_breakdown(projector(symmetric_embed(in.ket->amplitudes())));
  } else {
    b = excess_breakdown_symmetric(in.rho);
  }
  print_header(in);
  for (int a = 0; a < 3; ++a) {
    put(std::string("speed_sq_full_") + kAxes[a], b.full[a]);
    put(std::string("speed_sq_first_") + kAxes[a], b.first[a]);
    put(std::string("speed_sq_second_") + kAxes[a], b.second[a]);
    put(std::string("excess_") + kAxes[a], b.excess(a));
  }
  put("total_variance", b.total_full());
  put("total_variance_first", b.total_first());
  put("total_variance_second", b.total_second());
  put("excess_F", b.total_excess());
}

void cmd_lambda(double s) {
  const Spin sp = Spin::from_double(s);
  if (sp.two_s == 0) throw InvalidInput("lambda coefficients need s > 0");
  const auto c = lambda_closed(sp);
  const auto a = lambda_appendix(sp);
  put("spin", sp.s());
  for (int i = 0; i < 5; ++i) put("lambda" + std::to_string(i + 1), c[i]);
  double dev = 0;
  for (int i = 0; i < 5; ++i) dev = std::max(dev, std::abs(a[i] - c[i]));
  put("appendix_max_deviation", dev);
}

int cmd_design_check(std::uint64_t seed, bool rotate) {
  const auto pts = rotate ? design_points(random_rotation(seed)) : design_points();
  double worst = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      const int c = 4 - a - b;
      double avg = 0;
      for (const auto& p : pts) avg += std::pow(p(0), a) * std::pow(p(1), b) * std::pow(p(2), c);
      avg /= static_cast<double>(pts.size());
      const double want = monomial_sphere_average({a, b, c}).convert_to<double>();
      std::cout << "x" << a << "y" << b << "z" << c << ": " << fmt12(avg) << " exact " << fmt12(want) << '\n';
      worst = std::max(worst, std::abs(avg - want));
    }
  put("max_deviation", worst);
  const bool ok = worst <= 1e-14;
  put("status", ok ? "ok" : "fail");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotational kinematics of spin states"};
  app.require_subcommand(1);

  std::string input, backend = "eigen", route = "all", out, metric = "bures";
  double spin = 1;
  std::uint64_t seed = 1;
  bool rotate = false;
  SurveyConfig survey;
  int resolution = 31;

  auto* variance = app.add_subcommand("variance", "total variance and axis speeds");
  variance->add_option("--input", input, "state file")->required();
  variance->add_option("--mixed-backend", backend, "Bures backend")->check(CLI::IsMember({"eigen", "dittmann"}));

  auto* accel = app.add_subcommand("accel", "rotation-averaged squared acceleration");
  accel->add_option("--input", input, "state file")->required();
  accel->add_option("--route", route, "computation route")->check(CLI::IsMember({"exact", "design", "closed", "all"}));

  auto* excess = app.add_subcommand("excess", "two-qubit speed excess");
  excess->add_option("--input", input, "state file")->required();

  auto* lambda = app.add_subcommand("lambda", "coefficients of the closed acceleration formula");
  lambda->add_option("--spin", spin, "spin quantum number")->required();

  auto* design = app.add_subcommand("design-check", "verify the six-point design on quartic monomials");
  design->add_option("--seed", seed, "seed of a random rotation")->each([&](const std::string&) { rotate = true; });

  auto* surv = app.add_subcommand("survey", "random symmetric two-qubit ensemble");
  surv->add_option("--samples", survey.sample_count, "mixed samples")->capture_default_str();
  surv->add_option("--seed", survey.master_seed, "master seed")->capture_default_str();
  surv->add_option("--components", survey.components, "pure components per mixture")->capture_default_str();
  surv->add_option("--pure", survey.pure_count, "extra pure samples")->capture_default_str();
  surv->add_option("--threads", survey.threads, "worker threads, 0 for all cores")->capture_default_str();
  surv->add_option("--metric", metric, "metric for mixed full states")->check(CLI::IsMember({"bures", "trace"}));
  surv->add_option("--out", out, "output directory")->required();

  auto* contour = app.add_subcommand("contour", "spin-3/2 acceleration over pairwise star angles");
  contour->add_option("--resolution", resolution, "grid points per angle")->capture_default_str();
  contour->add_option("--out", out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*variance) cmd_variance(input, backend);
    if (*accel) cmd_accel(input, route);
    if (*excess) cmd_excess(input);
    if (*lambda) cmd_lambda(spin);
    if (*design) return cmd_design_check(seed, rotate);
    if (*surv) {
      survey.full_metric = metric == "trace" ? StateMetric::trace : StateMetric::bures;
      const auto recs = run_survey(survey);
      write_survey_outputs(out, recs, survey);
      write_summary(std::cout, summarize(recs));
    }
    if (*contour) {
      const auto pts = contour_grid(resolution);
      std::ofstream f(out);
      if (!f) throw InvalidInput("cannot write " + out);
      write_contour(f, pts);
      int realizable = 0;
      for (const auto& p : pts) realizable += p.realizable;
      put("points", std::to_string(pts.size()));
      put("realizable", std::to_string(realizable));
    }
  } catch (const DegenerateState& e) {
    std::cerr << "degenerate state: " << e.what() << " (min eigenvalue " << fmt12(e.min_eigenvalue()) << ")\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
