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

#ifndef SPINKIN_SURVEY_HPP
#define SPINKIN_SURVEY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spinkin/entanglement_measures.hpp"
#include "spinkin/rotational_averages.hpp"
#include "spinkin/states.hpp"

namespace spinkin {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SurveyConfig {
  int sample_count = 3000;
  std::uint64_t master_seed = 1;
  int components = 3;
  int pure_count = 300;  // extra pure spin-1 records after the mixtures
  StateMetric full_metric = StateMetric::bures;  // bures or trace, mixed full states only
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SurveyRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string flag;  // mixed | pure | degenerate
  double purity = kNaN;
  MeasurePanel measures;
  double totvar = kNaN, v2_total = kNaN, v2_red = kNaN, a2_total = kNaN, a2_red = kNaN,
         excess_F = kNaN;
};

inline const std::vector<std::string>& survey_numeric_columns() {
  static const std::vector<std::string> cols = {
      "purity",   "s_vn",        "s_vn_red", "s_lin",    "s_lin_red", "concurrence",
      "negativity", "geo_discord", "totvar", "v2_total", "v2_red",    "a2_total",
      "a2_red",   "excess_F",    "s_vn_bits", "s_vn_red_bits"};
  return cols;
}

inline double column_value(const SurveyRecord& r, const std::string& c) {
  const MeasurePanel& m = r.measures;
  if (c == "purity") return r.purity;
  if (c == "s_vn") return m.s_vn;
  if (c == "s_vn_red") return m.s_vn_reduced;
  if (c == "s_lin") return m.s_lin;
  if (c == "s_lin_red") return m.s_lin_reduced;
  if (c == "concurrence") return m.concurrence;
  if (c == "negativity") return m.negativity;
  if (c == "geo_discord") return m.geo_discord;
  if (c == "totvar") return r.totvar;
  if (c == "v2_total") return r.v2_total;
  if (c == "v2_red") return r.v2_red;
  if (c == "a2_total") return r.a2_total;
  if (c == "a2_red") return r.a2_red;
  if (c == "excess_F") return r.excess_F;
  if (c == "s_vn_bits") return m.s_vn / std::numbers::ln2;
  if (c == "s_vn_red_bits") return m.s_vn_reduced / std::numbers::ln2;
  throw InvalidInput("unknown survey column " + c);
}

// Full panel for one symmetric two-qubit state given as a spin-1 density.
// Full-state kinematics use the 3x3 representative; reduced ones the partial
// trace of the embedded 4x4 state.
inline SurveyRecord evaluate_record(const ComplexMatrix& rho3, StateMetric full_metric = StateMetric::bures) {
  SurveyRecord r;
  const ComplexMatrix e = symmetric_embed(rho3);
  const ComplexMatrix r1 = partial_trace(e, 2, 2, Subsystem::first);
  const ComplexMatrix r2 = partial_trace(e, 2, 2, Subsystem::second);
  r.purity = (rho3 * rho3).trace().real();
  r.measures = measure_panel(e);
  const bool pure = std::abs(r.purity - 1.0) <= kPurityTol;
  r.flag = pure ? "pure" : "mixed";
  const StateMetric fm = pure ? StateMetric::fubini_study : full_metric;
  const SpinMatrices g1 = spin_matrices(Spin(2));
  const SpinMatrices gh = spin_matrices(Spin(1));
  try {
    r.totvar = total_variance(rho3, g1, fm);
    r.v2_total = r.totvar / 3.0;
    r.a2_total = total_acceleration(rho3, g1, fm);
    r.v2_red = avg_speed_sq(r1, gh);
    const double v2_red2 = avg_speed_sq(r2, gh);
    r.a2_red = total_acceleration(r1, gh);
    r.excess_F = r.v2_total - r.v2_red - v2_red2;
  } catch (const DegenerateState&) {
    r.flag = "degenerate";
    r.totvar = r.v2_total = r.v2_red = r.a2_total = r.a2_red = r.excess_F = kNaN;
  }
  return r;
}

template <class F>
void parallel_for(int n, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const int lo = static_cast<int>(t) * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline std::vector<SurveyRecord> run_survey(const SurveyConfig& cfg) {
  if (cfg.sample_count < 1) throw InvalidInput("survey needs at least one sample");
  if (cfg.components < 1) throw InvalidInput("survey needs at least one mixture component");
  if (cfg.pure_count < 0) throw InvalidInput("pure sample count must be non-negative");
  if (cfg.full_metric != StateMetric::bures && cfg.full_metric != StateMetric::trace)
    throw InvalidInput("survey metric must be bures or trace");
  const int total = cfg.sample_count + cfg.pure_count;
  std::vector<SurveyRecord> out(total);
  parallel_for(total, cfg.threads, [&](int i) {
    const std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
    const ComplexMatrix rho3 = i < cfg.sample_count
                                   ? random_mixed_symmetric(seed, cfg.components).matrix()
                                   : random_pure(Spin(2), seed).density();
    SurveyRecord r = evaluate_record(rho3, cfg.full_metric);
    r.index = i;
    r.seed = seed;
    out[i] = std::move(r);
  });
  return out;
}

// Pearson correlation over rows where both columns are finite.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  double n = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::isfinite(x[i]) && std::isfinite(y[i])) {
      n += 1;
      sx += x[i];
      sy += y[i];
    }
  if (n < 2) return kNaN;
  const double mx = sx / n, my = sy / n;
  double cxy = 0, cxx = 0, cyy = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::isfinite(x[i]) && std::isfinite(y[i])) {
      cxy += (x[i] - mx) * (y[i] - my);
      cxx += (x[i] - mx) * (x[i] - mx);
      cyy += (y[i] - my) * (y[i] - my);
    }
  if (cxx <= 0 || cyy <= 0) return kNaN;
  return cxy / std::sqrt(cxx * cyy);
}

inline RealMatrix correlation_matrix(const std::vector<SurveyRecord>& recs, bool mixed_only = true) {
  const auto& cols = survey_numeric_columns();
  std::vector<std::vector<double>> data(cols.size());
  for (const auto& r : recs) {
    if (mixed_only && r.flag == "pure") continue;
    for (std::size_t c = 0; c < cols.size(); ++c) data[c].push_back(column_value(r, cols[c]));
  }
  RealMatrix m(cols.size(), cols.size());
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = pearson(data[a], data[b]);
  return m;
}

struct SurveySummary {
  int mixed = 0, pure = 0, degenerate = 0;
  double negative_F_fraction = kNaN;  // over mixed records with finite F
  double min_F_pure = kNaN;
  double min_F_mixed = kNaN;
  double max_F_mixed = kNaN;
  double affine_max_residual = kNaN;  // |v2_red - (1 - S_L(rho1))/6|
  double pure_excess_max_residual = kNaN;  // |F - (2/3)(D - 1)| on pure records
};

inline SurveySummary summarize(const std::vector<SurveyRecord>& recs) {
  SurveySummary s;
  int neg = 0, finite_mixed = 0;
  double aff = 0, pex = 0;
  double minp = std::numeric_limits<double>::infinity();
  double minm = std::numeric_limits<double>::infinity(), maxm = -minm;
  bool any_aff = false, any_pure = false;
  for (const auto& r : recs) {
    if (r.flag == "degenerate") {
      ++s.degenerate;
      continue;
    }
    if (std::isfinite(r.v2_red)) {
      aff = std::max(aff, std::abs(r.v2_red - (1.0 - r.measures.s_lin_reduced) / 6.0));
      any_aff = true;
    }
    if (r.flag == "pure") {
      ++s.pure;
      minp = std::min(minp, r.excess_F);
      pex = std::max(pex, std::abs(r.excess_F - 2.0 / 3.0 * (r.totvar - 1.0)));
      any_pure = true;
    } else {
      ++s.mixed;
      ++finite_mixed;
      if (r.excess_F < 0) ++neg;
      minm = std::min(minm, r.excess_F);
      maxm = std::max(maxm, r.excess_F);
    }
  }
  if (finite_mixed > 0) {
    s.negative_F_fraction = double(neg) / finite_mixed;
    s.min_F_mixed = minm;
    s.max_F_mixed = maxm;
  }
  if (any_pure) {
    s.min_F_pure = minp;
    s.pure_excess_max_residual = pex;
  }
  if (any_aff) s.affine_max_residual = aff;
  return s;
}

// ---------------------------------------------------------------------------
// Output

inline std::string fmt12(double v) {
  if (!std::isfinite(v)) return "";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

inline std::string metric_name(StateMetric m) {
  switch (m) {
    case StateMetric::trace: return "trace";
    case StateMetric::fubini_study: return "fubini_study";
    case StateMetric::automatic: return "automatic";
    default: return "bures";
  }
}

inline void write_survey_csv(std::ostream& os, const std::vector<SurveyRecord>& recs, const SurveyConfig& cfg) {
  os << "# samples=" << cfg.sample_count << " pure=" << cfg.pure_count << " seed=" << cfg.master_seed
     << " components=" << cfg.components << " full_metric=" << metric_name(cfg.full_metric)
     << " reduced_metric=bures kinematics=axis_averaged(x,y,z) acceleration=six_axis_design"
     << " entropy=natural_log\n";
  os << "index,seed,flag,purity,s_vn,s_vn_red,s_lin,s_lin_red,concurrence,negativity,geo_discord,"
        "totvar,v2_total,v2_red,a2_total,a2_red,excess_F,s_vn_bits,s_vn_red_bits\n";
  for (const auto& r : recs) {
    os << r.index << ',' << r.seed << ',' << r.flag;
    for (const auto& c : survey_numeric_columns()) {
      if (c == "s_vn_bits") continue;
      if (c == "s_vn_red_bits") continue;
      os << ',' << fmt12(column_value(r, c));
    }
    os << ',' << fmt12(column_value(r, "s_vn_bits")) << ',' << fmt12(column_value(r, "s_vn_red_bits")) << '\n';
  }
}

struct FigureSpec {
  std::string id, x, y;
};

// (x, y) for each "y vs x" panel
inline const std::vector<FigureSpec>& figure_specs() {
  static const std::vector<FigureSpec> specs = {
      {"fig4a", "s_vn", "s_lin"},         {"fig4b", "s_vn_red", "s_vn"},
      {"fig4c", "s_vn_red", "s_lin_red"}, {"fig5a", "s_vn_red", "concurrence"},
      {"fig5b", "s_vn", "concurrence"},   {"fig5c", "concurrence", "negativity"},
      {"fig6a", "a2_total", "s_vn"},      {"fig6b", "a2_total", "s_vn_red"},
      {"fig6c", "a2_total", "concurrence"}, {"fig6d", "a2_total", "v2_total"},
      {"fig6e", "a2_total", "v2_red"},    {"fig6f", "a2_total", "a2_red"},
      {"fig7a", "a2_red", "s_vn"},        {"fig7b", "a2_red", "s_vn_red"},
      {"fig7c", "a2_red", "concurrence"}, {"fig7d", "a2_red", "v2_total"},
      {"fig7e", "a2_red", "v2_red"},      {"fig8a", "v2_total", "concurrence"},
      {"fig8b", "v2_red", "concurrence"}, {"fig8c", "v2_total", "s_lin"},
      {"fig8d", "v2_total", "s_lin_red"}, {"fig8e", "v2_red", "concurrence"},
      {"fig8f", "v2_red", "s_lin_red"},   {"fig9a", "v2_total", "geo_discord"},
      {"fig9b", "v2_red", "geo_discord"}, {"fig9c", "a2_total", "geo_discord"},
      {"fig9d", "excess_F", "geo_discord"}, {"fig9e", "excess_F", "concurrence"}};
  return specs;
}

inline const FigureSpec& figure_spec(const std::string& id) {
  for (const auto& f : figure_specs())
    if (f.id == id) return f;
  throw InvalidInput("unknown figure id " + id);
}

// Mixed records only; rows with a missing value are skipped.
inline void emit_figure_data(std::ostream& os, const std::vector<SurveyRecord>& recs, const std::string& id) {
  const FigureSpec& f = figure_spec(id);
  os << "index," << f.x << ',' << f.y << '\n';
  for (const auto& r : recs) {
    if (r.flag == "pure") continue;
    const double x = column_value(r, f.x), y = column_value(r, f.y);
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    os << r.index << ',' << fmt12(x) << ',' << fmt12(y) << '\n';
  }
}

inline void write_correlations(std::ostream& os, const RealMatrix& m) {
  const auto& cols = survey_numeric_columns();
  os << "column";
  for (const auto& c : cols) os << ',' << c;
  os << '\n';
  for (std::size_t a = 0; a < cols.size(); ++a) {
    os << cols[a];
    for (std::size_t b = 0; b < cols.size(); ++b) os << ',' << fmt12(m(a, b));
    os << '\n';
  }
}

inline void write_summary(std::ostream& os, const SurveySummary& s) {
  os << "mixed_records: " << s.mixed << '\n'
     << "pure_records: " << s.pure << '\n'
     << "degenerate_records: " << s.degenerate << '\n'
     << "negative_F_fraction: " << fmt12(s.negative_F_fraction) << '\n'
     << "min_F_mixed: " << fmt12(s.min_F_mixed) << '\n'
     << "max_F_mixed: " << fmt12(s.max_F_mixed) << '\n'
     << "min_F_pure: " << fmt12(s.min_F_pure) << '\n'
     << "pure_excess_affine_max_residual: " << fmt12(s.pure_excess_max_residual) << '\n'
     << "reduced_speed_affine_max_residual: " << fmt12(s.affine_max_residual) << '\n';
}

inline void write_survey_outputs(const std::filesystem::path& dir, const std::vector<SurveyRecord>& recs,
                                 const SurveyConfig& cfg) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(dir / name);
    if (!f) throw InvalidInput("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("survey.csv");
    write_survey_csv(f, recs, cfg);
  }
  {
    auto f = open("correlations.csv");
    write_correlations(f, correlation_matrix(recs));
  }
  {
    auto f = open("summary.txt");
    write_summary(f, summarize(recs));
  }
  for (const auto& spec : figure_specs()) {
    auto f = open(spec.id + ".csv");
    emit_figure_data(f, recs, spec.id);
  }
}

// ---------------------------------------------------------------------------
// Spin-3/2 total acceleration over constellation shapes

struct ContourPoint {
  double alpha = 0, beta = 0, gamma = 0;
  bool realizable = false;
  double value = kNaN;
};

inline std::vector<ContourPoint> contour_grid(int resolution, unsigned threads = 0) {
  if (resolution < 2) throw InvalidInput("contour resolution must be at least 2");
  const int r = resolution;
  std::vector<ContourPoint> pts(static_cast<std::size_t>(r) * r * r);
  const double step = std::numbers::pi / (r - 1);
  parallel_for(static_cast<int>(pts.size()), threads, [&](int idx) {
    ContourPoint p;
    p.alpha = step * (idx / (r * r));
    p.beta = step * ((idx / r) % r);
    p.gamma = step * (idx % r);
    p.realizable = angle_gram_min_eigenvalue(p.alpha, p.beta, p.gamma) >= -1e-12;
    if (p.realizable) {
      const PureState psi = constellation_to_state(constellation_from_pairwise_angles(p.alpha, p.beta, p.gamma));
      p.value = total_acceleration_closed(psi);
    }
    pts[idx] = p;
  });
  return pts;
}

inline void write_contour(std::ostream& os, const std::vector<ContourPoint>& pts) {
  os << "alpha,beta,gamma,realizable,value\n";
  for (const auto& p : pts)
    os << fmt12(p.alpha) << ',' << fmt12(p.beta) << ',' << fmt12(p.gamma) << ',' << (p.realizable ? 1 : 0)
       << ',' << fmt12(p.value) << '\n';
}

}  // namespace spinkin

#endif  // SPINKIN_SURVEY_HPP
