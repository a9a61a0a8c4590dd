// Copyright 2026 The gcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcap/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <omp.h>

#include "gcap/activation.hpp"
#include "gcap/errors.hpp"
#include "gcap/transducer.hpp"

namespace gcap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::set<std::string> kParamNames = {"G", "Gp", "Gpp", "Cg"};

// Row index -> per-axis point index, last axis fastest.
std::vector<std::size_t> unravel(std::size_t row,
                                 const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> idx(sizes.size());
  for (std::size_t k = sizes.size(); k-- > 0;) {
    idx[k] = row % sizes[k];
    row /= sizes[k];
  }
  return idx;
}

struct Grid {
  std::vector<std::vector<double>> points;
  std::vector<std::size_t> sizes;
};

Grid make_grid(const SweepSpec& spec) {
  Grid g;
  for (const auto& axis : spec.axes) {
    g.points.push_back(axis.points());
    g.sizes.push_back(g.points.back().size());
  }
  return g;
}

SweepRow evaluate_row(const SweepSpec& spec, const Grid& grid,
                      std::size_t row, double tol) {
  auto params = spec.fixed;
  const auto idx = unravel(row, grid.sizes);
  std::vector<double> axis_values(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    axis_values[k] = grid.points[k][idx[k]];
    params[spec.axes[k].name] = axis_values[k];
  }
  SweepRow r = evaluate_point(params, spec.quantities, tol);
  r.axis_values = std::move(axis_values);
  return r;
}

}  // namespace

std::vector<double> SweepAxis::points() const {
  if (scale == AxisScale::list) return values;
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    xs[i] = scale == AxisScale::linear
                ? start + (stop - start) * i / (count - 1)
                : start * std::pow(stop / start, f);
  }
  xs.back() = stop;
  return xs;
}

std::size_t SweepAxis::size() const {
  return scale == AxisScale::list ? values.size()
                                  : static_cast<std::size_t>(count);
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::tau: return "tau";
    case Quantity::m: return "m";
    case Quantity::n_e: return "n_e";
    case Quantity::qlb: return "qlb";
    case Quantity::qlb_amp: return "qlb_amp";
    case Quantity::class_label: return "class_label";
  }
  return "unknown";
}

std::string_view to_string(AxisScale s) {
  switch (s) {
    case AxisScale::linear: return "linear";
    case AxisScale::log: return "log";
    case AxisScale::list: return "list";
  }
  return "unknown";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::invalid_params: return "invalid_params";
    case RowStatus::infinite: return "infinite";
  }
  return "unknown";
}

void SweepSpec::validate() const {
  std::set<std::string> names;
  for (const auto& axis : axes) {
    if (!kParamNames.count(axis.name)) {
      throw InvalidArgument("sweep: unknown axis name '" + axis.name + "'");
    }
    if (!names.insert(axis.name).second) {
      throw InvalidArgument("sweep: axis '" + axis.name + "' given twice");
    }
    if (axis.scale == AxisScale::list) {
      if (axis.values.empty()) {
        throw InvalidArgument("sweep: list axis '" + axis.name +
                              "' has no values");
      }
      for (double v : axis.values) {
        if (!std::isfinite(v)) {
          throw InvalidArgument("sweep: list axis values must be finite");
        }
      }
      continue;
    }
    if (axis.count < 2) {
      throw InvalidArgument("sweep: axis '" + axis.name +
                            "' needs count >= 2");
    }
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop) ||
        !(axis.start < axis.stop)) {
      throw InvalidArgument("sweep: axis '" + axis.name +
                            "' needs finite start < stop");
    }
    if (axis.scale == AxisScale::log && !(axis.start > 0.0)) {
      throw InvalidArgument("sweep: log axis '" + axis.name +
                            "' needs start > 0");
    }
  }
  for (const auto& [name, value] : fixed) {
    if (!kParamNames.count(name)) {
      throw InvalidArgument("sweep: unknown fixed parameter '" + name + "'");
    }
    if (!names.insert(name).second) {
      throw InvalidArgument("sweep: '" + name +
                            "' is both an axis and a fixed value");
    }
    if (!std::isfinite(value)) {
      throw InvalidArgument("sweep: fixed value for '" + name +
                            "' is not finite");
    }
  }
  if (names.count("G") && names.count("Cg")) {
    throw InvalidArgument("sweep: G and Cg are mutually exclusive");
  }
  if (!names.count("G") && !names.count("Cg")) {
    throw InvalidArgument("sweep: one of G or Cg is required");
  }
  for (const char* required : {"Gp", "Gpp"}) {
    if (!names.count(required)) {
      throw InvalidArgument(std::string("sweep: parameter '") + required +
                            "' is required");
    }
  }
  if (quantities.empty()) {
    throw InvalidArgument("sweep: no quantities requested");
  }
}

std::size_t SweepSpec::row_count() const {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.size();
  return n;
}

SweepRow evaluate_point(const std::map<std::string, double>& params,
                        const std::vector<Quantity>& quantities, double tol) {
  SweepRow row;
  row.values.assign(quantities.size(), kNaN);
  try {
    ActivationParams p;
    if (auto it = params.find("Cg"); it != params.end()) {
      if (!(it->second > 0.0 && it->second < 1.0)) {
        throw InvalidArgument("Cg outside (0, 1)");
      }
      p.G = gain_from_cooperativity(it->second);
    } else {
      p.G = params.at("G");
    }
    p.G_p = params.at("Gp");
    p.G_pp = params.at("Gpp");
    p.validate();

    const auto ch = eac_channel(p);
    const auto inv = classify(ch, tol);
    row.label = inv.class_label;
    for (std::size_t i = 0; i < quantities.size(); ++i) {
      double v = kNaN;
      switch (quantities[i]) {
        case Quantity::tau: v = inv.tau; break;
        case Quantity::m: v = eac_noise_m(p); break;
        case Quantity::n_e: v = inv.n_e.value_or(kNaN); break;
        case Quantity::qlb: v = q_lower_bound(inv); break;
        case Quantity::qlb_amp:
          v = q_lower_bound(amplification(p.G, p.G_p - 1.0), tol);
          break;
        case Quantity::class_label: break;
      }
      row.values[i] = v;
      if (std::isinf(v)) row.status = RowStatus::infinite;
    }
  } catch (const std::exception&) {
    row.values.assign(quantities.size(), kNaN);
    row.label = ChannelClass::degenerate;
    row.status = RowStatus::invalid_params;
  }
  return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, double tol) {
  spec.validate();
  const Grid grid = make_grid(spec);
  std::vector<SweepRow> rows(spec.row_count());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r] = evaluate_row(spec, grid, r, tol);
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers,
                                double tol) {
  spec.validate();
  const Grid grid = make_grid(spec);
  std::vector<SweepRow> rows(spec.row_count());
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    rows[r] = evaluate_row(spec, grid, static_cast<std::size_t>(r), tol);
  }
  return rows;
}

namespace {

SweepAxis linear_axis(std::string name, double start, double stop,
                      int count) {
  return {std::move(name), start, stop, count, AxisScale::linear, {}};
}

SweepAxis list_axis(std::string name, std::vector<double> values) {
  SweepAxis a;
  a.name = std::move(name);
  a.scale = AxisScale::list;
  a.values = std::move(values);
  return a;
}

// 581 points on [1, 30] is a step of exactly 0.05.
SweepAxis fig2_gprime_axis() { return linear_axis("Gp", 1.0, 30.0, 581); }

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c",
                                                 "fig2d", "fig3a", "fig3b"};
  return names;
}

SweepSpec figure_spec(std::string_view name) {
  SweepSpec s;
  const std::vector<double> amp_gains = {1.5, 1.8, 2.5};
  if (name == "fig2a" || name == "fig2b" || name == "fig2d") {
    s.axes = {list_axis("G", amp_gains), fig2_gprime_axis()};
    s.fixed = {{"Gpp", 2.0}};
    if (name == "fig2a") {
      s.quantities = {Quantity::qlb};
    } else if (name == "fig2b") {
      s.quantities = {Quantity::n_e};
    } else {
      s.quantities = {Quantity::qlb_amp, Quantity::qlb};
    }
  } else if (name == "fig2c") {
    // G'' step 0.0125 puts the tau = 1 line (G'' = 2.25) on the grid.
    s.axes = {linear_axis("Gpp", 1.0, 3.5, 201),
              linear_axis("Gp", 1.0, 30.0, 200)};
    s.fixed = {{"G", 1.8}};
    s.quantities = {Quantity::qlb, Quantity::tau, Quantity::class_label};
  } else if (name == "fig3a") {
    s.axes = {linear_axis("Gpp", 1.0, 4.0, 241),
              linear_axis("Gp", 1.0, 30.0, 200)};
    s.fixed = {{"Cg", 0.1}};
    s.quantities = {Quantity::qlb};
  } else if (name == "fig3b") {
    s.axes = {linear_axis("Cg", 0.05, 0.95, 19),
              linear_axis("Gpp", 1.0, 4.0, 100),
              linear_axis("Gp", 1.0, 30.0, 100)};
    s.quantities = {Quantity::qlb};
  } else {
    throw InvalidArgument("unknown figure '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace gcap
