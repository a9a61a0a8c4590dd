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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gcap/channel.hpp"

namespace gcap {

enum class AxisScale { linear, log, list };

/// One swept parameter. Names are G, Gp, Gpp or Cg. For scale == list the
/// points are `values` and start/stop/count are ignored.
struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  AxisScale scale = AxisScale::linear;
  std::vector<double> values;

  std::vector<double> points() const;
  std::size_t size() const;
};

enum class Quantity { tau, m, n_e, qlb, qlb_amp, class_label };

std::string_view to_string(Quantity q);
std::string_view to_string(AxisScale s);

struct SweepSpec {
  std::vector<SweepAxis> axes;
  std::map<std::string, double> fixed;
  std::vector<Quantity> quantities;

  /// Throws InvalidArgument on unknown names, overlapping axis/fixed names,
  /// empty quantity list, degenerate axes, both G and Cg given, or a missing
  /// G/Cg, Gp or Gpp.
  void validate() const;
  std::size_t row_count() const;
};

enum class RowStatus { ok, invalid_params, infinite };

std::string_view to_string(RowStatus s);

/// Axis values in spec order, then one value per quantity. The class_label
/// slot of `values` is NaN; the label itself is in `label`.
struct SweepRow {
  std::vector<double> axis_values;
  std::vector<double> values;
  ChannelClass label = ChannelClass::degenerate;
  RowStatus status = RowStatus::ok;
};

/// Evaluates one grid point given every parameter by name.
SweepRow evaluate_point(const std::map<std::string, double>& params,
                        const std::vector<Quantity>& quantities,
                        double tol = kPhysicalityTol);

/// Cartesian product of the axes, first axis slowest. The OpenMP version
/// writes into preallocated slots, so its output equals the serial
/// reference for every worker count. `workers` <= 0 uses the OpenMP default.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers = 0,
                                double tol = kPhysicalityTol);
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec,
                                       double tol = kPhysicalityTol);

/// Canonical sweeps: fig2a, fig2b, fig2c, fig2d, fig3a, fig3b.
SweepSpec figure_spec(std::string_view name);
const std::vector<std::string>& figure_names();

}  // namespace gcap
