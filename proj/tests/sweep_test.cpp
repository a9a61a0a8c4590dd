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

#include <cmath>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"

#include "gcap/activation.hpp"
#include "gcap/errors.hpp"
#include "gcap/io.hpp"

using namespace gcap;

namespace {

SweepSpec gprime_spec(int count) {
  SweepSpec s;
  s.axes = {{"Gp", 1.0, 30.0, count, AxisScale::linear, {}}};
  s.fixed = {{"G", 1.8}, {"Gpp", 2.0}};
  s.quantities = {Quantity::qlb, Quantity::n_e};
  return s;
}

std::string csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, spec, rows);
  return os.str();
}

}  // namespace

TEST(SweepAxis, Points) {
  SweepAxis lin{"Gp", 1.0, 3.0, 5, AxisScale::linear, {}};
  EXPECT_EQ(lin.points(), (std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}));
  SweepAxis lg{"Gp", 1.0, 100.0, 3, AxisScale::log, {}};
  const auto p = lg.points();
  EXPECT_DOUBLE_EQ(p[1], 10.0);
  EXPECT_EQ(p[2], 100.0);
  SweepAxis list;
  list.name = "G";
  list.scale = AxisScale::list;
  list.values = {1.5, 1.8};
  EXPECT_EQ(list.size(), 2u);
}

TEST(SweepSpec, Validation) {
  auto s = gprime_spec(5);
  EXPECT_NO_THROW(s.validate());

  auto bad = s;
  bad.axes[0].count = 1;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.axes[0].start = 40.0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.fixed["Gp"] = 2.0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.fixed["Cg"] = 0.1;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.fixed.erase("Gpp");
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.axes[0].name = "X";
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.quantities.clear();
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = s;
  bad.axes[0].scale = AxisScale::log;
  bad.axes[0].start = 0.0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(RunSweep, RowCountAndOrder) {
  const auto s = gprime_spec(5);
  EXPECT_EQ(run_sweep(s).size(), 5u);

  SweepSpec two;
  two.axes = {{"Gpp", 1.0, 3.0, 3, AxisScale::linear, {}},
              {"Gp", 1.0, 2.0, 4, AxisScale::linear, {}}};
  two.fixed = {{"G", 2.0}};
  two.quantities = {Quantity::tau};
  const auto rows = run_sweep(two, 3);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].axis_values, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(rows[3].axis_values[0], 1.0);
  EXPECT_EQ(rows[4].axis_values[0], 2.0);
  EXPECT_EQ(rows[4].axis_values[1], 1.0);
  EXPECT_EQ(rows[11].axis_values, (std::vector<double>{3.0, 2.0}));
}

TEST(RunSweep, UnitTauLine) {
  SweepSpec s = gprime_spec(50);
  s.fixed["Gpp"] = 2.25;
  s.quantities = {Quantity::tau, Quantity::class_label};
  for (const auto& row : run_sweep(s)) {
    EXPECT_NEAR(row.values[0], 1.0, 1e-12);
    EXPECT_EQ(row.label, ChannelClass::random_displacement);
  }
}

TEST(RunSweep, PeakNearNoiseCancellation) {
  const auto s = gprime_spec(2901);  // step 0.01
  const auto rows = run_sweep(s);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].values[0] > rows[best].values[0]) best = i;
  }
  EXPECT_NEAR(rows[best].values[0], 2.0, 1e-3);
  EXPECT_NEAR(rows[best].axis_values[0], 10.0, 0.01);
}

TEST(RunSweep, InvalidTuplesAreFlagged) {
  SweepSpec s;
  s.axes = {{"Cg", 0.5, 1.5, 3, AxisScale::linear, {}}};
  s.fixed = {{"Gp", 2.0}, {"Gpp", 2.0}};
  s.quantities = {Quantity::qlb, Quantity::class_label};
  const auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].status, RowStatus::ok);
  EXPECT_EQ(rows[1].status, RowStatus::invalid_params);  // C_g = 1
  EXPECT_EQ(rows[2].status, RowStatus::invalid_params);
  EXPECT_TRUE(std::isnan(rows[2].values[0]));
}

TEST(RunSweep, InfiniteBoundIsFlagged) {
  // The activated channel only reaches sigma2 = 0 as G' -> inf, so the
  // writer is exercised directly.
  SweepSpec s;
  s.axes = {{"Gp", 1.0, 2.0, 2, AxisScale::linear, {}}};
  s.fixed = {{"G", 2.0}, {"Gpp", 2.0}};
  s.quantities = {Quantity::qlb};
  std::vector<SweepRow> rows(1);
  rows[0].axis_values = {1.0};
  rows[0].values = {std::numeric_limits<double>::infinity()};
  rows[0].status = RowStatus::infinite;
  EXPECT_NE(csv(s, rows).find("1,inf,infinite\n"), std::string::npos);
}

TEST(RunSweep, ParallelMatchesSerialReference) {
  const auto spec = figure_spec("fig3a");
  const auto serial = run_sweep_serial(spec);
  const std::string expected = csv(spec, serial);
  for (int workers : {1, 2, 5, 8}) {
    EXPECT_EQ(csv(spec, run_sweep(spec, workers)), expected);
  }
}

TEST(RunSweep, QuantitiesAreNonNegativeWhereRequired) {
  for (const auto& name : figure_names()) {
    const auto spec = figure_spec(name);
    const auto rows = run_sweep(spec);
    EXPECT_EQ(rows.size(), spec.row_count()) << name;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < spec.quantities.size(); ++i) {
        const auto q = spec.quantities[i];
        if ((q == Quantity::qlb || q == Quantity::qlb_amp) &&
            row.status != RowStatus::invalid_params) {
          EXPECT_GE(row.values[i], 0.0) << name;
        }
      }
    }
  }
}

TEST(FigureSpec, Fig2cContainsUnitTauRow) {
  const auto spec = figure_spec("fig2c");
  const auto rows = run_sweep(spec);
  std::size_t on_line = 0;
  for (const auto& row : rows) {
    if (row.axis_values[0] == 2.25) {
      ++on_line;
      EXPECT_NEAR(row.values[1], 1.0, 1e-12);
    }
  }
  EXPECT_EQ(on_line, spec.axes[1].size());
}

TEST(FigureSpec, Fig2dAmplifierDropsToZero) {
  const auto spec = figure_spec("fig2d");
  const auto rows = run_sweep(spec);
  for (const auto& row : rows) {
    const double G = row.axis_values[0];
    const double Gp = row.axis_values[1];
    if (Gp == 1.0) {
      EXPECT_NEAR(row.values[0], std::log2(G / (G - 1.0)), 1e-12);
    }
    if (Gp == 30.0) EXPECT_EQ(row.values[0], 0.0);
  }
}

TEST(FigureSpec, Fig3aHasZeroRegionAtSmallGpp) {
  const auto rows = run_sweep(figure_spec("fig3a"));
  bool zero_small = false, positive = false;
  for (const auto& row : rows) {
    if (row.axis_values[0] < 1.5 && row.values[0] == 0.0) zero_small = true;
    if (row.values[0] > 0.0) positive = true;
  }
  EXPECT_TRUE(zero_small);
  EXPECT_TRUE(positive);
}

TEST(FigureSpec, UnknownName) {
  EXPECT_THROW(figure_spec("fig9"), InvalidArgument);
}

TEST(Io, FormatNumber) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(1.493827160493827), "1.49382716049");
}

TEST(Io, ParseAxis) {
  const auto a = parse_axis("Gp:1:30:100:log");
  EXPECT_EQ(a.name, "Gp");
  EXPECT_EQ(a.count, 100);
  EXPECT_EQ(a.scale, AxisScale::log);
  const auto b = parse_axis("G:list:1.5,1.8,2.5");
  EXPECT_EQ(b.values, (std::vector<double>{1.5, 1.8, 2.5}));
  EXPECT_EQ(parse_axis("Gpp:1:2:3").scale, AxisScale::linear);
  EXPECT_THROW(parse_axis("Gp:1:30"), InvalidArgument);
  EXPECT_THROW(parse_axis("Gp:1:x:3"), InvalidArgument);
  EXPECT_THROW(parse_axis("Gp:1:3:3:cubic"), InvalidArgument);
}

TEST(Io, ParseFixedAndQuantities) {
  EXPECT_EQ(parse_fixed(" G = 1.8 "), (std::pair<std::string, double>{"G", 1.8}));
  EXPECT_THROW(parse_fixed("G1.8"), InvalidArgument);
  EXPECT_EQ(parse_quantities("qlb,n_e,class_label"),
            (std::vector<Quantity>{Quantity::qlb, Quantity::n_e,
                                   Quantity::class_label}));
  EXPECT_THROW(parse_quantities("qlb,capacity"), InvalidArgument);
}

TEST(Io, KeyValueFile) {
  std::istringstream in(
      "# comment\n\naxis = Gp:1:30:5\naxis = Gpp:1:3:3\nfixed = G=1.8\n");
  const auto kv = read_key_values(in);
  ASSERT_EQ(kv.size(), 3u);
  EXPECT_EQ(kv[1].first, "axis");
  EXPECT_EQ(kv[1].second, "Gpp:1:3:3");
  std::istringstream broken("axis Gp\n");
  EXPECT_THROW(read_key_values(broken), InvalidArgument);
}

TEST(Io, ChannelRecordRoundTrip) {
  const auto ch = eac_channel({1.8, 10.0, 2.0});
  const auto j = channel_to_json(ch);
  EXPECT_EQ(j.size(), 9u);
  const auto back = channel_from_json(j);
  EXPECT_EQ(back.T, ch.T);
  EXPECT_EQ(back.N, ch.N);

  const auto from_csv = parse_channel_record(
      "T11,T12,T21,T22,N11,N12,N22\n0.5,0,0,0.5,0.75,0,0.75\n");
  EXPECT_EQ(from_csv.T(1, 1), 0.5);
  EXPECT_EQ(from_csv.d, Eigen::Vector2d::Zero());
  EXPECT_THROW(parse_channel_record("{\"T11\": 1}"), InvalidArgument);
  EXPECT_THROW(parse_channel_record("{oops"), InvalidArgument);
}

TEST(Io, CsvLayout) {
  const auto spec = gprime_spec(3);
  const auto text = csv(spec, run_sweep(spec));
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  EXPECT_EQ(lines[0], "# gcap sweep");
  EXPECT_EQ(lines[1], "# axis Gp linear 1 30 3");
  EXPECT_EQ(lines[2], "# fixed G=1.8");
  EXPECT_EQ(lines[3], "# fixed Gpp=2");
  EXPECT_EQ(lines[5], "Gp,qlb,n_e,status");
  EXPECT_EQ(lines.size(), 6u + 3u);
  EXPECT_EQ(lines[6].substr(0, 2), "1,");
}

TEST(Io, JsonLines) {
  const auto spec = gprime_spec(2);
  std::ostringstream os;
  write_json_lines(os, spec, run_sweep(spec));
  std::istringstream in(os.str());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("Gp"));
    EXPECT_EQ(j["status"], "ok");
    ++n;
  }
  EXPECT_EQ(n, 2);
}
