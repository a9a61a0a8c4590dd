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

#include "gcap/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gcap/errors.hpp"

namespace gcap {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

nlohmann::ordered_json channel_to_json(const GaussianChannel1M& ch) {
  const double vals[] = {ch.T(0, 0), ch.T(0, 1), ch.T(1, 0),
                         ch.T(1, 1), ch.N(0, 0), ch.N(0, 1),
                         ch.N(1, 1), ch.d(0),    ch.d(1)};
  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < std::size(kChannelFields); ++i) {
    j[std::string(kChannelFields[i])] = json_number(vals[i]);
  }
  return j;
}

GaussianChannel1M channel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidArgument("channel record must be a JSON object");
  }
  auto field = [&](std::string_view key, bool required) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) {
      if (required) {
        throw InvalidArgument("channel record is missing '" +
                              std::string(key) + "'");
      }
      return 0.0;
    }
    if (!it->is_number()) {
      throw InvalidArgument("channel record field '" + std::string(key) +
                            "' is not a number");
    }
    return it->get<double>();
  };
  GaussianChannel1M ch;
  ch.T << field("T11", true), field("T12", true), field("T21", true),
      field("T22", true);
  const double n12 = field("N12", true);
  ch.N << field("N11", true), n12, n12, field("N22", true);
  ch.d << field("d1", false), field("d2", false);
  return ch;
}

GaussianChannel1M parse_channel_record(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("channel record: ") + e.what());
    }
    return channel_from_json(j);
  }
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  if (lines.size() != 2) {
    throw InvalidArgument(
        "channel record: expected a CSV header line and one value line");
  }
  const auto keys = split(lines[0], ',');
  const auto vals = split(lines[1], ',');
  if (keys.size() != vals.size()) {
    throw InvalidArgument("channel record: header/value column mismatch");
  }
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    j[std::string(keys[i])] = parse_double(vals[i]);
  }
  return channel_from_json(j);
}

SweepAxis parse_axis(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2) {
    throw InvalidArgument("axis '" + std::string(text) +
                          "': expected name:start:stop:count[:scale] or "
                          "name:list:v1,v2,...");
  }
  SweepAxis axis;
  axis.name = std::string(parts[0]);
  if (parts[1] == "list") {
    if (parts.size() != 3) {
      throw InvalidArgument("axis '" + std::string(text) +
                            "': list form is name:list:v1,v2,...");
    }
    axis.scale = AxisScale::list;
    for (auto v : split(parts[2], ',')) axis.values.push_back(parse_double(v));
    return axis;
  }
  if (parts.size() != 4 && parts.size() != 5) {
    throw InvalidArgument("axis '" + std::string(text) +
                          "': expected name:start:stop:count[:scale]");
  }
  axis.start = parse_double(parts[1]);
  axis.stop = parse_double(parts[2]);
  axis.count = parse_int(parts[3]);
  if (parts.size() == 5) {
    if (parts[4] == "linear") {
      axis.scale = AxisScale::linear;
    } else if (parts[4] == "log") {
      axis.scale = AxisScale::log;
    } else {
      throw InvalidArgument("axis '" + std::string(text) +
                            "': scale must be linear or log");
    }
  }
  return axis;
}

std::pair<std::string, double> parse_fixed(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw InvalidArgument("fixed '" + std::string(text) +
                          "': expected name=value");
  }
  return {std::string(trim(text.substr(0, eq))),
          parse_double(text.substr(eq + 1))};
}

std::vector<Quantity> parse_quantities(std::string_view text) {
  std::vector<Quantity> qs;
  for (auto name : split(text, ',')) {
    if (name == "tau") {
      qs.push_back(Quantity::tau);
    } else if (name == "m") {
      qs.push_back(Quantity::m);
    } else if (name == "n_e") {
      qs.push_back(Quantity::n_e);
    } else if (name == "qlb") {
      qs.push_back(Quantity::qlb);
    } else if (name == "qlb_amp") {
      qs.push_back(Quantity::qlb_amp);
    } else if (name == "class_label") {
      qs.push_back(Quantity::class_label);
    } else {
      throw InvalidArgument("unknown quantity '" + std::string(name) + "'");
    }
  }
  return qs;
}

std::vector<std::pair<std::string, std::string>> read_key_values(
    std::istream& in) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(lineno) +
                            ": expected key = value");
    }
    kv.emplace_back(std::string(trim(t.substr(0, eq))),
                    std::string(trim(t.substr(eq + 1))));
  }
  return kv;
}

void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<SweepRow>& rows) {
  out << "# gcap sweep\n";
  for (const auto& axis : spec.axes) {
    out << "# axis " << axis.name << ' ' << to_string(axis.scale);
    if (axis.scale == AxisScale::list) {
      out << ' ';
      for (std::size_t i = 0; i < axis.values.size(); ++i) {
        out << (i ? "," : "") << format_number(axis.values[i]);
      }
    } else {
      out << ' ' << format_number(axis.start) << ' '
          << format_number(axis.stop) << ' ' << axis.count;
    }
    out << '\n';
  }
  for (const auto& [name, value] : spec.fixed) {
    out << "# fixed " << name << '=' << format_number(value) << '\n';
  }
  out << "# rows " << rows.size() << '\n';

  for (const auto& axis : spec.axes) out << axis.name << ',';
  for (auto q : spec.quantities) out << to_string(q) << ',';
  out << "status\n";

  for (const auto& row : rows) {
    for (double v : row.axis_values) out << format_number(v) << ',';
    for (std::size_t i = 0; i < spec.quantities.size(); ++i) {
      if (spec.quantities[i] == Quantity::class_label) {
        out << (row.status == RowStatus::invalid_params
                    ? std::string_view("nan")
                    : to_string(row.label));
      } else {
        out << format_number(row.values[i]);
      }
      out << ',';
    }
    out << to_string(row.status) << '\n';
  }
}

void write_json_lines(std::ostream& out, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows) {
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) {
      j[spec.axes[k].name] = json_number(row.axis_values[k]);
    }
    for (std::size_t i = 0; i < spec.quantities.size(); ++i) {
      const std::string key(to_string(spec.quantities[i]));
      if (spec.quantities[i] == Quantity::class_label) {
        if (row.status == RowStatus::invalid_params) {
          j[key] = nullptr;
        } else {
          j[key] = std::string(to_string(row.label));
        }
      } else {
        j[key] = json_number(row.values[i]);
      }
    }
    j["status"] = std::string(to_string(row.status));
    out << j.dump() << '\n';
  }
}

}  // namespace gcap
