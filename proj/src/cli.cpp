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

#include "gcap/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "gcap/activation.hpp"
#include "gcap/channel.hpp"
#include "gcap/errors.hpp"
#include "gcap/io.hpp"
#include "gcap/sweep.hpp"
#include "gcap/transducer.hpp"

namespace gcap {

namespace {

using Value = std::variant<double, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

void print_record(std::ostream& out, const Record& rec, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    for (const auto& [key, value] : rec) {
      if (const auto* s = std::get_if<std::string>(&value)) {
        j[key] = *s;
      } else {
        const double v = std::get<double>(value);
        if (std::isnan(v)) {
          j[key] = nullptr;
        } else if (std::isinf(v)) {
          j[key] = format_number(v);
        } else {
          j[key] = v;
        }
      }
    }
    out << j.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < rec.size(); ++i) {
    out << (i ? "," : "") << rec[i].first;
  }
  out << '\n';
  for (std::size_t i = 0; i < rec.size(); ++i) {
    out << (i ? "," : "");
    if (const auto* s = std::get_if<std::string>(&rec[i].second)) {
      out << *s;
    } else {
      out << format_number(std::get<double>(rec[i].second));
    }
  }
  out << '\n';
}

void append_channel(Record& rec, const GaussianChannel1M& ch) {
  const double vals[] = {ch.T(0, 0), ch.T(0, 1), ch.T(1, 0),
                         ch.T(1, 1), ch.N(0, 0), ch.N(0, 1),
                         ch.N(1, 1), ch.d(0),    ch.d(1)};
  for (std::size_t i = 0; i < std::size(kChannelFields); ++i) {
    rec.emplace_back(std::string(kChannelFields[i]), vals[i]);
  }
}

void append_invariants(Record& rec, const ChannelInvariants& inv) {
  rec.emplace_back("tau", inv.tau);
  rec.emplace_back("r", static_cast<double>(inv.r));
  rec.emplace_back("n_e", inv.n_e.value_or(std::nan("")));
  rec.emplace_back("sigma2", inv.sigma2);
  rec.emplace_back("class_label", std::string(to_string(inv.class_label)));
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<double> parse_list(const std::string& text, std::size_t expect,
                               const char* flag) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(flag) + ": not a number: '" + item +
                            "'");
    }
  }
  if (xs.size() != expect) {
    throw InvalidArgument(std::string(flag) + ": expected " +
                          std::to_string(expect) + " comma-separated values");
  }
  return xs;
}

// Channel given as a record file, inline matrices, or a named family.
struct ChannelInput {
  std::string file;
  std::string t, n, d;
  std::string kind;
  double gain = 0.0, eta = 0.0, nth = 0.0, sigma2 = 0.0;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--channel", file,
                              "Channel record file (JSON or CSV), - for stdin");
    auto* ot = cmd->add_option("--T", t, "T as T11,T12,T21,T22");
    auto* on = cmd->add_option("--N", n, "N as N11,N12,N22");
    cmd->add_option("--d", d, "d as d1,d2")->needs(ot);
    auto* k = cmd->add_option("--kind", kind, "Named channel family")
                  ->check(CLI::IsMember({"amplification", "phase_conjugation",
                                         "loss", "random_displacement"}));
    cmd->add_option("--gain", gain, "Gain for amplification/phase_conjugation");
    cmd->add_option("--eta", eta, "Transmissivity for loss");
    cmd->add_option("--nth", nth, "Thermal occupation of the environment");
    cmd->add_option("--sigma2", sigma2, "Variance for random_displacement");
    ot->needs(on);
    on->needs(ot);
    f->excludes(ot)->excludes(k);
    k->excludes(ot);
  }

  GaussianChannel1M build() const {
    if (!file.empty()) return parse_channel_record(read_all(file));
    if (!t.empty()) {
      const auto tv = parse_list(t, 4, "--T");
      const auto nv = parse_list(n, 3, "--N");
      GaussianChannel1M ch;
      ch.T << tv[0], tv[1], tv[2], tv[3];
      ch.N << nv[0], nv[1], nv[1], nv[2];
      if (!d.empty()) {
        const auto dv = parse_list(d, 2, "--d");
        ch.d << dv[0], dv[1];
      }
      return ch;
    }
    if (kind == "amplification") return amplification(gain, nth);
    if (kind == "phase_conjugation") return phase_conjugation(gain, nth);
    if (kind == "loss") return loss(eta, nth);
    if (kind == "random_displacement") return random_displacement(sigma2);
    throw InvalidArgument("no channel given: use --channel, --T/--N or --kind");
  }
};

struct SweepArgs {
  std::string spec_file;
  std::vector<std::string> axes;
  std::vector<std::string> fixed;
  std::string quantities;
  std::optional<int> workers;
  std::string out;
};

SweepSpec resolve_sweep(SweepArgs& a) {
  SweepSpec spec;
  if (!a.spec_file.empty()) {
    std::istringstream in(read_all(a.spec_file));
    std::vector<std::string> file_axes;
    for (const auto& [key, value] : read_key_values(in)) {
      if (key == "axis") {
        file_axes.push_back(value);
      } else if (key == "fixed") {
        spec.fixed.insert(parse_fixed(value));
      } else if (key == "quantities") {
        if (a.quantities.empty()) a.quantities = value;
      } else if (key == "workers") {
        if (!a.workers) a.workers = std::stoi(value);
      } else if (key == "out") {
        if (a.out.empty()) a.out = value;
      } else {
        throw InvalidArgument("spec file: unknown key '" + key + "'");
      }
    }
    if (a.axes.empty()) a.axes = file_axes;
  }
  for (const auto& text : a.axes) spec.axes.push_back(parse_axis(text));
  for (const auto& text : a.fixed) {
    const auto [name, value] = parse_fixed(text);
    spec.fixed[name] = value;
  }
  spec.quantities = parse_quantities(a.quantities.empty() ? "qlb"
                                                          : a.quantities);
  spec.validate();
  return spec;
}

void emit_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                const std::string& path, bool json, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty() && path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + path + "'");
    sink = &file;
  }
  if (json) {
    write_json_lines(*sink, spec, rows);
  } else {
    write_csv(*sink, spec, rows);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"One-mode bosonic Gaussian channel analysis", "gcap"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  double tol = kPhysicalityTol;
  app.add_flag("--json", json, "One JSON object per output record");
  app.add_option("--tol", tol, "Eigenvalue tolerance for CPTP checks")
      ->check(CLI::PositiveNumber);

  ChannelInput classify_in;
  auto* classify_cmd =
      app.add_subcommand("classify", "Canonical invariants of a channel");
  classify_in.add_to(classify_cmd);

  ChannelInput qlb_in;
  auto* qlb_cmd =
      app.add_subcommand("qlb", "Quantum capacity lower bound of a channel");
  qlb_in.add_to(qlb_cmd);

  ActivationParams eac_p;
  auto* eac_cmd =
      app.add_subcommand("eac", "Entanglement-activated channel b -> alpha_out");
  eac_cmd->add_option("--G", eac_p.G, "Amplifier gain (> 1)")->required();
  eac_cmd->add_option("--Gp", eac_p.G_p, "Entangling squeezer gain")
      ->required();
  eac_cmd->add_option("--Gpp", eac_p.G_pp, "Anti-squeezer gain")->required();
  bool eac_af = false;
  eac_cmd->add_flag("--af", eac_af, "Report the b -> a_f channel instead");

  double tr_cg = 0.0, tr_gpp = 1.0;
  std::optional<double> tr_gp;
  EOParams eo;
  auto* tr_cmd = app.add_subcommand(
      "transducer", "Activated electro-optic transduction channel");
  auto* cg_opt = tr_cmd->add_option("--Cg", tr_cg, "Cooperativity in (0, 1)");
  auto* g_opt = tr_cmd->add_option("--g", eo.coupling_g, "Coupling (rad/s)");
  auto* ko_opt =
      tr_cmd->add_option("--kappa-o", eo.kappa_o, "Optical decay (rad/s)");
  auto* ke_opt =
      tr_cmd->add_option("--kappa-e", eo.kappa_e, "Microwave decay (rad/s)");
  g_opt->needs(ko_opt)->needs(ke_opt);
  ko_opt->needs(g_opt);
  ke_opt->needs(g_opt);
  cg_opt->excludes(g_opt)->excludes(ko_opt)->excludes(ke_opt);
  tr_cmd->add_option("--Gp", tr_gp, "Entangling gain (default: optimal)");
  tr_cmd->add_option("--Gpp", tr_gpp, "Anti-squeezer gain")->required();

  double opt_g = 0.0, opt_cg = 0.0, opt_gpp = 1.0;
  int opt_workers = 0;
  auto* opt_cmd = app.add_subcommand(
      "optimal-gprime", "G' minimizing the activated channel noise");
  auto* opt_g_opt = opt_cmd->add_option("--G", opt_g, "Amplifier gain");
  auto* opt_cg_opt = opt_cmd->add_option("--Cg", opt_cg, "Cooperativity");
  opt_g_opt->excludes(opt_cg_opt);
  opt_cmd->add_option("--Gpp", opt_gpp, "Anti-squeezer gain")->required();
  opt_cmd->add_option("--workers", opt_workers, "Scan threads (0 = default)");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid");
  sweep_cmd->add_option("--spec", sw.spec_file, "key = value spec file");
  sweep_cmd->add_option("--axis", sw.axes,
                        "name:start:stop:count[:linear|log] or name:list:...");
  sweep_cmd->add_option("--fixed", sw.fixed, "name=value");
  sweep_cmd->add_option("--quantities", sw.quantities,
                        "Comma list of tau,m,n_e,qlb,qlb_amp,class_label");
  sweep_cmd->add_option("--workers", sw.workers, "Threads (0 = default)");
  sweep_cmd->add_option("--out", sw.out, "Output path (default stdout)");

  std::string fig_name, fig_out;
  int fig_workers = 0;
  auto* fig_cmd = app.add_subcommand("fig", "Canonical figure sweep as CSV");
  fig_cmd->add_option("name", fig_name, "Figure")
      ->required()
      ->check(CLI::IsMember(figure_names()));
  fig_cmd->add_option("--out", fig_out, "Output path (default stdout)");
  fig_cmd->add_option("--workers", fig_workers, "Threads (0 = default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (*classify_cmd) {
      Record rec;
      append_invariants(rec, classify(classify_in.build(), tol));
      print_record(out, rec, json);
    } else if (*qlb_cmd) {
      const auto inv = classify(qlb_in.build(), tol);
      const double q = q_lower_bound(inv);
      Record rec;
      rec.emplace_back("tau", inv.tau);
      rec.emplace_back("class_label", std::string(to_string(inv.class_label)));
      rec.emplace_back("qlb", q);
      rec.emplace_back("status",
                       std::string(std::isinf(q) ? "infinite" : "ok"));
      print_record(out, rec, json);
    } else if (*eac_cmd) {
      const auto ch = eac_af ? rejected_af_channel(eac_p) : eac_channel(eac_p);
      const auto inv = classify(ch, tol);
      Record rec;
      rec.emplace_back("G", eac_p.G);
      rec.emplace_back("Gp", eac_p.G_p);
      rec.emplace_back("Gpp", eac_p.G_pp);
      append_channel(rec, ch);
      append_invariants(rec, inv);
      rec.emplace_back("qlb", q_lower_bound(inv));
      print_record(out, rec, json);
    } else if (*tr_cmd) {
      if (!*cg_opt && !*g_opt) {
        throw InvalidArgument("transducer: give --Cg or --g/--kappa-o/--kappa-e");
      }
      const double c_g = *cg_opt ? tr_cg : cooperativity(eo);
      const double gain = gain_from_cooperativity(c_g);
      const double gp = tr_gp ? *tr_gp : optimal_gprime(gain, tr_gpp).g_prime;
      const auto inv = classify(eac_channel({gain, gp, tr_gpp}), tol);
      Record rec;
      rec.emplace_back("Cg", c_g);
      rec.emplace_back("G", gain);
      rec.emplace_back("Gp", gp);
      rec.emplace_back("Gpp", tr_gpp);
      rec.emplace_back("tau", inv.tau);
      rec.emplace_back("n_e", inv.n_e.value_or(std::nan("")));
      rec.emplace_back("qlb", transduction_qlb(c_g, gp, tr_gpp));
      print_record(out, rec, json);
    } else if (*opt_cmd) {
      if (!*opt_g_opt && !*opt_cg_opt) {
        throw InvalidArgument("optimal-gprime: give --G or --Cg");
      }
      const double gain =
          *opt_cg_opt ? gain_from_cooperativity(opt_cg) : opt_g;
      const auto best = optimal_gprime(gain, opt_gpp, opt_workers);
      Record rec;
      rec.emplace_back("G", gain);
      rec.emplace_back("Gpp", opt_gpp);
      rec.emplace_back("Gp_opt", best.g_prime);
      rec.emplace_back("n_e_min", best.n_e_min);
      rec.emplace_back("qlb", q_lower_bound(
                                  eac_channel({gain, best.g_prime, opt_gpp}),
                                  tol));
      print_record(out, rec, json);
    } else if (*sweep_cmd) {
      const auto spec = resolve_sweep(sw);
      const auto rows = run_sweep(spec, sw.workers.value_or(0), tol);
      emit_sweep(spec, rows, sw.out, json, out);
    } else if (*fig_cmd) {
      const auto spec = figure_spec(fig_name);
      const auto rows = run_sweep(spec, fig_workers, tol);
      emit_sweep(spec, rows, fig_out, json, out);
    }
  } catch (const NonCptpError& e) {
    err << "gcap: " << e.what() << '\n';
    return kExitNonCptp;
  } catch (const InvalidArgument& e) {
    err << "gcap: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    err << "gcap: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace gcap
