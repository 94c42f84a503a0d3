#include "pw/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "detail/json_io.hpp"
#include "detail/numerics.hpp"
#include "pw/engines.hpp"
#include "pw/errors.hpp"
#include "pw/networks.hpp"
#include "pw/oracles.hpp"
#include "pw/states.hpp"
#include "pw/verify.hpp"

namespace pw {

namespace {

using detail::Json;

Scenario make(std::string name, std::string description, std::string system, std::map<std::string, double> params) {
  Scenario s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.system = std::move(system);
  s.params = std::move(params);
  s.params.emplace("gamma", 2.0);
  return s;
}

Scenario detection(std::string name, std::string description, std::string system,
                   std::map<std::string, double> params, std::string sweep, std::vector<double> values) {
  Scenario s = make(std::move(name), std::move(description), std::move(system), std::move(params));
  s.output = ScenarioOutput::detection;
  s.sweep_param = std::move(sweep);
  s.sweep_values = std::move(values);
  s.t_grid = UniformGrid::linspace(0.0, 10.0, 1001);
  return s;
}

std::vector<Scenario> build_presets() {
  std::vector<Scenario> p;
  p.push_back(make("fig2", "input Wigner spectrum, gamma=2", "input", {}));
  p.push_back(make("fig3", "cavity output spectrum, kappa=0, omega0=0", "cavity", {{"kappa", 0.0}, {"omega0", 0.0}}));
  p.push_back(make("fig4", "cavity output spectrum, kappa=3, omega0=0", "cavity", {{"kappa", 3.0}, {"omega0", 0.0}}));
  p.push_back(make("fig5", "cavity output spectrum, kappa=100, omega0=0", "cavity", {{"kappa", 100.0}, {"omega0", 0.0}}));
  p.push_back(make("fig6", "cavity output spectrum, kappa=4, omega0=0", "cavity", {{"kappa", 4.0}, {"omega0", 0.0}}));
  p.push_back(make("fig7", "cavity output spectrum, kappa=4, omega0=10", "cavity", {{"kappa", 4.0}, {"omega0", 10.0}}));
  p.push_back(make("fig8", "cavity output spectrum, kappa=4, omega0=50", "cavity", {{"kappa", 4.0}, {"omega0", 50.0}}));
  p.push_back(make("fig9", "DPA output spectrum, kappa=1.5, eps=1", "dpa", {{"kappa", 1.5}, {"epsilon", 1.0}}));
  p.push_back(make("fig10", "DPA output spectrum, kappa=4, eps=1", "dpa", {{"kappa", 4.0}, {"epsilon", 1.0}}));
  p.push_back(make("fig11", "DPA output spectrum, kappa=100, eps=1", "dpa", {{"kappa", 100.0}, {"epsilon", 1.0}}));
  const std::map<std::string, double> net{{"kappa", 1.0}, {"omega0", 1.0}};
  auto with = [](std::map<std::string, double> base, std::map<std::string, double> extra) {
    base.insert(extra.begin(), extra.end());
    return base;
  };
  p.push_back(detection("fig14", "detection probability, direct coupling, varying alpha", "direct",
                        with(net, {{"omega2", 1.0}, {"alpha_re", 1.0}, {"alpha_im", 0.0}}), "alpha_re",
                        {0.5, 1.0, 2.0, 4.0}));
  p.push_back(detection("fig15", "detection probability, direct coupling, varying omega2", "direct",
                        with(net, {{"omega2", 1.0}, {"alpha_re", 1.0}, {"alpha_im", 0.0}}), "omega2",
                        {0.0, 1.0, 2.0, 5.0}));
  p.push_back(detection("fig16", "detection probability, beamsplitter feedback, varying reflectivity", "feedback",
                        with(net, {{"reflectivity", 0.5}, {"phase", 0.0}}), "reflectivity", {0.01, 0.5, 0.99}));
  for (const auto& [name, r] : {std::pair{"fig17", 0.01}, {"fig18", 0.5}, {"fig19", 0.99}}) {
    char desc[96];
    std::snprintf(desc, sizeof desc, "feedback network output spectrum, kappa=4, reflectivity=%g", r);
    p.push_back(make(name, desc, "feedback", {{"kappa", 4.0}, {"omega0", 0.0}, {"reflectivity", r}, {"phase", 0.0}}));
  }
  return p;
}

double param(const Scenario& s, const std::string& key) {
  const auto it = s.params.find(key);
  if (it == s.params.end()) throw DomainError("scenario '" + s.name + "' is missing parameter '" + key + "'");
  return it->second;
}

double param_or(const Scenario& s, const std::string& key, double fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : it->second;
}

UniformGrid grid_from_json(const Json& j, const UniformGrid& fallback) {
  return UniformGrid::linspace(j.value("start", fallback.start), j.value("stop", fallback.stop),
                               j.value("count", fallback.count));
}

Json grid_to_json(const UniformGrid& g) { return Json{{"start", g.start}, {"stop", g.stop}, {"count", g.count}}; }

// Scenarios drive the closed forms, which take the exponential single-photon input.
double input_rate(const Json& input) {
  const AnyState state = state_from_json(input.dump());
  const auto* fock = std::get_if<FockState1>(&state);
  if (fock == nullptr || !fock->shape().is_analytic() || fock->shape().terms().size() != 1) {
    throw DomainError("scenario input must be a fock1 state with an exponential shape");
  }
  const ExpTerm& t = fock->shape().terms().front();
  const double rate = t.rate.real();
  if (t.power != 0 || t.rate.imag() != 0.0 || std::abs(t.amplitude - std::sqrt(2.0 * rate)) > 1e-12) {
    throw DomainError("scenario input must be a fock1 state with shape sqrt(2 gamma) exp(-gamma t)");
  }
  return rate;
}

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

class Writer {
 public:
  Writer(const std::filesystem::path& dir, RunSummary& summary) : dir_(dir), summary_(summary) {
    std::filesystem::create_directories(dir_);
  }

  template <class Fn>
  void file(const std::string& name, Fn&& body) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw DomainError("cannot write " + (dir_ / name).string());
    body(out);
    summary_.files.push_back(name);
  }

 private:
  std::filesystem::path dir_;
  RunSummary& summary_;
};

void spectrum_script(std::ostream& out, const Scenario& s, bool all_entries) {
  out << "# " << s.name << ": " << s.description << "\n"
      << "set datafile separator ','\n"
      << "set terminal pngcairo size 1400," << (all_entries ? 1000 : 560) << "\n"
      << "set output '" << s.name << ".png'\n"
      << "set xlabel 't'\nset ylabel 'omega'\nset view 60,30\n"
      << "set multiplot layout " << (all_entries ? "2,2" : "1,2") << " title '" << s.name << "'\n";
  const std::vector<int> entries = all_entries ? std::vector<int>{11, 12, 21, 22} : std::vector<int>{11, 22};
  for (int e : entries) {
    out << "set title 'Re S_{" << e << "}'\n"
        << "splot 'spectrum.csv' skip 1 using 1:2:($3==" << e
        << " ? $4 : 1/0) with points pointtype 7 pointsize 0.2 palette notitle\n";
  }
  out << "unset multiplot\n";
}

void write_grid(Writer& w, const std::string& stem, const WignerSpectrumGrid& g) {
  w.file(stem + ".csv", [&](std::ostream& o) { write_spectrum_csv(o, g); });
}

double relative_deviation(const WignerSpectrumGrid& a, const WignerSpectrumGrid& b) {
  return max_abs_deviation(a, b) / peak_magnitude(b);
}

void run_spectrum(const Scenario& s, Writer& w, RunSummary& summary) {
  const double gamma = param(s, "gamma");
  const TemporalPulse nu = make_exp_pulse(gamma);
  const auto input = grid_eval(wigner_closed_form(single_photon_covariance(nu)), s.t_grid, s.omega_grid);
  auto& m = summary.metrics;
  bool all_entries = false;

  if (s.system == "input") {
    write_grid(w, "spectrum", input);
    w.file("spectrum.json", [&](std::ostream& o) { write_spectrum_json(o, input); });
    w.file("pulse.csv", [&](std::ostream& o) { write_pulse_csv(o, nu.sample(s.t_grid)); });
    m["spectrum_closed_vs_numeric_rel"] = input_spectrum_deviation(gamma, s.t_grid, s.omega_grid);
  } else if (s.system == "cavity") {
    const CavityModel cav{param(s, "kappa"), param(s, "omega0")};
    cav.validate();
    const auto out = grid_eval(cavity_output_wigner(cav, gamma), s.t_grid, s.omega_grid);
    const TemporalPulse eta = cavity_output_pulse(cav, nu);
    write_grid(w, "spectrum", out);
    w.file("spectrum.json", [&](std::ostream& o) { write_spectrum_json(o, out); });
    write_grid(w, "input_spectrum", input);
    w.file("pulse.csv", [&](std::ostream& o) { write_pulse_csv(o, eta.sample(s.t_grid)); });
    m["spectrum_closed_vs_numeric_rel"] = cavity_spectrum_deviation(cav, gamma, s.t_grid, s.omega_grid);
    double pulse_dev = 0.0;
    const TemporalPulse oracle = cavity_pulse_oracle(cav, nu, s.t_grid);
    for (std::size_t i = 0; i < s.t_grid.size(); ++i) {
      pulse_dev = std::max(pulse_dev, std::abs(eta(s.t_grid[i]) - oracle(s.t_grid[i])));
    }
    m["pulse_closed_vs_oracle_sup"] = pulse_dev;
    m["output_vs_input_rel"] = relative_deviation(out, input);
    m["pulse_norm_error"] = std::abs(norm(eta) - 1.0);
  } else if (s.system == "dpa") {
    const DpaModel dpa{param(s, "kappa"), param(s, "epsilon")};
    require_stable(dpa);
    all_entries = true;
    const auto out = grid_eval(dpa_output_wigner(dpa, gamma), s.t_grid, s.omega_grid);
    const PulsePair pulses = dpa_output_pulses(dpa, gamma);
    write_grid(w, "spectrum", out);
    w.file("spectrum.json", [&](std::ostream& o) { write_spectrum_json(o, out); });
    write_grid(w, "input_spectrum", input);
    w.file("pulse_minus.csv", [&](std::ostream& o) { write_pulse_csv(o, pulses.minus.sample(s.t_grid)); });
    w.file("pulse_plus.csv", [&](std::ostream& o) { write_pulse_csv(o, pulses.plus.sample(s.t_grid)); });
    m["spectrum_closed_vs_numeric_rel"] = dpa_spectrum_deviation(dpa, gamma, s.t_grid, s.omega_grid);
    m["pulses_closed_vs_oracle_sup"] = dpa_pulse_deviation(dpa, gamma, s.t_grid);
    m["chi_closed_vs_quadrature_max"] = dpa_chi_deviation(dpa);
    m["output_vs_input_rel"] = relative_deviation(out, input);
    m["offdiagonal_peak"] = peak_magnitude(out, std::pair{0, 1});
  } else if (s.system == "feedback") {
    const CavityModel cav{param(s, "kappa"), param(s, "omega0")};
    cav.validate();
    const BeamSplitter bs(param(s, "reflectivity"), param_or(s, "phase", 0.0));
    const Rational g3 = feedback_transfer(cav, bs);
    const auto out = grid_eval(network_output_wigner(g3, to_frequency(nu), s.t_grid), s.t_grid, s.omega_grid);
    const TemporalPulse eta = network_output_pulse(g3, to_frequency(nu), s.t_grid);
    write_grid(w, "spectrum", out);
    w.file("spectrum.json", [&](std::ostream& o) { write_spectrum_json(o, out); });
    write_grid(w, "input_spectrum", input);
    w.file("pulse.csv", [&](std::ostream& o) { write_pulse_csv(o, eta.sample(s.t_grid)); });
    // The loop is a cavity of decay kappa_eff with output sign -1.
    const CavityModel reduced{effective_decay_rate(cav.kappa, bs), cav.omega0};
    const auto oracle = grid_eval(cavity_output_wigner(reduced, gamma), s.t_grid, s.omega_grid);
    m["spectrum_closed_vs_reduced_cavity_rel"] = relative_deviation(out, oracle);
    const TemporalPulse eta_reduced = cavity_output_pulse(reduced, nu);
    double pulse_dev = 0.0;
    for (std::size_t i = 0; i < s.t_grid.size(); ++i) {
      pulse_dev = std::max(pulse_dev, std::abs(eta(s.t_grid[i]) + eta_reduced(s.t_grid[i])));
    }
    m["pulse_numeric_vs_reduced_cavity_sup"] = pulse_dev;
    m["output_vs_input_rel"] = relative_deviation(out, input);
    m["kappa_eff"] = reduced.kappa;
  } else {
    throw DomainError("system '" + s.system + "' has no spectrum output");
  }
  w.file(s.name + ".gp", [&](std::ostream& o) { spectrum_script(o, s, all_entries); });
}

Rational network_multiplier(const Scenario& s, const std::string& key, double value) {
  auto get = [&](const std::string& k) { return k == key ? value : param(s, k); };
  const CavityModel cav{get("kappa"), get("omega0")};
  cav.validate();
  if (s.system == "direct") {
    return direct_coupling_transfer({cav, get("omega2"), {get("alpha_re"), param_or(s, "alpha_im", 0.0)}});
  }
  if (s.system == "feedback") return feedback_transfer(cav, BeamSplitter(get("reflectivity"), param_or(s, "phase", 0.0)));
  throw DomainError("system '" + s.system + "' has no detection output");
}

void run_detection(const Scenario& s, Writer& w, RunSummary& summary) {
  if (s.sweep_values.empty()) throw DomainError("detection scenario '" + s.name + "' needs sweep values");
  const double gamma = param(s, "gamma");
  const SpectralPulse xi = to_frequency(make_exp_pulse(gamma));
  const CavityModel cav{param(s, "kappa"), param(s, "omega0")};
  const UniformGrid& g = s.t_grid;

  std::vector<std::string> names{"xi", "eta1"};
  std::vector<std::vector<double>> curves;
  curves.push_back(detection_probability(make_exp_pulse(gamma), g));
  const TemporalPulse eta1 = network_output_pulse(cavity_transfer(cav), xi, g);
  curves.push_back(detection_probability(eta1, g));

  auto& m = summary.metrics;
  double eta1_dev = 0.0;
  const TemporalPulse eta1_closed = cavity_output_pulse(cav, make_exp_pulse(gamma));
  for (std::size_t i = 0; i < g.size(); ++i) eta1_dev = std::max(eta1_dev, std::abs(eta1(g[i]) - eta1_closed(g[i])));
  m["eta1_numeric_vs_closed_sup"] = eta1_dev;
  const SpectralPulse eta1_spectrum = xi.multiplied(cavity_transfer(cav));
  const TemporalPulse eta1_fine = to_time(eta1_spectrum, default_time_grid(eta1_spectrum, 200001));
  m["norm_error_eta1"] = std::abs(norm(eta1_fine) * norm(eta1_fine) - 1.0);

  const std::string label = s.sweep_param == "alpha_re" ? "alpha" : s.sweep_param;
  for (double v : s.sweep_values) {
    const Rational multiplier = network_multiplier(s, s.sweep_param, v);
    const TemporalPulse eta = network_output_pulse(multiplier, xi, g);
    names.push_back(label + "=" + fmt_g(v));
    curves.push_back(detection_probability(eta, g));
    const SpectralPulse product = xi.multiplied(multiplier);
    const TemporalPulse fine = to_time(product, default_time_grid(product, 200001));
    m["norm_error_" + names.back()] = std::abs(norm(fine) * norm(fine) - 1.0);
    double l1 = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) l1 += std::abs(curves.back()[i] - curves[1][i]) * g.step();
    m["l1_vs_eta1_" + names.back()] = l1;
  }

  w.file("detection.csv", [&](std::ostream& o) {
    o << 't';
    for (const auto& n : names) o << ',' << n;
    o << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
      o << detail::format_e12(g[i]);
      for (const auto& c : curves) o << ',' << detail::format_e12(c[i]);
      o << '\n';
    }
  });
  w.file(s.name + ".gp", [&](std::ostream& o) {
    o << "# " << s.name << ": " << s.description << "\n"
      << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set output '" << s.name << ".png'\n"
      << "set xlabel 't'\nset ylabel 'detection probability'\n"
      << "set key autotitle columnhead\n"
      << "plot for [c=2:" << names.size() + 1 << "] 'detection.csv' using 1:c with lines lw 2\n";
  });
}

}  // namespace

const std::vector<Scenario>& scenario_presets() {
  static const std::vector<Scenario> presets = build_presets();
  return presets;
}

std::optional<Scenario> find_preset(const std::string& name) {
  for (const Scenario& s : scenario_presets())
    if (s.name == name) return s;
  return std::nullopt;
}

Scenario scenario_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    if (!j.is_object()) throw DomainError("scenario document must be a JSON object");
    Scenario s;
    s.name = j.value("name", std::string("custom"));
    s.description = j.value("description", std::string());
    if (j.contains("network")) {
      s.system = j.at("network").get<std::string>();
      s.output = ScenarioOutput::detection;
      s.t_grid = UniformGrid::linspace(0.0, 10.0, 1001);
    } else {
      s.system = j.value("system", std::string());
    }
    if (s.system != "input" && s.system != "cavity" && s.system != "dpa" && s.system != "direct" &&
        s.system != "feedback") {
      throw DomainError("unknown system '" + s.system + "' (expected input|cavity|dpa|direct|feedback)");
    }
    if (j.contains("output")) {
      const auto out = j.at("output").get<std::string>();
      if (out == "spectrum") s.output = ScenarioOutput::spectrum;
      else if (out == "detection") s.output = ScenarioOutput::detection;
      else throw DomainError("unknown output '" + out + "' (expected spectrum|detection)");
    }
    for (const char* key : {"kappa", "omega0", "epsilon", "omega2", "reflectivity", "phase", "gamma"}) {
      if (j.contains(key)) s.params[key] = j.at(key).get<double>();
    }
    if (j.contains("alpha")) {
      const Complex a = detail::complex_from_json(j.at("alpha"));
      s.params["alpha_re"] = a.real();
      s.params["alpha_im"] = a.imag();
    }
    if (j.contains("input")) s.params["gamma"] = input_rate(j.at("input"));
    s.params.emplace("gamma", 2.0);
    if (j.contains("sweep")) {
      const Json& sw = j.at("sweep");
      s.sweep_param = sw.at("param").get<std::string>();
      if (s.sweep_param == "alpha") s.sweep_param = "alpha_re";
      s.sweep_values = sw.at("values").get<std::vector<double>>();
    }
    if (j.contains("grid")) {
      const Json& g = j.at("grid");
      if (g.contains("t")) s.t_grid = grid_from_json(g.at("t"), s.t_grid);
      if (g.contains("omega")) s.omega_grid = grid_from_json(g.at("omega"), s.omega_grid);
    }
    return s;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed scenario document: ") + e.what());
  }
}

std::string scenario_to_json(const Scenario& s) {
  Json j{{"name", s.name}, {"description", s.description}, {"system", s.system},
         {"output", s.output == ScenarioOutput::spectrum ? "spectrum" : "detection"}};
  for (const auto& [k, v] : s.params) {
    if (k != "alpha_re" && k != "alpha_im" && k != "gamma") j[k] = v;
  }
  if (s.params.count("alpha_re") != 0) {
    j["alpha"] = detail::complex_to_json({s.params.at("alpha_re"), param_or(s, "alpha_im", 0.0)});
  }
  j["input"] = {{"kind", "fock1"}, {"shape", {{"type", "exp"}, {"rate", param_or(s, "gamma", 2.0)}}}};
  if (!s.sweep_param.empty()) {
    j["sweep"] = {{"param", s.sweep_param == "alpha_re" ? "alpha" : s.sweep_param}, {"values", s.sweep_values}};
  }
  j["grid"] = {{"t", grid_to_json(s.t_grid)}, {"omega", grid_to_json(s.omega_grid)}};
  return j.dump(2);
}

void apply_override(Scenario& s, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw DomainError("override must look like key=value, got '" + assignment + "'");
  std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw DomainError("override value for '" + key + "' is not a number");
  auto count = [&] {
    if (value < 1.0 || value != std::floor(value)) throw DomainError("'" + key + "' must be a positive integer");
    return static_cast<std::size_t>(value);
  };
  if (key == "t_start") s.t_grid = UniformGrid::linspace(value, s.t_grid.stop, s.t_grid.count);
  else if (key == "t_stop") s.t_grid = UniformGrid::linspace(s.t_grid.start, value, s.t_grid.count);
  else if (key == "t_count") s.t_grid = UniformGrid::linspace(s.t_grid.start, s.t_grid.stop, count());
  else if (key == "omega_start") s.omega_grid = UniformGrid::linspace(value, s.omega_grid.stop, s.omega_grid.count);
  else if (key == "omega_stop") s.omega_grid = UniformGrid::linspace(s.omega_grid.start, value, s.omega_grid.count);
  else if (key == "omega_count") s.omega_grid = UniformGrid::linspace(s.omega_grid.start, s.omega_grid.stop, count());
  else {
    if (key == "alpha") key = "alpha_re";
    static const char* known[] = {"kappa", "omega0", "epsilon", "omega2", "alpha_re", "alpha_im",
                                  "reflectivity", "phase", "gamma"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw DomainError("unknown parameter '" + key + "'");
    }
    s.params[key] = value;
  }
}

Scenario load_scenario(const std::string& name_or_path) {
  if (auto preset = find_preset(name_or_path)) return *preset;
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) throw DomainError("'" + name_or_path + "' is neither a preset nor a readable scenario file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Scenario s = scenario_from_json(buffer.str());
  if (s.name == "custom") s.name = std::filesystem::path(name_or_path).stem().string();
  return s;
}

RunSummary run_scenario(const Scenario& s, const std::filesystem::path& out_dir) {
  if (!(param(s, "gamma") > 0.0)) throw DomainError("input damping gamma must be > 0");
  if (s.system == "dpa") require_stable({param(s, "kappa"), param(s, "epsilon")});
  RunSummary summary;
  Writer w(out_dir, summary);
  if (s.output == ScenarioOutput::spectrum) run_spectrum(s, w, summary);
  else run_detection(s, w, summary);

  Json meta;
  meta["scenario"] = Json::parse(scenario_to_json(s));
  meta["files"] = summary.files;
  Json metrics = Json::object();
  for (const auto& [k, v] : summary.metrics) metrics[k] = v;
  meta["metrics"] = metrics;
  std::ofstream(out_dir / "metadata.json", std::ios::binary) << meta.dump(2) << '\n';
  summary.files.push_back("metadata.json");
  return summary;
}

}  // namespace pw
