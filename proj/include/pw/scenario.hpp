#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pw/types.hpp"

namespace pw {

/// What a scenario produces: a 2x2 Wigner spectrum surface or detection-probability curves.
enum class ScenarioOutput { spectrum, detection };

/// One figure-equivalent run.
///
/// `system` is one of input, cavity, dpa, direct, feedback. Parameters use the
/// keys kappa, omega0, epsilon, omega2, alpha_re, alpha_im, reflectivity, phase;
/// `gamma` is the damping of the exponential single-photon input.
struct Scenario {
  std::string name;
  std::string description;
  std::string system;
  ScenarioOutput output = ScenarioOutput::spectrum;
  std::map<std::string, double> params;
  // detection scenarios: one curve per value of `sweep_param`
  std::string sweep_param;
  std::vector<double> sweep_values;
  UniformGrid t_grid = UniformGrid::linspace(0.0, 4.0, 201);
  UniformGrid omega_grid = UniformGrid::linspace(-25.0, 25.0, 201);
};

/// One preset per figure regime: fig2 ... fig11, fig14 ... fig19.
const std::vector<Scenario>& scenario_presets();
std::optional<Scenario> find_preset(const std::string& name);

/// Parses a scenario document, e.g.
/// {"system": "cavity", "kappa": 3, "omega0": 0,
///  "input": {"kind": "fock1", "shape": {"type": "exp", "rate": 2}}}.
/// Networks use {"network": "direct" | "feedback", ...}. Throws DomainError.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);

/// `key=value` override; grid keys are t_start, t_stop, t_count, omega_start, omega_stop, omega_count.
void apply_override(Scenario& s, const std::string& assignment);

/// Resolves a preset name or a path to a JSON document.
Scenario load_scenario(const std::string& name_or_path);

struct RunSummary {
  std::vector<std::string> files;
  // closed form vs independent oracle, and other scalar diagnostics
  std::map<std::string, double> metrics;
};

/// Writes CSV data, metadata.json and a gnuplot script into `out_dir`.
/// Throws DomainError / StabilityError on precondition violations.
RunSummary run_scenario(const Scenario& s, const std::filesystem::path& out_dir);

}  // namespace pw
