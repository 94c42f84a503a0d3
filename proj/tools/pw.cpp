#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pw/errors.hpp"
#include "pw/scenario.hpp"
#include "pw/verify.hpp"

namespace {

// 0 ok, 1 failed checks or internal error, 2 invalid input or violated precondition
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

int run(const std::string& name, const std::string& out, const std::vector<std::string>& overrides) {
  pw::Scenario s = pw::load_scenario(name);
  for (const auto& o : overrides) pw::apply_override(s, o);
  const pw::RunSummary summary = pw::run_scenario(s, out);
  std::cout << "scenario " << s.name << " -> " << out << "\n";
  for (const auto& f : summary.files) std::cout << "  wrote " << f << "\n";
  char buf[128];
  for (const auto& [k, v] : summary.metrics) {
    std::snprintf(buf, sizeof buf, "  %-40s %.3e\n", k.c_str(), v);
    std::cout << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon Wigner spectra of linear quantum systems"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a scenario preset or JSON scenario file");
  std::string scenario, out_dir;
  std::vector<std::string> overrides;
  run_cmd->add_option("--scenario", scenario, "Preset name or path to a scenario JSON file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--set", overrides, "Parameter override key=value (repeatable)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle verification suite");
  std::string suite = "all", inject;
  verify_cmd->add_option("--suite", suite, "all|pulses|covariance|engines")
      ->check(CLI::IsMember({"all", "pulses", "covariance", "engines"}));
  verify_cmd->add_option("--inject", inject, "Flip the sign of one printed coefficient")->group("");

  auto* list_cmd = app.add_subcommand("list-scenarios", "List scenario presets");
  bool as_json = false;
  list_cmd->add_flag("--json", as_json, "Print the full preset documents");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(scenario, out_dir, overrides);
    if (*verify_cmd) {
      const auto flip = inject.empty() ? pw::PrintedCoefficient::none : pw::parse_coefficient(inject);
      const pw::VerifyReport report = pw::verify(pw::parse_suite(suite), flip);
      report.print(std::cout);
      return report.passed() ? 0 : kExitFailed;
    }
    if (*list_cmd) {
      if (as_json) {
        std::cout << "[\n";
        const auto& presets = pw::scenario_presets();
        for (std::size_t i = 0; i < presets.size(); ++i) {
          std::cout << pw::scenario_to_json(presets[i]) << (i + 1 < presets.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      } else {
        for (const auto& s : pw::scenario_presets()) std::cout << s.name << "\t" << s.description << "\n";
      }
      return 0;
    }
  } catch (const pw::StabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const pw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return 0;
}
