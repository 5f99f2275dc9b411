// Command-line front end; talks to the library exclusively through the
// shared-library C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fieldlink/fieldlink.h"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  int modes = -1;
  double box_length = -1.0;
  int quad_steps = -1;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_config) {
  auto* config = cmd->add_option("--config", opt.config_path, "configuration file");
  if (needs_config) config->required();
  cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
  cmd->add_option("--modes", opt.modes, "override field.mode_cutoff");
  cmd->add_option("--box-length", opt.box_length, "override field.box_length");
  cmd->add_option("--quad-steps", opt.quad_steps, "override quadrature step count");
  cmd->add_option("--seed", opt.seed, "random seed for verify");
}

int fail(fieldlink_status status) {
  std::cerr << "error (" << fieldlink_status_name(status) << "): " << fieldlink_last_error()
            << "\n";
  return static_cast<int>(status);
}

int emit(const CommonOptions& opt, const char* text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opt.out_path << "'\n";
    return 1;
  }
  out << text;
  return 0;
}

struct ConfigHandle {
  fieldlink_config* ptr = nullptr;
  ~ConfigHandle() { fieldlink_config_free(ptr); }
};

fieldlink_status open_config(const CommonOptions& opt, ConfigHandle& handle) {
  fieldlink_status status = fieldlink_config_load(opt.config_path.c_str(), &handle.ptr);
  if (status != FIELDLINK_OK) return status;
  const auto override_key = [&](const char* key, const std::string& value) {
    if (status == FIELDLINK_OK) status = fieldlink_config_override(handle.ptr, key, value.c_str());
  };
  if (opt.modes >= 0) override_key("field.mode_cutoff", std::to_string(opt.modes));
  if (opt.box_length > 0.0) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", opt.box_length);
    override_key("field.box_length", buf);
  }
  if (opt.quad_steps > 0) override_key("quad_steps", std::to_string(opt.quad_steps));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"field-mediated entanglement simulator"};
  app.require_subcommand(1);

  CommonOptions run_opt, sweep_opt, verify_opt, qgem_opt;
  std::string sweep_param;
  std::vector<double> sweep_values;

  CLI::App* run_cmd = app.add_subcommand("run", "evaluate one scenario and print a report");
  add_common(run_cmd, run_opt, true);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter, emit CSV");
  add_common(sweep_cmd, sweep_opt, true);
  sweep_cmd->add_option("--param", sweep_param, "dotted parameter key, e.g. scenario.coupling_a")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "comma-separated values")
      ->required()
      ->delimiter(',');

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  add_common(verify_cmd, verify_opt, false);

  CLI::App* qgem_cmd = app.add_subcommand("qgem", "Newtonian-phase report");
  add_common(qgem_cmd, qgem_opt, true);

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) {
    ConfigHandle cfg;
    if (fieldlink_status s = open_config(run_opt, cfg); s != FIELDLINK_OK) return fail(s);
    char* report = nullptr;
    if (fieldlink_status s = fieldlink_run(cfg.ptr, &report); s != FIELDLINK_OK) return fail(s);
    const int rc = emit(run_opt, report);
    fieldlink_string_free(report);
    return rc;
  }

  if (sweep_cmd->parsed()) {
    ConfigHandle cfg;
    if (fieldlink_status s = open_config(sweep_opt, cfg); s != FIELDLINK_OK) return fail(s);
    char* csv = nullptr;
    if (fieldlink_status s = fieldlink_sweep(cfg.ptr, sweep_param.c_str(), sweep_values.data(),
                                             sweep_values.size(), &csv);
        s != FIELDLINK_OK)
      return fail(s);
    const int rc = emit(sweep_opt, csv);
    fieldlink_string_free(csv);
    return rc;
  }

  if (verify_cmd->parsed()) {
    char* report = nullptr;
    int pass = 0;
    if (fieldlink_status s = fieldlink_verify(verify_opt.seed, &report, &pass);
        s != FIELDLINK_OK)
      return fail(s);
    const int rc = emit(verify_opt, report);
    fieldlink_string_free(report);
    return rc != 0 ? rc : (pass ? 0 : 1);
  }

  if (qgem_cmd->parsed()) {
    ConfigHandle cfg;
    if (fieldlink_status s = open_config(qgem_opt, cfg); s != FIELDLINK_OK) return fail(s);
    char* report = nullptr;
    if (fieldlink_status s = fieldlink_qgem(cfg.ptr, &report); s != FIELDLINK_OK) return fail(s);
    const int rc = emit(qgem_opt, report);
    fieldlink_string_free(report);
    return rc;
  }

  return 0;
}
