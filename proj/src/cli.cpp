#include "explorer/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "explorer/config.hpp"
#include "explorer/csv.hpp"
#include "explorer/fit.hpp"
#include "explorer/num_format.hpp"
#include "explorer/svg_plot.hpp"

namespace explorer {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::IoError, "failed while reading '" + path + "'");
  }
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorKind::IoError, "failed while writing '" + path + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    if (pos == std::string::npos) {
      items.push_back(text.substr(start));
      break;
    }
    items.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return items;
}

double parse_double_arg(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ValidationError,
                flag + ": '" + text + "' is not a number");
  }
}

// Replicate seeds are consecutive from the config seed, so two subcommands
// sharing a config share their random streams (common random numbers).
std::vector<std::uint64_t> derive_seeds(std::uint64_t base, int replicates) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(replicates));
  for (int i = 0; i < replicates; ++i) seeds[static_cast<std::size_t>(i)] = base + i;
  return seeds;
}

std::string sanitize_for_filename(std::string value) {
  for (char& c : value) {
    if (c == '+') c = 'p';
  }
  return value;
}

void cmd_run(const std::string& config_path, bool has_seed, std::uint64_t seed,
             const std::string& out_path, std::ostream& err) {
  SimConfig config = parse_config(read_file(config_path));
  if (has_seed) config.seed = seed;
  SimResult result = run_sim(config);
  write_file(out_path, write_csv(result.curve));
  err << "run: completed=" << (result.completed ? "true" : "false")
      << " ticks_used=" << result.ticks_used
      << " novel_total=" << auc(std::span<const std::int64_t>(result.curve.novel)) << "\n";
}

void cmd_sweep(const std::string& config_path, const std::string& param_name,
               const std::string& values_text, int replicates,
               const std::string& out_dir, std::ostream& err) {
  SimConfig config = parse_config(read_file(config_path));
  SweepParam param = parse_sweep_param(param_name);

  std::vector<double> values;
  for (const std::string& item : split_list(values_text)) {
    if (item.empty()) {
      throw Error(ErrorKind::EmptyValues, "--values contains an empty entry");
    }
    values.push_back(parse_double_arg(item, "--values"));
  }

  const std::vector<std::uint64_t> seeds = derive_seeds(config.seed, replicates);
  SweepResult result = sweep(config, param, values, seeds);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorKind::IoError, "cannot create directory '" + out_dir + "'");
  }

  std::string summary = "value,auc,peak_bin,t50\n";
  for (const SweepRow& row : result.rows) {
    const std::string value_text = format_double(row.value);
    const fs::path csv_path = fs::path(out_dir) / (std::string(sweep_param_name(param)) +
                                                   "_" + sanitize_for_filename(value_text) +
                                                   ".csv");
    write_file(csv_path.string(), write_csv(row.mean));
    summary += value_text;
    summary.push_back(',');
    summary += format_double(row.auc_novel);
    summary.push_back(',');
    summary += row.peak_bin >= 0 ? format_int(row.peak_bin) : "nan";
    summary.push_back(',');
    summary += row.t50 >= 0 ? format_int(row.t50) : "nan";
    summary.push_back('\n');
  }
  write_file((fs::path(out_dir) / "summary.csv").string(), summary);
  err << "sweep: " << result.rows.size() << " value(s), " << replicates
      << " replicate(s) each\n";
}

void cmd_fit(const std::string& config_path, const std::string& target_path,
             const std::string& free_text, int replicates, std::ostream& out) {
  SimConfig config = parse_config(read_file(config_path));
  RealCurve target = read_csv_real(read_file(target_path));
  if (!target.novel.empty() && target.bin_width != config.bin_width) {
    throw Error(ErrorKind::BinWidthMismatch,
                "target bin width " + std::to_string(target.bin_width) +
                    " != config bin_width " + std::to_string(config.bin_width));
  }

  FitSpec spec{config};
  spec.seeds = derive_seeds(config.seed, replicates);
  for (const std::string& name : split_list(free_text)) {
    if (name == "fear_initial") {
      spec.free.push_back(FitParam::FearInitial);
    } else if (name == "fear_decay") {
      spec.free.push_back(FitParam::FearDecay);
    } else {
      throw Error(ErrorKind::UnknownParam,
                  "--free: unknown parameter '" + name + "' (fear_initial, fear_decay)");
    }
  }
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.05);
  spec.grid_fear_decay = uniform_grid(0.0, 1.0, 0.05);

  FitResult result = fit_params(spec, std::span<const double>(target.novel));

  ordered_json doc;
  doc["best_params"] = ordered_json{{"fear_initial", result.fear_initial},
                                    {"fear_decay", result.fear_decay}};
  doc["best_loss"] = result.best_loss;
  doc["evaluations"] = result.evaluations;
  ordered_json trace = ordered_json::array();
  for (const FitPoint& point : result.trace) {
    trace.push_back(ordered_json{{"fear_initial", point.fear_initial},
                                 {"fear_decay", point.fear_decay},
                                 {"loss", point.loss}});
  }
  doc["trace"] = std::move(trace);
  out << doc.dump() << "\n";
}

void cmd_compare(const std::string& a_path, const std::string& b_path, std::ostream& out) {
  RealCurve a = read_csv_real(read_file(a_path));
  RealCurve b = read_csv_real(read_file(b_path));
  if (a.bin_width != b.bin_width) {
    throw Error(ErrorKind::BinWidthMismatch,
                "bin widths differ: " + std::to_string(a.bin_width) + " vs " +
                    std::to_string(b.bin_width));
  }
  ShiftStats stats = shift_stats(std::span<const double>(a.novel),
                                 std::span<const double>(b.novel));
  ordered_json doc;
  doc["delta_t50"] = stats.delta_t50;
  doc["delta_peak"] = stats.delta_peak;
  doc["auc_ratio"] = stats.auc_ratio;
  out << doc.dump() << "\n";
}

void cmd_plot(const std::string& in_text, const std::string& out_path, std::ostream& err) {
  std::vector<LabeledSeries> curves;
  for (const std::string& path : split_list(in_text)) {
    if (path.empty()) {
      throw Error(ErrorKind::NoData, "--in contains an empty path");
    }
    RealCurve curve = read_csv_real(read_file(path));
    curves.emplace_back(fs::path(path).stem().string(), std::move(curve.novel));
  }
  write_file(out_path, render_plot(curves));
  err << "plot: " << curves.size() << " series -> " << out_path << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid-arena exploration simulator: an agent's drive to explore "
               "competes with a decaying fear drive"};
  app.name("explorer");
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Simulate one run and write its curve as CSV");
  std::string run_config, run_out;
  std::uint64_t run_seed = 0;
  run_cmd->add_option("--config", run_config, "JSON config file")->required();
  auto* seed_opt = run_cmd->add_option("--seed", run_seed, "Override the config seed");
  run_cmd->add_option("--out", run_out, "Output CSV path")->required();

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Replicate-mean curves across one parameter's values");
  std::string sweep_config, sweep_param, sweep_values, sweep_out;
  int sweep_replicates = 8;
  sweep_cmd->add_option("--config", sweep_config, "JSON config file")->required();
  sweep_cmd->add_option("--param", sweep_param,
                        "fear_initial, fear_decay, w_explore or w_fear")->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep_cmd->add_option("--replicates", sweep_replicates, "Replicates per value");
  sweep_cmd->add_option("--out", sweep_out, "Output directory")->required();

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Recover fear parameters from a target curve");
  std::string fit_config, fit_target, fit_free;
  int fit_replicates = 16;
  fit_cmd->add_option("--config", fit_config, "JSON config file")->required();
  fit_cmd->add_option("--target", fit_target, "Target curve CSV")->required();
  fit_cmd->add_option("--free", fit_free,
                      "Comma-separated free parameters (fear_initial, fear_decay)")
      ->required();
  fit_cmd->add_option("--replicates", fit_replicates, "Replicates per evaluation");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Shift statistics between two curves");
  std::string compare_a, compare_b;
  compare_cmd->add_option("--a", compare_a, "Baseline curve CSV")->required();
  compare_cmd->add_option("--b", compare_b, "Comparison curve CSV")->required();

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render curves as a static SVG chart");
  std::string plot_in, plot_out;
  plot_cmd->add_option("--in", plot_in, "Comma-separated curve CSV paths")->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*run_cmd) {
      cmd_run(run_config, seed_opt->count() > 0, run_seed, run_out, err);
    } else if (*sweep_cmd) {
      if (sweep_replicates < 1) {
        throw Error(ErrorKind::ValidationError, "--replicates must be >= 1");
      }
      cmd_sweep(sweep_config, sweep_param, sweep_values, sweep_replicates, sweep_out, err);
    } else if (*fit_cmd) {
      if (fit_replicates < 1) {
        throw Error(ErrorKind::ValidationError, "--replicates must be >= 1");
      }
      cmd_fit(fit_config, fit_target, fit_free, fit_replicates, out);
    } else if (*compare_cmd) {
      cmd_compare(compare_a, compare_b, out);
    } else if (*plot_cmd) {
      cmd_plot(plot_in, plot_out, err);
    }
  } catch (const Error& e) {
    err << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::IoError ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace explorer
