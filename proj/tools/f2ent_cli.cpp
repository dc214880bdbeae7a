#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "f2ent/errors.hpp"
#include "f2ent/io_formats.hpp"
#include "f2ent/run_config.hpp"
#include "f2ent/runner.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 1;
  int snapshots = 0;
};

void add_common_options(CLI::App* sub, CliArgs& args) {
  sub->add_option("--config", args.config_path, "INI configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", args.out_dir, "output directory (created if missing)");
  sub->add_option("--threads", args.threads, "FFT/BLAS thread count")
      ->check(CLI::PositiveNumber);
  sub->add_option("--snapshots", args.snapshots,
                  "override the snapshot count derived from the config stride")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-fermion entanglement toolkit"};
  app.set_version_flag("--version", std::string(f2ent::kVersion));
  app.require_subcommand(1);

  CliArgs args;
  CLI::App* toy = app.add_subcommand(
      "toy-sweep", "tabulate the analytic pair-superposition entanglement curve");
  CLI::App* scatter = app.add_subcommand(
      "scatter", "propagate a two-electron collision and record entanglement");
  CLI::App* compare = app.add_subcommand(
      "compare", "time the linear-entropy and von Neumann measures side by side");
  for (CLI::App* sub : {toy, scatter, compare}) add_common_options(sub, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string text = f2ent::read_text_file(args.config_path);
    const std::uint64_t hash = f2ent::fnv1a64(text);
    f2ent::RunOptions opts;
    opts.out_dir = args.out_dir;
    opts.threads = args.threads;
    opts.snapshots = args.snapshots;

    std::filesystem::path written;
    if (toy->parsed())
      written = f2ent::run_toy_sweep(f2ent::parse_toy_config(text), opts, hash);
    else if (scatter->parsed())
      written = f2ent::run_scatter(f2ent::parse_scatter_config(text), opts, hash);
    else
      written = f2ent::run_compare(f2ent::parse_scatter_config(text), opts, hash);
    std::cout << written.string() << '\n';
    return 0;
  } catch (const f2ent::StabilityError& e) {
    std::cerr << "stability error: " << e.what() << '\n';
    return 3;
  } catch (const f2ent::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
