// gershdisk: shrunken Gershgorin disks for multiple eigenvalues.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "gershdisk/commands.hpp"

namespace {

void add_kind_flags(CLI::App* cmd, gershdisk::KindFlags& flags) {
  cmd->add_flag("--full", flags.full, "Full Gershgorin radius");
  cmd->add_flag("--half", flags.half, "Sum of the floor(n/2) largest off-diagonal magnitudes");
  cmd->add_option("--fraction", flags.fractions, "Sum of the M largest off-diagonal magnitudes (repeatable)")
      ->type_name("M");
  cmd->add_flag("--median", flags.median, "Median-shifted radius (non-negative real matrices only)");
  cmd->add_flag("--corollary2", flags.corollary2, "Sum of the ceil(n/2) largest off-diagonal magnitudes");
  cmd->add_flag("--third", flags.third, "Sum of the ceil(n/3) largest off-diagonal magnitudes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shrunken Gershgorin disks for geometrically multiple eigenvalues"};
  app.require_subcommand(0, 1);
  bool list_examples = false;
  app.add_flag("--list-examples", list_examples, "List builtin matrix ids and exit");

  std::string input;
  gershdisk::KindFlags flags;

  auto* disks = app.add_subcommand("disks", "Print disks of the requested kinds as JSON");
  disks->add_option("input", input, "Matrix file (.json/.csv) or builtin id")->required();
  add_kind_flags(disks, flags);

  double tol = 1e-8;
  auto* localize = app.add_subcommand("localize", "Locate multiple eigenvalues in shrunken disks");
  localize->add_option("input", input, "Matrix file (.json/.csv) or builtin id")->required();
  localize->add_option("--tol", tol, "Relative boundary/eigenvector tolerance")->capture_default_str();

  gershdisk::CheckOptions check;
  auto* ineq = app.add_subcommand("check-inequalities", "Randomised soundness run of the rearrangement bounds");
  ineq->add_option("--trials", check.trials, "Number of random trials")->capture_default_str();
  ineq->add_option("--n-max", check.n_max, "Largest family size (exhaustive permutations up to 9)")
      ->capture_default_str();
  ineq->add_option("--d", check.d, "Ambient dimension")->capture_default_str();
  ineq->add_option("--seed", check.seed, "Base seed; trial t uses seed + t")->capture_default_str();

  std::optional<std::string> out_path;
  auto* plot = app.add_subcommand("plot", "Draw disks and eigenvalues (SVG, or JSON for a .json path)");
  plot->add_option("input", input, "Matrix file (.json/.csv) or builtin id")->required();
  plot->add_option("--out", out_path, "Output file (.svg or .json); SVG to stdout when omitted");
  add_kind_flags(plot, flags);

  std::string example_id;
  auto* example = app.add_subcommand("example", "Print a builtin matrix as JSON");
  example->add_option("id", example_id, "Builtin id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gershdisk::exit_code::input;
  }

  const bool color = isatty(STDERR_FILENO) && std::getenv("NO_COLOR") == nullptr;
  gershdisk::Console io{std::cout, std::cerr, color};

  if (list_examples) return gershdisk::cmd_list_examples(io);
  if (*disks) return gershdisk::cmd_disks(input, flags, io);
  if (*localize) return gershdisk::cmd_localize(input, tol, io);
  if (*ineq) return gershdisk::cmd_check_inequalities(check, io);
  if (*plot) return gershdisk::cmd_plot(input, flags, out_path, io);
  if (*example) return gershdisk::cmd_example(example_id, io);
  std::cout << app.help();
  return gershdisk::exit_code::input;
}
