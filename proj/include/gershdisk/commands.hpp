#pragma once

// Command implementations behind the gershdisk executable. Each returns the
// process exit code and writes to the given streams, so tests can drive them
// in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gershdisk/disks.hpp"
#include "gershdisk/localization.hpp"

namespace gershdisk {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int input = 2;
inline constexpr int domain = 3;
inline constexpr int theorem_violation = 4;
inline constexpr int io = 5;
}  // namespace exit_code

struct KindFlags {
  bool full = false;
  bool half = false;
  std::vector<Index> fractions;
  bool median = false;
  bool corollary2 = false;
  bool third = false;

  /// Requested kinds in a fixed order; full + half when nothing was asked for.
  std::vector<RadiusKind> kinds() const;
};

struct Console {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

nlohmann::json disk_to_json(const Disk<double>& d);
nlohmann::json disks_to_json(const std::vector<Disk<double>>& disks);
nlohmann::json localization_to_json(const LocalizationReport<double>& rep, bool theorem_mode);

int cmd_disks(const std::string& input, const KindFlags& flags, Console io);
int cmd_localize(const std::string& input, double tol, Console io);
int cmd_plot(const std::string& input, const KindFlags& flags, const std::optional<std::string>& out_path,
             Console io);
int cmd_example(const std::string& id, Console io);
int cmd_list_examples(Console io);

struct CheckOptions {
  Index trials = 1000;
  Index n_max = 8;
  Index d = 2;
  std::uint64_t seed = 0;
  double slack = 1e-9;
  Index gamma_grid = 5;  // gamma samples per admissible interval
};

/// Randomised soundness run of the rearrangement bounds and the zonotope
/// radius bound. Trial t uses seed + t.
nlohmann::json check_inequalities(const CheckOptions& opt);
int cmd_check_inequalities(const CheckOptions& opt, Console io);

}  // namespace gershdisk
