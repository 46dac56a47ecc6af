#include "gershdisk/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "gershdisk/io.hpp"
#include "gershdisk/plot.hpp"
#include "gershdisk/rearrangement.hpp"

namespace gershdisk {

namespace {

void warn(Console io, const std::string& msg) {
  if (io.color)
    io.err << "\x1b[33mwarning:\x1b[0m " << msg << "\n";
  else
    io.err << "warning: " << msg << "\n";
}

void fail(Console io, const std::string& msg) {
  if (io.color)
    io.err << "\x1b[31merror:\x1b[0m " << msg << "\n";
  else
    io.err << "error: " << msg << "\n";
}

// Maps the error taxonomy onto the exit-code contract.
template <typename F>
int guarded(Console io, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    fail(io, e.what());
    return exit_code::input;
  } catch (const DimensionError& e) {
    fail(io, e.what());
    return exit_code::input;
  } catch (const ParameterError& e) {
    fail(io, e.what());
    return exit_code::input;
  } catch (const DomainError& e) {
    fail(io, e.what());
    return exit_code::domain;
  } catch (const IoError& e) {
    fail(io, e.what());
    return exit_code::io;
  } catch (const std::exception& e) {
    fail(io, e.what());
    return exit_code::internal;
  }
}

nlohmann::json ratio_or_null(double r) {
  if (std::isfinite(r)) return r;
  return nullptr;
}

}  // namespace

std::vector<RadiusKind> KindFlags::kinds() const {
  std::vector<RadiusKind> out;
  if (full) out.push_back(RadiusKind::full());
  if (half) out.push_back(RadiusKind::half());
  for (Index m : fractions) out.push_back(RadiusKind::fraction(m));
  if (third) out.push_back(RadiusKind::third());
  if (corollary2) out.push_back(RadiusKind::corollary2());
  if (median) out.push_back(RadiusKind::median());
  if (out.empty()) out = {RadiusKind::full(), RadiusKind::half()};
  return out;
}

nlohmann::json disk_to_json(const Disk<double>& d) {
  nlohmann::json j = {{"row", d.row}, {"kind", d.kind.name()}, {"center", complex_to_json(d.center)},
                      {"radius", d.radius}};
  if (d.kind.tag == RadiusKind::Tag::Fraction) j["count"] = d.kind.count;
  if (d.kind.tag == RadiusKind::Tag::Median) {
    j["b_star"] = d.b_star;
    j["literal_radius"] = d.literal_radius;
  }
  return j;
}

nlohmann::json disks_to_json(const std::vector<Disk<double>>& disks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : disks) arr.push_back(disk_to_json(d));
  return arr;
}

nlohmann::json localization_to_json(const LocalizationReport<double>& rep, bool theorem_mode) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : rep.eigen.clusters)
    clusters.push_back({{"value", complex_to_json(c.value)},
                        {"algebraic_count", c.algebraic_count},
                        {"geometric_multiplicity", c.geometric_multiplicity},
                        {"residual", c.residual}});

  nlohmann::json disks = nlohmann::json::array();
  for (const auto& [kind, ds] : rep.disks)
    for (const auto& d : ds) disks.push_back(disk_to_json(d));

  nlohmann::json multiple = nlohmann::json::array();
  for (const auto& me : rep.multiple) {
    nlohmann::json kinds = nlohmann::json::array();
    for (const auto& kc : me.kinds) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : kc.rows) rows.push_back({{"row", r.row}, {"status", to_string(r.status)}});
      nlohmann::json k = {{"kind", kc.kind.name()}, {"contained", kc.contained}, {"rows", rows}};
      if (kc.kind.tag == RadiusKind::Tag::Fraction) k["count"] = kc.kind.count;
      if (!me.error) k["at_witness"] = to_string(kc.at_witness);
      kinds.push_back(std::move(k));
    }
    nlohmann::json entry = {{"cluster", me.cluster},
                            {"value", complex_to_json(me.value)},
                            {"algebraic_count", me.algebraic_count},
                            {"geometric_multiplicity", me.geometric_multiplicity},
                            {"containment", kinds}};
    if (me.error) {
      entry["error"] = *me.error;
    } else {
      nlohmann::json w = nlohmann::json::array();
      for (Index i = 0; i < me.witness.size(); ++i) w.push_back(complex_to_json(me.witness(i)));
      entry["witness_row"] = me.witness_row;
      entry["witness"] = w;
      entry["eigen_residual"] = me.eigen_residual;
      entry["zero_sum_residual"] = me.zero_sum_residual;
      entry["row_residual"] = me.row_residual;
    }
    multiple.push_back(std::move(entry));
  }

  nlohmann::json defective = nlohmann::json::array();
  for (auto c : rep.defective) defective.push_back(c);

  nlohmann::json j = {{"matrix_id", rep.matrix_id},
                      {"order", rep.order},
                      {"mode", theorem_mode ? "theorem" : "counterexample"},
                      {"nonnegative", rep.nonnegative},
                      {"tol", rep.tol},
                      {"merged_warning", rep.eigen.merged_warning},
                      {"clusters", clusters},
                      {"defective_clusters", defective},
                      {"disks", disks},
                      {"multiple_eigenvalues", multiple},
                      {"half_holds", rep.holds(RadiusKind::half())}};
  j["median_holds"] = rep.disks_of(RadiusKind::median()) ? nlohmann::json(rep.holds(RadiusKind::median()))
                                                         : nlohmann::json(nullptr);
  return j;
}

int cmd_disks(const std::string& input, const KindFlags& flags, Console io) {
  return guarded(io, [&] {
    const NamedMatrix nm = load_matrix(input);
    require_square(nm.matrix, "disks");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& kind : flags.kinds())
      for (const auto& d : disk_set<double>(nm.matrix, kind)) arr.push_back(disk_to_json(d));
    io.out << arr.dump(2) << "\n";
    return exit_code::ok;
  });
}

int cmd_localize(const std::string& input, double tol, Console io) {
  return guarded(io, [&] {
    const NamedMatrix nm = load_matrix(input);
    require_square(nm.matrix, "localize");
    LocalizationOptions<double> opt;
    opt.tol = tol;
    opt.known_eigenvalues = nm.known_eigenvalues;
    const bool theorem_mode = is_nonneg_real(nm.matrix);
    if (!theorem_mode)
      warn(io, "'" + nm.id +
                   "' has negative or complex entries; the half-disk guarantee does not apply, "
                   "reporting containment only (counterexample mode)");
    const auto rep = theorem_mode ? verify_half_disk_theorem<double>(nm.matrix, opt, nm.id)
                                  : counterexample_check<double>(nm.matrix, opt, nm.id);
    if (rep.eigen.merged_warning) warn(io, "all eigenvalues merged into one cluster; consider a smaller cluster tolerance");

    nlohmann::json j = localization_to_json(rep, theorem_mode);
    nlohmann::json violations = nlohmann::json::array();
    int code = exit_code::ok;
    if (theorem_mode) {
      for (const auto* me : outside_all(rep, RadiusKind::half())) {
        // Distance from the eigenvalue to the nearest half disk, relative to
        // the boundary tolerance, tells a tolerance miss from a real failure.
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& d : *rep.disks_of(RadiusKind::half()))
          gap = std::min(gap, std::abs(me->value - d.center) - d.radius);
        const double scale = frobenius_scale(nm.matrix);
        const std::string cause = gap <= 1e4 * tol * scale ? "tolerance failure" : "bug";
        std::ostringstream os;
        os << "eigenvalue " << me->value << " (geometric multiplicity " << me->geometric_multiplicity
           << ") lies outside every half disk by " << gap << ": " << cause;
        violations.push_back(os.str());
        fail(io, os.str());
        code = exit_code::theorem_violation;
      }
      for (const auto& me : rep.multiple)
        if (me.error) warn(io, "no zero-sum witness for eigenvalue cluster " + std::to_string(me.cluster) + ": " + *me.error);
    } else {
      for (const auto* me : outside_all(rep, RadiusKind::half())) {
        std::ostringstream os;
        os << "eigenvalue " << me->value << " (geometric multiplicity " << me->geometric_multiplicity
           << ") lies outside every half disk";
        violations.push_back(os.str());
      }
    }
    j["violations"] = violations;
    io.out << j.dump(2) << "\n";
    return code;
  });
}

int cmd_plot(const std::string& input, const KindFlags& flags, const std::optional<std::string>& out_path,
             Console io) {
  return guarded(io, [&] {
    const NamedMatrix nm = load_matrix(input);
    require_square(nm.matrix, "plot");
    const PlotDocument doc = build_plot_document(nm.matrix, flags.kinds());
    const bool as_json = out_path && out_path->size() >= 5 && out_path->substr(out_path->size() - 5) == ".json";
    const std::string body = as_json ? to_json(doc).dump(2) + "\n" : render_svg(doc);
    if (!out_path) {
      io.out << body;
      return exit_code::ok;
    }
    std::ofstream f(*out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + *out_path + "'");
    f << body;
    f.close();
    if (!f) throw IoError("failed while writing '" + *out_path + "'");
    return exit_code::ok;
  });
}

int cmd_example(const std::string& id, Console io) {
  return guarded(io, [&] {
    const auto nm = builtin_matrix(id);
    if (!nm) throw InputError("unknown builtin id '" + id + "' (see --list-examples)");
    io.out << matrix_to_json(nm->matrix).dump(2) << "\n";
    return exit_code::ok;
  });
}

int cmd_list_examples(Console io) {
  for (const auto& id : builtin_ids()) io.out << id << "\n";
  return exit_code::ok;
}

nlohmann::json check_inequalities(const CheckOptions& opt) {
  if (opt.trials < 1) throw ParameterError("check-inequalities: --trials must be >= 1");
  if (opt.n_max < 2) throw ParameterError("check-inequalities: --n-max must be >= 2");
  if (opt.n_max > kMaxExhaustiveSubset) throw ParameterError("check-inequalities: --n-max must be <= 20");
  if (opt.d < 1) throw ParameterError("check-inequalities: --d must be >= 1");
  if (opt.gamma_grid < 2) throw ParameterError("check-inequalities: gamma grid needs >= 2 points");

  struct Stat {
    double max_ratio = 0;
    Index violations = 0;
    void add(double lhs, double bound, double slack) {
      const double r = bound > 0 ? lhs / bound : (lhs <= slack ? 0.0 : std::numeric_limits<double>::infinity());
      max_ratio = std::max(max_ratio, r);
      if (lhs > bound + slack) ++violations;
    }
  };
  Stat thm1, cor1, thm2, thm2_best, cor2, zono;
  Index cor1_formula_violations = 0;
  Index first_better = 0, second_better = 0;
  nlohmann::json first_example = nullptr, second_example = nullptr;
  Index sampled_trials = 0;

  for (Index t = 0; t < opt.trials; ++t) {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(t));
    const Index n = std::uniform_int_distribution<Index>(2, opt.n_max)(rng);
    const auto raw = random_zero_sum_config<double>(n, opt.d, rng());
    CoeffSeq<double> a = random_coeff_seq<double>(n, rng());
    if (rng() % 4 == 0) {
      // Quantised coefficients exercise ties and zeros.
      std::vector<double> q = a.values();
      for (auto& x : q) x = std::floor(x * 4.0) / 4.0;
      a = CoeffSeq<double>(std::move(q));
    }
    const auto v = sort_by_norm(raw).first;

    double lhs;
    if (n <= kMaxExhaustivePermutation) {
      lhs = max_norm_over_permutations(v, a).max_norm;
    } else {
      lhs = sampled_max_norm(v, a, 10 * n, rng()).max_norm;
      ++sampled_trials;
    }

    const double b1 = bound_theorem_first(v, a);
    const double c1 = bound_corollary_first(v, a);
    thm1.add(lhs, b1, opt.slack);
    cor1.add(lhs, c1, opt.slack);
    if (b1 > c1 + 1e-12) ++cor1_formula_violations;

    // Every admissible (j, gamma) on a grid.
    for (Index j = 1; j < n; ++j)
      for (Index g = 0; g < opt.gamma_grid; ++g) {
        const double lo = a[j], hi = a[j - 1];
        const double gamma = g + 1 == opt.gamma_grid ? hi : lo + (hi - lo) * double(g) / double(opt.gamma_grid - 1);
        thm2.add(lhs, bound_theorem_second(v, a, j, gamma), opt.slack);
      }
    const auto best = bound_theorem_second_best(v, a);
    thm2_best.add(lhs, best.bound, opt.slack);
    cor2.add(lhs, bound_corollary_second(v, a), opt.slack);

    zono.add(zonotope_max_norm(v), 0.5 * v.norm_sum(), opt.slack);

    auto example = [&] {
      return nlohmann::json{{"trial", t},          {"n", n},          {"theorem_first", b1},
                            {"theorem_second_best", best.bound}, {"j", best.j}, {"gamma", best.gamma},
                            {"max_lhs", lhs}};
    };
    if (b1 < best.bound - opt.slack) {
      if (first_better++ == 0) first_example = example();
    } else if (best.bound < b1 - opt.slack) {
      if (second_better++ == 0) second_example = example();
    }
  }

  const Index total = thm1.violations + cor1.violations + thm2.violations + thm2_best.violations + cor2.violations +
                      zono.violations + cor1_formula_violations;
  return {{"trials", opt.trials},
          {"n_max", opt.n_max},
          {"d", opt.d},
          {"seed", opt.seed},
          {"slack", opt.slack},
          {"sampled_trials", sampled_trials},
          {"max_ratio",
           {{"theorem_first", ratio_or_null(thm1.max_ratio)},
            {"corollary_first", ratio_or_null(cor1.max_ratio)},
            {"theorem_second", ratio_or_null(thm2.max_ratio)},
            {"theorem_second_best", ratio_or_null(thm2_best.max_ratio)},
            {"corollary_second", ratio_or_null(cor2.max_ratio)},
            {"zonotope", ratio_or_null(zono.max_ratio)}}},
          {"violations",
           {{"theorem_first", thm1.violations},
            {"corollary_first", cor1.violations},
            {"theorem_second", thm2.violations},
            {"theorem_second_best", thm2_best.violations},
            {"corollary_second", cor2.violations},
            {"zonotope", zono.violations},
            {"corollary_first_formula", cor1_formula_violations}}},
          {"incomparability",
           {{"first_better", first_better},
            {"second_better", second_better},
            {"first_better_example", first_example},
            {"second_better_example", second_example}}},
          {"ok", total == 0}};
}

int cmd_check_inequalities(const CheckOptions& opt, Console io) {
  return guarded(io, [&] {
    const nlohmann::json summary = check_inequalities(opt);
    io.out << summary.dump(2) << "\n";
    if (!summary["ok"].get<bool>()) {
      fail(io, "an inequality was violated beyond the slack; see \"violations\"");
      return exit_code::theorem_violation;
    }
    return exit_code::ok;
  });
}

}  // namespace gershdisk
