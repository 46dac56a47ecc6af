#pragma once

// Disk/eigenvalue pictures of the complex plane: a plain document model,
// its JSON form, and an SVG renderer.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gershdisk/disks.hpp"

namespace gershdisk {

struct PlotDisk {
  std::complex<double> center;
  double radius = 0;
  std::string kind;
  Index row = 0;
  bool operator==(const PlotDisk&) const = default;
};

struct PlotEigenvalue {
  std::complex<double> value;
  Index geometric_multiplicity = 1;
  bool operator==(const PlotEigenvalue&) const = default;
};

struct Viewport {
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool operator==(const Viewport&) const = default;
};

struct PlotDocument {
  std::vector<PlotDisk> disks;
  std::vector<PlotEigenvalue> eigenvalues;
  Viewport viewport;
  bool operator==(const PlotDocument&) const = default;
};

/// Disks of every requested kind plus the clustered eigenvalues, inside a
/// square viewport with a 10% margin around their bounding box.
PlotDocument build_plot_document(const CMatrixd& m, const std::vector<RadiusKind>& kinds);

/// Square viewport enclosing every disk and eigenvalue with the given
/// relative margin on each side.
Viewport fit_viewport(const std::vector<PlotDisk>& disks, const std::vector<PlotEigenvalue>& eigenvalues,
                      double margin = 0.1);

nlohmann::json to_json(const PlotDocument& doc);
PlotDocument plot_from_json(const nlohmann::json& j);

/// 1000 x 1000 px SVG; imaginary axis points up.
std::string render_svg(const PlotDocument& doc);

}  // namespace gershdisk
