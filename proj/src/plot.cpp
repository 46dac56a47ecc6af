#include "gershdisk/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gershdisk/io.hpp"
#include "gershdisk/linalg.hpp"

namespace gershdisk {

namespace {

constexpr double kCanvas = 1000.0;

std::string num(double x, const char* spec = "%.3f") {
  if (std::abs(x) < 5e-4 && std::string(spec) == "%.3f") x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  std::string s(buf);
  if (s == "-0" || s == "-0.000") s.erase(0, 1);
  return s;
}

std::string label(std::complex<double> z) {
  const double re = std::abs(z.real()) < 1e-9 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-9 ? 0.0 : z.imag();
  std::string s = num(re, "%.4g");
  if (im != 0.0) s += (im < 0 ? "-" : "+") + num(std::abs(im), "%.4g") + "i";
  return s;
}

double nice_step(double span) {
  const double raw = span / 8.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  const double unit = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
  return unit * mag;
}

}  // namespace

Viewport fit_viewport(const std::vector<PlotDisk>& disks, const std::vector<PlotEigenvalue>& eigenvalues,
                      double margin) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  auto take = [&](double xa, double xb, double ya, double yb) {
    x0 = std::min(x0, xa);
    x1 = std::max(x1, xb);
    y0 = std::min(y0, ya);
    y1 = std::max(y1, yb);
  };
  for (const auto& d : disks)
    take(d.center.real() - d.radius, d.center.real() + d.radius, d.center.imag() - d.radius,
         d.center.imag() + d.radius);
  for (const auto& e : eigenvalues) take(e.value.real(), e.value.real(), e.value.imag(), e.value.imag());
  if (!std::isfinite(x0)) x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  double span = std::max(x1 - x0, y1 - y0);
  if (span <= 0) span = 1.0;
  const double half = span * (0.5 + margin);
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return {cx - half, cx + half, cy - half, cy + half};
}

PlotDocument build_plot_document(const CMatrixd& m, const std::vector<RadiusKind>& kinds) {
  PlotDocument doc;
  for (const auto& kind : kinds)
    for (const auto& d : disk_set<double>(m, kind)) doc.disks.push_back({d.center, d.radius, kind.name(), d.row});
  const auto rep = eigen_report<double>(m);
  for (const auto& c : rep.clusters) doc.eigenvalues.push_back({c.value, c.geometric_multiplicity});
  doc.viewport = fit_viewport(doc.disks, doc.eigenvalues);
  return doc;
}

nlohmann::json to_json(const PlotDocument& doc) {
  nlohmann::json disks = nlohmann::json::array(), eigs = nlohmann::json::array();
  for (const auto& d : doc.disks)
    disks.push_back({{"center", complex_to_json(d.center)}, {"radius", d.radius}, {"kind", d.kind}, {"row", d.row}});
  for (const auto& e : doc.eigenvalues)
    eigs.push_back({{"value", complex_to_json(e.value)}, {"geometric_multiplicity", e.geometric_multiplicity}});
  const auto& v = doc.viewport;
  return {{"disks", disks},
          {"eigenvalues", eigs},
          {"viewport", {{"x_min", v.x_min}, {"x_max", v.x_max}, {"y_min", v.y_min}, {"y_max", v.y_max}}}};
}

PlotDocument plot_from_json(const nlohmann::json& j) {
  PlotDocument doc;
  try {
    for (const auto& d : j.at("disks"))
      doc.disks.push_back({complex_from_json(d.at("center")), d.at("radius").get<double>(),
                           d.at("kind").get<std::string>(), d.at("row").get<Index>()});
    for (const auto& e : j.at("eigenvalues"))
      doc.eigenvalues.push_back({complex_from_json(e.at("value")), e.at("geometric_multiplicity").get<Index>()});
    const auto& v = j.at("viewport");
    doc.viewport = {v.at("x_min").get<double>(), v.at("x_max").get<double>(), v.at("y_min").get<double>(),
                    v.at("y_max").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("plot document: ") + e.what());
  }
  return doc;
}

std::string render_svg(const PlotDocument& doc) {
  const Viewport& v = doc.viewport;
  const double sx = kCanvas / (v.x_max - v.x_min);
  const double sy = kCanvas / (v.y_max - v.y_min);
  auto px = [&](double x) { return (x - v.x_min) * sx; };
  auto py = [&](double y) { return (v.y_max - y) * sy; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
     << "<style>\n"
     << "  .disk { fill: none; stroke-width: 2; }\n"
     << "  .disk-full { stroke: #1f77b4; }\n"
     << "  .disk-half { stroke: #d62728; }\n"
     << "  .disk-fraction { stroke: #2ca02c; stroke-dasharray: 6 4; }\n"
     << "  .disk-median { stroke: #9467bd; stroke-dasharray: 2 3; }\n"
     << "  .disk-corollary2 { stroke: #ff7f0e; }\n"
     << "  .disk-third { stroke: #8c564b; stroke-dasharray: 8 3 2 3; }\n"
     << "  .axis { stroke: #444; stroke-width: 1; }\n"
     << "  .tick { stroke: #444; stroke-width: 1; }\n"
     << "  .tick-label { font: 14px sans-serif; fill: #444; }\n"
     << "  .eig { fill: #000; }\n"
     << "  .eig-label { font: 16px sans-serif; fill: #000; }\n"
     << "</style>\n"
     << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#fff\"/>\n";

  // Axes through the origin when visible, else along the bottom/left edges.
  const double axis_y = (v.y_min <= 0 && 0 <= v.y_max) ? 0.0 : v.y_min;
  const double axis_x = (v.x_min <= 0 && 0 <= v.x_max) ? 0.0 : v.x_min;
  os << "<g class=\"axes\">\n"
     << "  <line class=\"axis\" x1=\"0\" y1=\"" << num(py(axis_y)) << "\" x2=\"1000\" y2=\"" << num(py(axis_y))
     << "\"/>\n"
     << "  <line class=\"axis\" x1=\"" << num(px(axis_x)) << "\" y1=\"0\" x2=\"" << num(px(axis_x))
     << "\" y2=\"1000\"/>\n";
  const double xs = nice_step(v.x_max - v.x_min);
  for (long k = static_cast<long>(std::ceil(v.x_min / xs)); k * xs <= v.x_max; ++k) {
    const double tv = k == 0 ? 0.0 : k * xs;
    os << "  <line class=\"tick\" x1=\"" << num(px(tv)) << "\" y1=\"" << num(py(axis_y) - 5) << "\" x2=\""
       << num(px(tv)) << "\" y2=\"" << num(py(axis_y) + 5) << "\"/>\n"
       << "  <text class=\"tick-label\" x=\"" << num(px(tv) + 3) << "\" y=\"" << num(py(axis_y) + 20) << "\">"
       << num(tv, "%g") << "</text>\n";
  }
  const double ys = nice_step(v.y_max - v.y_min);
  for (long k = static_cast<long>(std::ceil(v.y_min / ys)); k * ys <= v.y_max; ++k) {
    if (k == 0) continue;
    const double tv = k * ys;
    os << "  <line class=\"tick\" x1=\"" << num(px(axis_x) - 5) << "\" y1=\"" << num(py(tv)) << "\" x2=\""
       << num(px(axis_x) + 5) << "\" y2=\"" << num(py(tv)) << "\"/>\n"
       << "  <text class=\"tick-label\" x=\"" << num(px(axis_x) + 8) << "\" y=\"" << num(py(tv) + 5) << "\">"
       << num(tv, "%g") << "i</text>\n";
  }
  os << "</g>\n<g class=\"disks\">\n";
  for (const auto& d : doc.disks)
    os << "  <circle class=\"disk disk-" << d.kind << "\" data-row=\"" << d.row << "\" cx=\""
       << num(px(d.center.real())) << "\" cy=\"" << num(py(d.center.imag())) << "\" r=\"" << num(d.radius * sx)
       << "\"/>\n";
  os << "</g>\n<g class=\"eigenvalues\">\n";
  for (const auto& e : doc.eigenvalues) {
    const double x = px(e.value.real()), y = py(e.value.imag());
    os << "  <circle class=\"eig\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"5\"/>\n"
       << "  <text class=\"eig-label\" x=\"" << num(x + 8) << "\" y=\"" << num(y - 8) << "\">" << label(e.value)
       << " (mult " << e.geometric_multiplicity << ")</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gershdisk
