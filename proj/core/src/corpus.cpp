#include "coordlab/corpus.hpp"

#include <cmath>

#include "coordlab/error.hpp"

namespace coordlab {

namespace {

std::string trim(const std::string& s) {
  const auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  const auto hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

CorpusEntry make_entry(std::string label, SurfaceFn eval, SurfaceFn mixed,
                       std::vector<ConvexityClass> classes, Rectangle valid_on,
                       std::string notes) {
  CorpusEntry e;
  e.fn.eval = std::move(eval);
  e.fn.mixed = std::move(mixed);
  e.fn.classes = std::move(classes);
  e.fn.valid_on = valid_on;
  e.fn.label = std::move(label);
  e.notes = std::move(notes);
  for (const auto& nr : named_rect_suite()) {
    if (valid_on.contains(nr.rect)) e.default_rects.push_back(nr.rect);
  }
  return e;
}

CorpusEntry power_entry(double s, std::string label) {
  return make_entry(
      std::move(label), [s](double x, double y) { return std::pow(x, s) * std::pow(y, s); },
      [s](double x, double y) { return s * s * std::pow(x, s - 1.0) * std::pow(y, s - 1.0); },
      {ConvexityClass::coord_sconvex(s)}, Rectangle(0.05, 3.0, 0.05, 3.0),
      "x^s y^s; partial maps are s-convex in the second sense, concave for s < 1");
}

std::vector<CorpusEntry> build_corpus() {
  const Rectangle wide_domain(-4.0, 4.0, -4.0, 4.0);
  const Rectangle first_quadrant(0.0, 4.0, 0.0, 4.0);
  const auto cc = ConvexityClass::coord_convex();
  const auto jc = ConvexityClass::joint_convex();

  std::vector<CorpusEntry> out;
  out.push_back(make_entry(
      "affine", [](double x, double y) { return 2.0 * x - 3.0 * y + 1.0; },
      [](double, double) { return 0.0; }, {cc, jc}, wide_domain,
      "2x - 3y + 1; every deviation vanishes"));
  out.push_back(make_entry(
      "bilinear", [](double x, double y) { return x * y; }, [](double, double) { return 1.0; },
      {cc}, wide_domain, "xy; linear in each coordinate, not jointly convex"));
  out.push_back(make_entry(
      "x2y2", [](double x, double y) { return x * x * y * y; },
      [](double x, double y) { return 4.0 * x * y; }, {cc}, wide_domain, "x^2 y^2"));
  out.push_back(make_entry(
      "exp_sum", [](double x, double y) { return std::exp(x + y); },
      [](double x, double y) { return std::exp(x + y); },
      {cc, jc, ConvexityClass::coord_sconvex(0.25), ConvexityClass::coord_sconvex(0.5),
       ConvexityClass::coord_sconvex(0.75), ConvexityClass::coord_sconvex(1.0)},
      first_quadrant, "e^(x+y); nonnegative and convex, hence s-convex for every s"));
  out.push_back(make_entry(
      "sum_sq", [](double x, double y) { return (x + y) * (x + y); },
      [](double, double) { return 2.0; }, {cc, jc}, wide_domain, "(x+y)^2"));
  out.push_back(power_entry(0.25, "pow_s0.25"));
  out.push_back(power_entry(0.5, "pow_s0.5"));
  out.push_back(power_entry(0.75, "pow_s0.75"));
  out.push_back(make_entry(
      "cubic_mix", [](double x, double y) { return x * x * x * y + x * y * y * y; },
      [](double x, double y) { return 3.0 * x * x + 3.0 * y * y; }, {cc}, first_quadrant,
      "x^3 y + x y^3; coordinate-wise convex in the first quadrant"));
  out.push_back(make_entry(
      "neg_x2y2", [](double x, double y) { return -x * x * y * y; },
      [](double x, double y) { return -4.0 * x * y; }, {}, wide_domain,
      "-x^2 y^2; negative control without claims"));
  return out;
}

}  // namespace

const std::vector<NamedRect>& named_rect_suite() {
  static const std::vector<NamedRect> suite = {
      {"unit", Rectangle(0.0, 1.0, 0.0, 1.0)},
      {"wide", Rectangle(0.0, 2.0, 0.0, 1.0)},
      {"shifted", Rectangle(1.0, 3.0, 0.0, 2.0)},
      {"inner", Rectangle(0.05, 1.0, 0.05, 1.0)},
      {"centered", Rectangle(-1.0, 1.0, -1.0, 1.0)},
  };
  return suite;
}

std::vector<Rectangle> rect_suite() {
  std::vector<Rectangle> out;
  for (const auto& nr : named_rect_suite()) out.push_back(nr.rect);
  return out;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build_corpus();
  return corpus;
}

const CorpusEntry& find_entry(const std::string& label) {
  for (const auto& e : builtin_corpus()) {
    if (e.fn.label == label) return e;
  }
  throw InvalidArgument("unknown corpus label '" + label + "'");
}

std::vector<std::string> read_manifest(std::istream& in) {
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) labels.push_back(line);
  }
  return labels;
}

SurfaceFunction without_mixed(SurfaceFunction f) {
  f.mixed = nullptr;
  f.label += "_fd";
  return f;
}

}  // namespace coordlab
