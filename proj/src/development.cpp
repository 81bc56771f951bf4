#include "routeval/development.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

namespace routeval {

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::improving: return "improving";
    case Trend::stable: return "stable";
    case Trend::deteriorating: return "deteriorating";
    case Trend::mixed: return "mixed";
  }
  return "mixed";
}

DevelopmentSeries::DevelopmentSeries(std::vector<SeriesEntry> entries) {
  for (auto& e : entries) push(std::move(e));
}

void DevelopmentSeries::push(SeriesEntry entry) {
  if (!entries_.empty() && entry.index <= entries_.back().index) {
    throw std::invalid_argument(
        fmt::format("series entry {} does not follow entry {}", entry.index, entries_.back().index));
  }
  entries_.push_back(entry);
}

TrendReport analyze_trend(const DevelopmentSeries& series, double epsilon) {
  if (series.size() < 2) throw std::invalid_argument("trend needs at least two entries (insufficient history)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  const auto entries = series.entries();
  const auto& first = entries.front().vector;
  const auto& last = entries.back().vector;

  TrendReport r;
  r.steps = entries.size() - 1;
  r.net_quality_change = last.quality - first.quality;
  r.net_change = CoefficientVector{last.S - first.S, last.D - first.D, last.T - first.T, last.C - first.C,
                                   last.quality - first.quality};
  bool never_drops = true;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const double step = entries[i].vector.quality - entries[i - 1].vector.quality;
    if (step < 0.0) ++r.declining_steps;
    if (step < -epsilon) never_drops = false;
  }

  if (std::abs(r.net_quality_change) <= epsilon) {
    r.trend = Trend::stable;
  } else if (never_drops && r.net_quality_change > 0.0) {
    r.trend = Trend::improving;
  } else if (r.net_quality_change < 0.0 && 2 * r.declining_steps >= r.steps) {
    r.trend = Trend::deteriorating;
  } else {
    r.trend = Trend::mixed;
  }
  return r;
}

Trend classify(const DevelopmentSeries& series, double epsilon) { return analyze_trend(series, epsilon).trend; }

std::string to_csv(const DevelopmentSeries& series) {
  std::string out = "waypoint,S,D,T,C,quality\n";
  for (const auto& e : series.entries()) {
    const auto& v = e.vector;
    out += fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", e.index, v.S, v.D, v.T, v.C, v.quality);
  }
  return out;
}

double shoelace_area(std::span<const geo::Vec2> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % polygon.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * std::abs(twice);
}

CognitiveImage render_image(const CoefficientVector& v) {
  CognitiveImage img;
  img.source = v;
  img.t_clamped = v.T > 1.0;
  img.spoke_lengths = {v.S, v.D, std::min(v.T, 1.0), v.C};
  // Unit directions for the spoke angles in kSpokeAnglesDeg.
  static constexpr geo::Vec2 kDirections[] = {{0.0, 1.0}, {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}};
  for (std::size_t i = 0; i < 4; ++i) {
    const double len = std::max(img.spoke_lengths[i], 0.0);
    img.control_points[i] = geo::Vec2{len * kDirections[i].x, len * kDirections[i].y};
  }
  img.area = shoelace_area(img.control_points);
  return img;
}

namespace {

constexpr double kCanvas = 420.0;
constexpr double kCenter = 210.0;
constexpr double kUnitPx = 160.0;

struct Stroke {
  const char* color;
  const char* dash;
};

constexpr Stroke kStrokes[] = {
    {"#1f4e79", ""}, {"#c0392b", "8 5"}, {"#2e7d32", "2 4"}, {"#8e44ad", "12 4 2 4"}, {"#d35400", "6 2"}, {"#555555", "1 2"},
};

geo::Vec2 to_px(geo::Vec2 p) { return {kCenter + p.x * kUnitPx, kCenter - p.y * kUnitPx}; }

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string pt(geo::Vec2 p) { return fmt::format("{:.3f},{:.3f}", p.x, p.y); }

/// Closed uniform Catmull-Rom spline through the control points as cubic Beziers.
std::string smooth_closed_path(const std::array<geo::Vec2, 4>& cps) {
  std::array<geo::Vec2, 4> px;
  for (std::size_t i = 0; i < 4; ++i) px[i] = to_px(cps[i]);
  std::string d = "M " + pt(px[0]);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& p0 = px[(i + 3) % 4];
    const auto& p1 = px[i];
    const auto& p2 = px[(i + 1) % 4];
    const auto& p3 = px[(i + 2) % 4];
    const geo::Vec2 c1{p1.x + (p2.x - p0.x) / 6.0, p1.y + (p2.y - p0.y) / 6.0};
    const geo::Vec2 c2{p2.x - (p3.x - p1.x) / 6.0, p2.y - (p3.y - p1.y) / 6.0};
    d += " C " + pt(c1) + " " + pt(c2) + " " + pt(p2);
  }
  d += " Z";
  return d;
}

}  // namespace

std::string render_svg(std::span<const CognitiveImage> images, std::span<const std::string> labels) {
  if (images.empty()) throw std::invalid_argument("render_svg needs at least one image");
  if (labels.size() != images.size()) throw std::invalid_argument("one label per image is required");

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
      kCanvas, kCanvas + 24.0 * static_cast<double>(images.size()));
  out += "<title>Route cognitive images</title>\n";
  out += fmt::format("<circle class=\"unit\" cx=\"{0:.3f}\" cy=\"{0:.3f}\" r=\"{1:.3f}\" fill=\"none\" "
                     "stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
                     kCenter, kUnitPx);
  static constexpr const char* kAxisNames[] = {"S", "D", "T", "C"};
  static constexpr double kAxisOffset[][2] = {{-4.0, -8.0}, {8.0, 4.0}, {-4.0, 18.0}, {-18.0, 4.0}};
  for (std::size_t i = 0; i < 4; ++i) {
    const geo::Vec2 dir[] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    const auto tip = to_px(dir[i]);
    out += fmt::format("<text class=\"axis\" x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"sans-serif\" "
                       "font-size=\"13\">{}</text>\n",
                       tip.x + kAxisOffset[i][0], tip.y + kAxisOffset[i][1], kAxisNames[i]);
  }

  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto& img = images[k];
    const Stroke& stroke = kStrokes[k % std::size(kStrokes)];
    const std::string dash = *stroke.dash ? fmt::format(" stroke-dasharray=\"{}\"", stroke.dash) : std::string();
    out += fmt::format(
        "<g class=\"route-image\" data-label=\"{}\" data-S=\"{:.4f}\" data-D=\"{:.4f}\" data-T=\"{:.4f}\" "
        "data-C=\"{:.4f}\" data-area=\"{:.6f}\">\n",
        xml_escape(labels[k]), img.source.S, img.source.D, img.source.T, img.source.C, img.area);
    out += fmt::format("  <path class=\"outline\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{}/>\n",
                       smooth_closed_path(img.control_points), stroke.color, dash);
    const auto c = to_px({0.0, 0.0});
    for (std::size_t i = 0; i < 4; ++i) {
      const auto tip = to_px(img.control_points[i]);
      out += fmt::format(
          "  <line class=\"spoke\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"{}\" "
          "stroke-width=\"1.5\"{}/>\n",
          c.x, c.y, tip.x, tip.y, stroke.color, dash);
    }
    if (img.t_clamped) {
      const auto tip = to_px(img.control_points[2]);
      out += fmt::format("  <text class=\"clamp-note\" x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"sans-serif\" "
                         "font-size=\"10\" fill=\"{}\">T={:.4f} shown as 1</text>\n",
                         tip.x + 6.0, tip.y - 4.0, stroke.color, img.source.T);
    }
    out += "</g>\n";
    const double legend_y = kCanvas + 24.0 * static_cast<double>(k) + 4.0;
    out += fmt::format("<line class=\"legend\" x1=\"12\" y1=\"{0:.3f}\" x2=\"48\" y2=\"{0:.3f}\" stroke=\"{1}\" "
                       "stroke-width=\"2\"{2}/>\n",
                       legend_y, stroke.color, dash);
    out += fmt::format("<text class=\"legend\" x=\"56\" y=\"{:.3f}\" font-family=\"sans-serif\" font-size=\"12\">"
                       "{} (quality {:.4f}, area {:.4f})</text>\n",
                       legend_y + 4.0, xml_escape(labels[k]), img.source.quality, img.area);
  }
  const auto c = to_px({0.0, 0.0});
  out += fmt::format("<circle class=\"center\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"#000000\"/>\n", c.x, c.y);
  out += "</svg>\n";
  return out;
}

}  // namespace routeval
