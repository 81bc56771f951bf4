#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "routeval/coefficients.hpp"
#include "routeval/geo.hpp"

namespace routeval {

enum class Trend { improving, stable, deteriorating, mixed };

std::string_view to_string(Trend t);

struct SeriesEntry {
  std::size_t index = 0;  // waypoint index or measurement number
  CoefficientVector vector;
};

/// Time-ordered coefficient history of a voyage.
class DevelopmentSeries {
 public:
  DevelopmentSeries() = default;
  explicit DevelopmentSeries(std::vector<SeriesEntry> entries);

  /// Appends an entry; its index must exceed the last one.
  void push(SeriesEntry entry);

  std::span<const SeriesEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<SeriesEntry> entries_;
};

struct TrendReport {
  Trend trend = Trend::stable;
  double net_quality_change = 0.0;
  CoefficientVector net_change;  // last minus first, per coefficient (quality included)
  std::size_t declining_steps = 0;
  std::size_t steps = 0;
};

/// Classifies quality over the series:
///   stable        |last - first| <= epsilon
///   improving     every step rises by at least -epsilon
///   deteriorating net decline and a decline on at least half of the steps
///   mixed         anything else
/// Throws std::invalid_argument for fewer than two entries.
TrendReport analyze_trend(const DevelopmentSeries& series, double epsilon = 0.02);
Trend classify(const DevelopmentSeries& series, double epsilon = 0.02);

/// CSV with header `waypoint,S,D,T,C,quality`.
std::string to_csv(const DevelopmentSeries& series);

/// Radial four-spoke image of a coefficient vector: S up, D right, T down,
/// C left, unit radius per coefficient value. T is clamped to 1 for display.
struct CognitiveImage {
  CoefficientVector source;
  std::array<double, 4> spoke_lengths{};      // S, D, T (clamped), C
  std::array<geo::Vec2, 4> control_points{};  // spoke endpoints, same order
  bool t_clamped = false;
  double area = 0.0;  // shoelace area of the control-point quadrilateral

  static constexpr std::array<double, 4> kSpokeAnglesDeg{90.0, 0.0, 270.0, 180.0};
  static constexpr std::size_t kVertexCount = 5;  // four coefficient vertices plus the center
};

CognitiveImage render_image(const CoefficientVector& v);

double shoelace_area(std::span<const geo::Vec2> polygon);

/// Overlaid images as an SVG 1.1 document. Each image gets its own stroke
/// style. Output is byte-identical for identical input. Throws
/// std::invalid_argument for an empty list or a label count mismatch.
std::string render_svg(std::span<const CognitiveImage> images, std::span<const std::string> labels);

}  // namespace routeval
