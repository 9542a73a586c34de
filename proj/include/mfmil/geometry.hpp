#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace mfmil {

// Axis-aligned box in normalized image coordinates (fractions of image
// width/height). Valid boxes satisfy 0 <= x0 < x1 <= 1 and likewise in y.
struct Window {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool valid() const {
    return x0 < x1 && y0 < y1 && x0 >= 0.0 && y0 >= 0.0 && x1 <= 1.0 && y1 <= 1.0;
  }
  // Non-strict: boundary-touching counts as contained.
  bool contains(const Window& other) const {
    return other.x0 >= x0 && other.y0 >= y0 && other.x1 <= x1 && other.y1 <= y1;
  }
  bool contains_point(double x, double y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }

  bool operator==(const Window& o) const {
    return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
  }
  bool operator<(const Window& o) const {
    return std::array<double, 4>{x0, y0, x1, y1} < std::array<double, 4>{o.x0, o.y0, o.x1, o.y1};
  }
};

// Five-way localization error taxonomy, tested in this priority order.
enum class ErrorMode {
  CorrectLoc = 0,     // max IoU with a ground-truth box >= 0.5
  HypInGt = 1,        // hypothesis contained in some ground truth
  GtInHyp = 2,        // some ground truth contained in hypothesis
  PartialOverlap = 3, // nonzero overlap, none of the above
  NoOverlap = 4,
};
inline constexpr std::size_t kErrorModeCount = 5;
const char* to_string(ErrorMode m);

// Intersection-over-union. Symmetric, in [0,1], 0 for disjoint boxes.
double iou(const Window& a, const Window& b);

// Keeps windows at least `margin` away from every image border; order
// preserved. margin must be in [0, 0.5).
std::vector<Window> margin_filter(const std::vector<Window>& windows, double margin);

// The near-full-image box used to initialize MIL training.
Window initial_window(double margin);

// Horizontal mirror. Involution; preserves area and y-extent.
Window flip_h(const Window& w);

// Classifies a hypothesis against a non-empty set of ground-truth boxes.
ErrorMode classify_error(const Window& hyp, const std::vector<Window>& gts);

}  // namespace mfmil
