#include "mfmil/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfmil {

const char* to_string(ErrorMode m) {
  switch (m) {
    case ErrorMode::CorrectLoc: return "correct_loc";
    case ErrorMode::HypInGt: return "hyp_in_gt";
    case ErrorMode::GtInHyp: return "gt_in_hyp";
    case ErrorMode::PartialOverlap: return "partial_overlap";
    case ErrorMode::NoOverlap: return "no_overlap";
  }
  return "unknown";
}

double iou(const Window& a, const Window& b) {
  double iw = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  double ih = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  double inter = iw * ih;
  double uni = a.area() + b.area() - inter;
  return inter / uni;
}

std::vector<Window> margin_filter(const std::vector<Window>& windows, double margin) {
  if (margin < 0.0 || margin >= 0.5) throw std::invalid_argument("margin must be in [0, 0.5)");
  std::vector<Window> kept;
  kept.reserve(windows.size());
  for (const Window& w : windows) {
    if (w.x0 >= margin && w.y0 >= margin && w.x1 <= 1.0 - margin && w.y1 <= 1.0 - margin) {
      kept.push_back(w);
    }
  }
  return kept;
}

Window initial_window(double margin) {
  if (margin < 0.0 || margin >= 0.5) throw std::invalid_argument("margin must be in [0, 0.5)");
  return Window{margin, margin, 1.0 - margin, 1.0 - margin};
}

Window flip_h(const Window& w) { return Window{1.0 - w.x1, w.y0, 1.0 - w.x0, w.y1}; }

ErrorMode classify_error(const Window& hyp, const std::vector<Window>& gts) {
  if (gts.empty()) throw std::invalid_argument("classify_error: empty ground-truth set");
  double best = 0.0;
  bool hyp_in_gt = false;
  bool gt_in_hyp = false;
  for (const Window& gt : gts) {
    best = std::max(best, iou(hyp, gt));
    hyp_in_gt = hyp_in_gt || gt.contains(hyp);
    gt_in_hyp = gt_in_hyp || hyp.contains(gt);
  }
  if (best >= 0.5) return ErrorMode::CorrectLoc;
  if (hyp_in_gt) return ErrorMode::HypInGt;
  if (gt_in_hyp) return ErrorMode::GtInHyp;
  if (best > 0.0) return ErrorMode::PartialOverlap;
  return ErrorMode::NoOverlap;
}

}  // namespace mfmil
