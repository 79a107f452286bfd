#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fence/core.hpp"

namespace fence {

// Corner shapes of a rectilinear diagram, named by the quadrant the two
// incident segments span. LT and RB corners are exactly the cusps of
// the cusped fence diagram.
enum class CornerShape { LT, RT, RB, LB };

struct GridPoint {
  int x = 0;  // word position of the incident band
  int y = 0;  // line index
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct HorizontalSegment {
  int y = 0;
  int x_min = 0;
  int x_max = 0;
  friend bool operator==(const HorizontalSegment&, const HorizontalSegment&) = default;
};

struct VerticalSegment {
  int x = 0;
  int y_min = 0;
  int y_max = 0;
  friend bool operator==(const VerticalSegment&, const VerticalSegment&) = default;
};

struct Corner {
  GridPoint at;
  CornerShape shape = CornerShape::LT;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Crossing {
  GridPoint at;        // x = band position, y = crossed line
  int band_index = 0;  // 1-based position of the vertical segment
  int line_index = 0;  // crossed line, 1-based
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Result of fully reducing a fence diagram: the reduced fence word plus
// its rectilinear geometry with lines truncated to their extreme
// attachments. Verticals always pass over horizontals.
struct ReducedDiagram {
  FenceDiagram diagram;
  std::vector<HorizontalSegment> lines;
  std::vector<VerticalSegment> bands;
  std::vector<Corner> corners;
  std::vector<Crossing> crossings;
  std::vector<GridPoint> trivalent_vertices;
  int component_count = 0;

  bool empty_curve() const { return bands.empty(); }
};

struct LegendrianInvariants {
  int tb = 0;
  int rot = 0;  // for the canonical orientation
  int rot_abs = 0;
  int positive_crossings = 0;
  int negative_crossings = 0;
  int right_cusps = 0;
  int down_cusps = 0;
  int up_cusps = 0;
};

// One closed axis-parallel curve given as a cyclic list of traversed
// segments; horizontal heights and vertical abscissae are pairwise
// distinct, so every crossing is a vertical passing over a horizontal.
struct FrontSegment {
  bool horizontal = true;
  int fixed = 0;  // y for horizontal, x for vertical
  int from = 0;   // start coordinate along the segment, as traversed
  int to = 0;
  friend bool operator==(const FrontSegment&, const FrontSegment&) = default;
};

struct RectilinearFront {
  std::vector<FrontSegment> segments;
};

class InvalidFrontError : public std::runtime_error {
 public:
  explicit InvalidFrontError(const std::string& what) : std::runtime_error(what) {}
};

// Applies deflations (smallest line first) and retractions of
// single-attachment lines until none remains, then truncates each
// surviving line to the span of its extreme attachments and classifies
// corners, crossings and trivalent vertices. Requires connectedness.
ReducedDiagram reduce(const FenceDiagram& f);

enum class CurveOrientation { Canonical, Reversed };

// Orients the reduced closed curve (canonical: topmost line eastward)
// and reads off tb = p - n - r_c and rot = (d_c - u_c)/2.
LegendrianInvariants legendrian_invariants(
    const FenceDiagram& f, CurveOrientation orientation = CurveOrientation::Canonical);

// One line per horizontal segment (top to bottom), one band per
// vertical segment (left to right).
FenceDiagram fence_from_front(const RectilinearFront& front);

// The reduced closed curve as a traversal, for round-tripping through
// fence_from_front. Requires a knot-shaped reduction (no trivalent
// vertices, one component).
RectilinearFront front_from_reduced(const ReducedDiagram& r);

// Drawing primitives for the cli renderer: horizontal runs are split at
// crossings so the vertical strand shows on top.
struct RenderPlan {
  struct Run {
    int y = 0;
    int x_min = 0;
    int x_max = 0;
  };
  std::vector<Run> horizontal_runs;
  std::vector<VerticalSegment> verticals;
  std::vector<Corner> corners;   // cusp marks are LT/RB entries
  std::vector<GridPoint> trivalent_vertices;
  int width = 0;   // max x
  int height = 0;  // max y
};

RenderPlan cusped_render_data(const ReducedDiagram& r);

std::string to_string(CornerShape shape);

}  // namespace fence
