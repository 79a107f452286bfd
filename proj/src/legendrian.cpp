#include "fence/legendrian.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>

#include "fence/moves.hpp"

namespace fence {

namespace {

// Removes a single-attachment line together with its band: the line is
// a disk hanging off one band, a boundary-parallel finger that
// retracts. Indices above the removed line shift down.
FenceDiagram remove_leaf(const FenceDiagram& f, int line, int band_pos) {
  FenceDiagram out;
  out.strands = f.strands - 1;
  for (int p = 1; p <= static_cast<int>(f.word.size()); ++p) {
    if (p == band_pos) {
      continue;
    }
    Band band = f.word[p - 1];
    out.word.push_back({band.top > line ? band.top - 1 : band.top,
                        band.bottom > line ? band.bottom - 1 : band.bottom});
  }
  return out;
}

struct LineEnds {
  std::vector<std::vector<int>> positions;  // per line, ascending
};

LineEnds line_ends(const FenceDiagram& f) {
  LineEnds e;
  e.positions.assign(f.strands + 1, {});
  for (int p = 1; p <= static_cast<int>(f.word.size()); ++p) {
    e.positions[f.word[p - 1].top].push_back(p);
    e.positions[f.word[p - 1].bottom].push_back(p);
  }
  return e;
}

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

CornerShape classify_corner(bool line_extends_east, bool band_extends_south) {
  if (line_extends_east) {
    return band_extends_south ? CornerShape::LT : CornerShape::LB;
  }
  return band_extends_south ? CornerShape::RT : CornerShape::RB;
}

}  // namespace

ReducedDiagram reduce(const FenceDiagram& f) {
  if (!surface_summary(f).connected) {
    throw NotConnectedError();
  }

  FenceDiagram g = f;
  for (;;) {
    bool changed = false;
    for (int k = 1; k < g.strands; ++k) {
      MoveResult d = deflate(g, k);
      if (d.ok) {
        g = d.diagram;
        changed = true;
        break;
      }
    }
    if (changed) {
      continue;
    }
    LineEnds ends = line_ends(g);
    for (int line = 1; line <= g.strands && !changed; ++line) {
      if (ends.positions[line].size() == 1) {
        g = remove_leaf(g, line, ends.positions[line][0]);
        changed = true;
      }
    }
    if (!changed) {
      break;
    }
  }

  ReducedDiagram r;
  r.diagram = g;
  LineEnds ends = line_ends(g);
  int m = static_cast<int>(g.word.size());

  std::vector<int> x_min(g.strands + 1, 0);
  std::vector<int> x_max(g.strands + 1, 0);
  for (int line = 1; line <= g.strands; ++line) {
    const std::vector<int>& at = ends.positions[line];
    if (at.empty()) {
      continue;  // only the bare disk (b = 1, empty word)
    }
    x_min[line] = at.front();
    x_max[line] = at.back();
    r.lines.push_back({line, at.front(), at.back()});
    for (std::size_t i = 0; i < at.size(); ++i) {
      int p = at[i];
      const Band& band = g.word[p - 1];
      bool band_south = band.top == line;
      if (i == 0 && at.size() >= 2) {
        r.corners.push_back({{p, line}, classify_corner(true, band_south)});
      } else if (i + 1 == at.size() && at.size() >= 2) {
        r.corners.push_back({{p, line}, classify_corner(false, band_south)});
      } else if (at.size() >= 2) {
        r.trivalent_vertices.push_back({p, line});
      }
    }
  }

  for (int p = 1; p <= m; ++p) {
    const Band& band = g.word[p - 1];
    r.bands.push_back({p, band.top, band.bottom});
    for (int line = band.top + 1; line < band.bottom; ++line) {
      if (!ends.positions[line].empty() && x_min[line] < p && p < x_max[line]) {
        r.crossings.push_back({{p, line}, p, line});
      }
    }
  }

  // Components of the union of line and band segments.
  int n_nodes = g.strands + m;
  std::vector<int> parent(n_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  int components = 0;
  std::vector<char> present(n_nodes, 0);
  for (int line = 1; line <= g.strands; ++line) {
    if (!ends.positions[line].empty()) {
      present[line - 1] = 1;
    }
  }
  for (int p = 1; p <= m; ++p) {
    present[g.strands + p - 1] = 1;
    const Band& band = g.word[p - 1];
    int a = uf_find(parent, band.top - 1);
    int c = uf_find(parent, g.strands + p - 1);
    if (a != c) {
      parent[a] = c;
    }
    a = uf_find(parent, band.bottom - 1);
    c = uf_find(parent, g.strands + p - 1);
    if (a != c) {
      parent[a] = c;
    }
  }
  std::vector<char> counted(n_nodes, 0);
  for (int i = 0; i < n_nodes; ++i) {
    if (!present[i]) {
      continue;
    }
    int root = uf_find(parent, i);
    if (!counted[root]) {
      counted[root] = 1;
      ++components;
    }
  }
  r.component_count = components;
  return r;
}

namespace {

struct Traversal {
  // Direction of each traversed segment: lines +1 east / -1 west,
  // bands +1 south / -1 north. Indexed by line number / band position.
  std::vector<int> line_dir;
  std::vector<int> band_dir;
};

// Walks the single closed curve of an annulus reduction starting on the
// topmost line heading east.
Traversal walk_curve(const ReducedDiagram& r) {
  const FenceDiagram& g = r.diagram;
  int m = static_cast<int>(g.word.size());
  Traversal t;
  t.line_dir.assign(g.strands + 1, 0);
  t.band_dir.assign(m + 1, 0);

  std::vector<std::array<int, 2>> ends(g.strands + 1, {0, 0});
  for (const HorizontalSegment& h : r.lines) {
    ends[h.y] = {h.x_min, h.x_max};
  }

  int start_line = r.lines.front().y;
  for (const HorizontalSegment& h : r.lines) {
    start_line = std::min(start_line, h.y);
  }

  int line = start_line;
  int dir_east = 1;
  for (;;) {
    t.line_dir[line] = dir_east;
    int exit_x = dir_east > 0 ? ends[line][1] : ends[line][0];
    const Band& band = g.word[exit_x - 1];
    bool south = band.top == line;
    t.band_dir[exit_x] = south ? 1 : -1;
    int next_line = south ? band.bottom : band.top;
    int entry_x = exit_x;
    // Leave the next line through its other end.
    dir_east = (entry_x == ends[next_line][0]) ? 1 : -1;
    line = next_line;
    if (line == start_line && dir_east == 1) {
      break;
    }
  }
  return t;
}

}  // namespace

LegendrianInvariants legendrian_invariants(const FenceDiagram& f,
                                           CurveOrientation orientation) {
  if (!is_quasipositive_annulus(f)) {
    throw NotAnnulusError();
  }
  ReducedDiagram r = reduce(f);
  Traversal t = walk_curve(r);

  LegendrianInvariants inv;
  for (const Corner& corner : r.corners) {
    if (corner.shape == CornerShape::RB) {
      ++inv.right_cusps;
    }
    if (corner.shape == CornerShape::LT || corner.shape == CornerShape::RB) {
      if (t.band_dir[corner.at.x] > 0) {
        ++inv.down_cusps;
      } else {
        ++inv.up_cusps;
      }
    }
  }
  for (const Crossing& crossing : r.crossings) {
    // Over strand is the vertical. Sign convention (x east, y up):
    // cross(over, under) > 0 is positive; pinned by tb = -lk on the
    // oracle corpus.
    int over_south = t.band_dir[crossing.band_index];
    int under_east = t.line_dir[crossing.line_index];
    int sign = over_south * under_east;
    if (sign > 0) {
      ++inv.positive_crossings;
    } else {
      ++inv.negative_crossings;
    }
  }
  if (orientation == CurveOrientation::Reversed) {
    std::swap(inv.down_cusps, inv.up_cusps);
  }
  inv.tb = inv.positive_crossings - inv.negative_crossings - inv.right_cusps;
  inv.rot = (inv.down_cusps - inv.up_cusps) / 2;
  inv.rot_abs = std::abs(inv.rot);
  return inv;
}

FenceDiagram fence_from_front(const RectilinearFront& front) {
  const auto& segments = front.segments;
  if (segments.empty() || segments.size() % 2 != 0) {
    throw InvalidFrontError("front must alternate horizontal and vertical segments");
  }
  std::map<int, int> heights;    // y -> line index
  std::map<int, int> abscissae;  // x -> band position
  for (const FrontSegment& seg : segments) {
    if (seg.from == seg.to) {
      throw InvalidFrontError("zero-length segment");
    }
    if (seg.horizontal) {
      if (!heights.emplace(seg.fixed, 0).second) {
        throw InvalidFrontError("two horizontal segments share height " +
                                std::to_string(seg.fixed));
      }
    } else {
      if (!abscissae.emplace(seg.fixed, 0).second) {
        throw InvalidFrontError("two vertical segments share abscissa " +
                                std::to_string(seg.fixed));
      }
    }
  }
  int line = 1;
  for (auto& [y, index] : heights) {
    index = line++;
  }
  int pos = 1;
  for (auto& [x, index] : abscissae) {
    index = pos++;
  }

  auto endpoint = [](const FrontSegment& seg, bool start) {
    int along = start ? seg.from : seg.to;
    return seg.horizontal ? std::pair<int, int>{along, seg.fixed}
                          : std::pair<int, int>{seg.fixed, along};
  };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const FrontSegment& a = segments[i];
    const FrontSegment& b = segments[(i + 1) % segments.size()];
    if (a.horizontal == b.horizontal) {
      throw InvalidFrontError("segments must alternate between horizontal and vertical");
    }
    if (endpoint(a, false) != endpoint(b, true)) {
      throw InvalidFrontError("curve is not closed at segment " + std::to_string(i + 1));
    }
  }

  FenceDiagram f;
  f.strands = static_cast<int>(heights.size());
  f.word.resize(abscissae.size());
  for (const FrontSegment& seg : segments) {
    if (seg.horizontal) {
      continue;
    }
    int y1 = std::min(seg.from, seg.to);
    int y2 = std::max(seg.from, seg.to);
    auto top = heights.find(y1);
    auto bottom = heights.find(y2);
    if (top == heights.end() || bottom == heights.end()) {
      throw InvalidFrontError("vertical endpoint off any horizontal");
    }
    f.word[abscissae[seg.fixed] - 1] = {top->second, bottom->second};
  }
  require_valid(f);
  return f;
}

RectilinearFront front_from_reduced(const ReducedDiagram& r) {
  if (!r.trivalent_vertices.empty() || r.component_count != 1 || r.bands.empty()) {
    throw InvalidFrontError("reduction is not a single closed curve");
  }
  const FenceDiagram& g = r.diagram;
  std::vector<std::array<int, 2>> ends(g.strands + 1, {0, 0});
  for (const HorizontalSegment& h : r.lines) {
    ends[h.y] = {h.x_min, h.x_max};
  }

  RectilinearFront front;
  int start_line = r.lines.front().y;
  int line = start_line;
  int dir_east = 1;
  for (;;) {
    int from_x = dir_east > 0 ? ends[line][0] : ends[line][1];
    int to_x = dir_east > 0 ? ends[line][1] : ends[line][0];
    front.segments.push_back({true, line, from_x, to_x});
    const Band& band = g.word[to_x - 1];
    bool south = band.top == line;
    int next_line = south ? band.bottom : band.top;
    front.segments.push_back({false, to_x, line, next_line});
    dir_east = (to_x == ends[next_line][0]) ? 1 : -1;
    line = next_line;
    if (line == start_line && dir_east == 1) {
      break;
    }
  }
  return front;
}

RenderPlan cusped_render_data(const ReducedDiagram& r) {
  RenderPlan plan;
  plan.verticals = r.bands;
  plan.corners = r.corners;
  plan.trivalent_vertices = r.trivalent_vertices;
  for (const HorizontalSegment& h : r.lines) {
    std::vector<int> cuts;
    for (const Crossing& c : r.crossings) {
      if (c.line_index == h.y) {
        cuts.push_back(c.at.x);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    int start = h.x_min;
    for (int cut : cuts) {
      plan.horizontal_runs.push_back({h.y, start, cut});
      start = cut;
    }
    plan.horizontal_runs.push_back({h.y, start, h.x_max});
    plan.height = std::max(plan.height, h.y);
    plan.width = std::max(plan.width, h.x_max);
  }
  for (const VerticalSegment& v : r.bands) {
    plan.height = std::max(plan.height, v.y_max);
    plan.width = std::max(plan.width, v.x);
  }
  return plan;
}

std::string to_string(CornerShape shape) {
  switch (shape) {
    case CornerShape::LT:
      return "LT";
    case CornerShape::RT:
      return "RT";
    case CornerShape::RB:
      return "RB";
    case CornerShape::LB:
    default:
      return "LB";
  }
}

}  // namespace fence
