#include "fence/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fence {

namespace {

// Character canvas on the doubled grid: line y sits on row 2(y-1),
// band t on column 2t. Odd rows and columns carry the connecting runs.
struct Canvas {
  int rows = 0;
  int cols = 0;
  std::vector<std::string> cells;

  Canvas(int r, int c) : rows(r), cols(c), cells(r, std::string(c, ' ')) {}

  void put(int row, int col, char ch) {
    if (row >= 0 && row < rows && col >= 0 && col < cols) {
      cells[row][col] = ch;
    }
  }

  std::string str() const {
    std::ostringstream out;
    for (const std::string& row : cells) {
      std::string trimmed = row;
      while (!trimmed.empty() && trimmed.back() == ' ') {
        trimmed.pop_back();
      }
      out << trimmed << "\n";
    }
    return out.str();
  }
};

char corner_char(CornerShape shape, bool cusped) {
  if (!cusped) {
    return '+';
  }
  switch (shape) {
    case CornerShape::LT:
      return '<';
    case CornerShape::RB:
      return '>';
    default:
      return '+';
  }
}

}  // namespace

std::string render_ascii(const FenceDiagram& f) {
  int m = static_cast<int>(f.word.size());
  Canvas canvas(2 * f.strands - 1, 2 * m + 3);
  for (int line = 1; line <= f.strands; ++line) {
    int row = 2 * (line - 1);
    for (int col = 0; col < canvas.cols; ++col) {
      canvas.put(row, col, '-');
    }
  }
  for (int p = 1; p <= m; ++p) {
    const Band& band = f.word[p - 1];
    int col = 2 * p;
    for (int line = band.top; line <= band.bottom; ++line) {
      int row = 2 * (line - 1);
      if (line == band.top || line == band.bottom) {
        canvas.put(row, col, '+');
      } else {
        canvas.put(row, col, '|');  // vertical passes over
      }
      if (line < band.bottom) {
        canvas.put(row + 1, col, '|');
      }
    }
  }
  return canvas.str();
}

std::string render_ascii_reduced(const ReducedDiagram& r, bool cusped) {
  RenderPlan plan = cusped_render_data(r);
  if (plan.horizontal_runs.empty() && plan.verticals.empty()) {
    return "";
  }
  Canvas canvas(2 * plan.height - 1, 2 * plan.width + 1);
  for (const RenderPlan::Run& run : plan.horizontal_runs) {
    int row = 2 * (run.y - 1);
    for (int col = 2 * run.x_min; col <= 2 * run.x_max; ++col) {
      canvas.put(row, col, '-');
    }
  }
  for (const VerticalSegment& v : plan.verticals) {
    int col = 2 * v.x;
    for (int row = 2 * (v.y_min - 1); row <= 2 * (v.y_max - 1); ++row) {
      canvas.put(row, col, '|');
    }
  }
  for (const GridPoint& tv : plan.trivalent_vertices) {
    canvas.put(2 * (tv.y - 1), 2 * tv.x, '+');
  }
  for (const Corner& corner : plan.corners) {
    canvas.put(2 * (corner.at.y - 1), 2 * corner.at.x, corner_char(corner.shape, cusped));
  }
  return canvas.str();
}

namespace {

void svg_open(std::ostringstream& out, int width, int height) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "stroke-linecap=\"round\">\n";
}

void svg_close(std::ostringstream& out) {
  out << "</g>\n";
  out << "</svg>\n";
}

void svg_hline(std::ostringstream& out, int y, int x1, int x2) {
  if (x1 >= x2) {
    return;
  }
  out << "<path d=\"M " << x1 << " " << y << " L " << x2 << " " << y << "\"/>\n";
}

void svg_vline(std::ostringstream& out, int x, int y1, int y2) {
  out << "<path d=\"M " << x << " " << y1 << " L " << x << " " << y2 << "\"/>\n";
}

}  // namespace

std::string render_svg(const FenceDiagram& f) {
  // Lines at y = 10k, bands at x = 10t; horizontal strands break under
  // every band passing over them.
  int m = static_cast<int>(f.word.size());
  std::ostringstream out;
  svg_open(out, 10 * (m + 1) + 10, 10 * f.strands + 10);
  for (int line = 1; line <= f.strands; ++line) {
    int y = 10 * line;
    std::vector<int> cuts;
    for (int p = 1; p <= m; ++p) {
      const Band& band = f.word[p - 1];
      if (band.top < line && line < band.bottom) {
        cuts.push_back(10 * p);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    int start = 0;
    for (int cut : cuts) {
      svg_hline(out, y, start, cut - 3);
      start = cut + 3;
    }
    svg_hline(out, y, start, 10 * (m + 1));
  }
  for (int p = 1; p <= m; ++p) {
    const Band& band = f.word[p - 1];
    svg_vline(out, 10 * p, 10 * band.top, 10 * band.bottom);
  }
  svg_close(out);
  return out.str();
}

std::string render_svg_reduced(const ReducedDiagram& r, bool cusped) {
  RenderPlan plan = cusped_render_data(r);
  std::ostringstream out;
  svg_open(out, 10 * plan.width + 10, 10 * plan.height + 10);

  // In cusped mode the segments stop short of LT/RB corners and a small
  // arc bridges the gap.
  for (const RenderPlan::Run& run : plan.horizontal_runs) {
    int y = 10 * run.y;
    int x1 = 10 * run.x_min;
    int x2 = 10 * run.x_max;
    bool cut_left = false;
    bool cut_right = false;
    if (cusped) {
      for (const Corner& corner : plan.corners) {
        if (corner.at.y != run.y) {
          continue;
        }
        if ((corner.shape == CornerShape::LT || corner.shape == CornerShape::RB)) {
          if (corner.at.x == run.x_min) {
            cut_left = true;
          }
          if (corner.at.x == run.x_max) {
            cut_right = true;
          }
        }
      }
    }
    svg_hline(out, y, x1 + (cut_left ? 4 : 0), x2 - (cut_right ? 4 : 0));
  }
  for (const VerticalSegment& v : plan.verticals) {
    int x = 10 * v.x;
    int y1 = 10 * v.y_min;
    int y2 = 10 * v.y_max;
    if (cusped) {
      for (const Corner& corner : plan.corners) {
        if (corner.at.x != v.x ||
            (corner.shape != CornerShape::LT && corner.shape != CornerShape::RB)) {
          continue;
        }
        if (corner.at.y == v.y_min) {
          y1 += 4;
        }
        if (corner.at.y == v.y_max) {
          y2 -= 4;
        }
      }
    }
    svg_vline(out, x, y1, y2);
  }
  if (cusped) {
    for (const Corner& corner : plan.corners) {
      int x = 10 * corner.at.x;
      int y = 10 * corner.at.y;
      if (corner.shape == CornerShape::LT) {
        // Line leaves east, band leaves south; the arc points the cusp
        // to the upper left.
        out << "<path d=\"M " << x + 4 << " " << y << " Q " << x - 3 << " " << y - 3
            << " " << x << " " << y + 4 << "\"/>\n";
      } else if (corner.shape == CornerShape::RB) {
        out << "<path d=\"M " << x - 4 << " " << y << " Q " << x + 3 << " " << y + 3
            << " " << x << " " << y - 4 << "\"/>\n";
      }
    }
  }
  svg_close(out);
  return out.str();
}

}  // namespace fence
