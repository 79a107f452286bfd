#pragma once

#include <string>

#include "fence/core.hpp"
#include "fence/legendrian.hpp"

namespace fence {

// Full-width drawing of a fence diagram: every line spans the whole
// word, bands are vertical and pass over the lines between their ends.
std::string render_ascii(const FenceDiagram& f);
std::string render_svg(const FenceDiagram& f);

// Reduced diagram with truncated lines. In cusped mode the LT and RB
// corners are drawn as cusp marks.
std::string render_ascii_reduced(const ReducedDiagram& r, bool cusped);
std::string render_svg_reduced(const ReducedDiagram& r, bool cusped);

}  // namespace fence
