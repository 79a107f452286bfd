#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fence/core.hpp"

namespace fence {

enum class MoveKind { Slip, Slide, Inflate, Deflate, Twirl, Turn };

// The three band words presenting the same pair of bands on lines
// r < s < t. All three are equal in the braid group:
//   F1 = (r,s)(s,t),  F2 = (s,t)(r,t),  F3 = (r,t)(r,s).
enum class SlideForm { F1, F2, F3 };

enum class TwirlEnd { Front, Back };

enum class MoveError { None, NotApplicable, BadTarget, BadSplit };

// Kind plus location parameters. Unused fields are ignored:
//   Slip    at
//   Slide   at, target
//   Inflate line, at (new trivial band goes after word position `at`),
//           split (one flag per band end of `line` in word order,
//           true = reattach to the new lower line)
//   Deflate line
//   Twirl   end
//   Turn    -
struct MoveInstance {
  MoveKind kind = MoveKind::Turn;
  int at = 0;
  int line = 0;
  SlideForm target = SlideForm::F1;
  TwirlEnd end = TwirlEnd::Front;
  std::vector<std::uint8_t> split;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

struct MoveResult {
  bool ok = false;
  FenceDiagram diagram;
  MoveError error = MoveError::None;
  MoveInstance inverse;  // valid when ok
};

// Swaps adjacent bands whose index intervals are disjoint or strictly
// nested. Self-inverse.
MoveResult slip(const FenceDiagram& f, int t);

// Rewrites the adjacent pair at (t, t+1) from its current slide form to
// the requested one, preserving the index triple {r, s, t}.
MoveResult slide(const FenceDiagram& f, int t, SlideForm target);

// Splits line k into lines k and k+1 joined by a new trivial band
// inserted after word position t. Each former band end of line k goes
// to the upper or lower successor per `lower_flags` (word order). Only
// splits that read cyclically, starting just right of the new band, as
// lower* upper* are isotopies; others are rejected with BadSplit.
MoveResult inflate(const FenceDiagram& f, int k, int t,
                   const std::vector<std::uint8_t>& lower_flags);

// Inverse of inflate: removes the unique band (k, k+1) and merges line
// k+1 into line k, keeping horizontal positions. NotApplicable when the
// trivial band is absent or doubled, or when the merged attachment
// pattern is not an inflation image (the cusp-pair guard).
MoveResult deflate(const FenceDiagram& f, int k);

// Cyclic shift of the word: Front sends the first band to the last
// position, Back the last band to the first. Mutually inverse.
MoveResult twirl(const FenceDiagram& f, TwirlEnd end);

// Rotation of the diagram by pi in the page plane: word reversed and
// each band (i, j) replaced by (b+1-j, b+1-i). Involution.
MoveResult turn(const FenceDiagram& f);

MoveResult apply_move(const FenceDiagram& f, const MoveInstance& move);

// The finite list of primitive moves applicable to f, with inflation
// positions restricted to the neighborhood of existing attachments to
// keep search frontiers bounded. Every listed instance applies.
std::vector<MoveInstance> applicable_moves(const FenceDiagram& f);

struct MacroResult {
  bool ok = false;
  FenceDiagram diagram;
  MoveError error = MoveError::None;
  std::vector<MoveInstance> trace;  // replays from the input diagram
};

// Inflation followed by a slide, hooked to the band at word position t
// attached to line k; reroutes that band across a new trivial band.
MacroResult macro_new_zigzag(const FenceDiagram& f, int k, int t);

// Exchanges lines k and k+1 (no band may join them directly). The
// composite is synthesized from slips, slides, inflations and
// deflations by bounded search; the trace is returned.
MacroResult macro_height_exchange(const FenceDiagram& f, int k);

// A single slip on commuting bands.
MacroResult macro_vertical_exchange(const FenceDiagram& f, int t);

std::string to_string(const MoveInstance& move);
std::string to_string(MoveKind kind);
std::string to_string(SlideForm form);

}  // namespace fence
