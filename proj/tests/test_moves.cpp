#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fence/core.hpp"
#include "fence/moves.hpp"
#include "fence/oracles.hpp"

using namespace fence;

namespace {

FenceDiagram make(int strands, std::vector<Band> word) {
  FenceDiagram f;
  f.strands = strands;
  f.word = std::move(word);
  return f;
}

FenceDiagram random_diagram(std::mt19937& rng, int max_strands, int max_bands) {
  std::uniform_int_distribution<int> strand_dist(2, max_strands);
  int b = strand_dist(rng);
  std::uniform_int_distribution<int> band_count(1, max_bands);
  int m = band_count(rng);
  FenceDiagram f;
  f.strands = b;
  std::uniform_int_distribution<int> line(1, b);
  for (int i = 0; i < m; ++i) {
    int x = line(rng);
    int y = line(rng);
    while (x == y) {
      y = line(rng);
    }
    f.word.push_back({std::min(x, y), std::max(x, y)});
  }
  return f;
}

}  // namespace

TEST_CASE("slip on disjoint and nested pairs") {
  MoveResult r = slip(make(4, {{1, 2}, {3, 4}}), 1);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(4, {{3, 4}, {1, 2}}));

  r = slip(make(4, {{1, 4}, {2, 3}}), 1);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(4, {{2, 3}, {1, 4}}));

  r = slip(make(3, {{1, 2}, {2, 3}}), 1);
  CHECK(!r.ok);
  CHECK(r.error == MoveError::NotApplicable);

  // Interleaved intervals do not commute.
  r = slip(make(4, {{1, 3}, {2, 4}}), 1);
  CHECK(!r.ok);
}

TEST_CASE("slide rewrites within the three-form family") {
  // (r,s)(s,t) = (s,t)(r,t) = (r,t)(r,s) for r < s < t; all three words
  // are the same braid group element, so the closure is untouched.
  FenceDiagram f1 = make(3, {{1, 2}, {2, 3}});
  MoveResult to_f2 = slide(f1, 1, SlideForm::F2);
  REQUIRE(to_f2.ok);
  CHECK(to_f2.diagram == make(3, {{2, 3}, {1, 3}}));

  MoveResult to_f3 = slide(f1, 1, SlideForm::F3);
  REQUIRE(to_f3.ok);
  CHECK(to_f3.diagram == make(3, {{1, 3}, {1, 2}}));

  MoveResult back = slide(to_f2.diagram, 1, SlideForm::F1);
  REQUIRE(back.ok);
  CHECK(back.diagram == f1);

  CHECK(slide(f1, 1, SlideForm::F1).error == MoveError::BadTarget);
  CHECK(slide(make(4, {{1, 2}, {3, 4}}), 1, SlideForm::F2).error ==
        MoveError::NotApplicable);

  // The mirrored pair (s,t)(r,s) is not a relation word; rewriting it
  // in place changes the boundary link (checked by the oracle gate), so
  // it must be rejected.
  CHECK(slide(make(3, {{2, 3}, {1, 2}}), 1, SlideForm::F2).error ==
        MoveError::NotApplicable);
}

TEST_CASE("slide preserves the expanded braid element's closure data") {
  FenceDiagram f = make(3, {{1, 2}, {2, 3}});
  BraidWord w = expand_band_word(f);
  for (SlideForm target : {SlideForm::F2, SlideForm::F3}) {
    MoveResult r = slide(f, 1, target);
    REQUIRE(r.ok);
    CHECK(normalized_bracket(expand_band_word(r.diagram)) == normalized_bracket(w));
    CHECK(closure_permutation(r.diagram) == closure_permutation(f));
  }
}

TEST_CASE("slides preserve the index triple of the rewritten pair") {
  std::mt19937 rng(17);
  int slides = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FenceDiagram f = random_diagram(rng, 6, 6);
    for (const MoveInstance& mi : applicable_moves(f)) {
      if (mi.kind != MoveKind::Slide) {
        continue;
      }
      MoveResult r = apply_move(f, mi);
      REQUIRE(r.ok);
      auto triple = [](const Band& x, const Band& y) {
        std::vector<int> t{x.top, x.bottom, y.top, y.bottom};
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        return t;
      };
      CHECK(triple(f.word[mi.at - 1], f.word[mi.at]) ==
            triple(r.diagram.word[mi.at - 1], r.diagram.word[mi.at]));
      ++slides;
    }
  }
  CHECK(slides > 100);
}

TEST_CASE("inflate on a bare disk and per the attachment split") {
  MoveResult r = inflate(make(1, {}), 1, 0, {});
  REQUIRE(r.ok);
  CHECK(r.diagram == make(2, {{1, 2}}));

  r = inflate(make(2, {{1, 2}, {1, 2}}), 2, 2, {0, 0});
  REQUIRE(r.ok);
  CHECK(r.diagram == make(3, {{1, 2}, {1, 2}, {2, 3}}));

  // Split strings must cover every end of the inflated line.
  CHECK(inflate(make(2, {{1, 2}, {1, 2}}), 1, 0, {0}).error == MoveError::BadSplit);
}

TEST_CASE("inflate rejects splits that are not surface isotopies") {
  FenceDiagram hopf = make(2, {{1, 2}, {1, 2}});
  // lower-then-upper reading rightward from the new band is required;
  // this split would change the boundary linking number from 1 to 2.
  MoveResult bad = inflate(hopf, 1, 1, {1, 0});
  CHECK(bad.error == MoveError::BadSplit);

  MoveResult good = inflate(hopf, 1, 1, {0, 1});
  REQUIRE(good.ok);
  CHECK(good.diagram == make(3, {{1, 3}, {1, 2}, {2, 3}}));
  CHECK(linking_number(good.diagram) == 1);

  // The cyclic wrap through the closure makes the pattern legal again.
  MoveResult wrapped = inflate(hopf, 1, 0, {1, 0});
  REQUIRE(wrapped.ok);
  CHECK(linking_number(wrapped.diagram) == 1);
}

TEST_CASE("deflate merges and guards") {
  MoveResult r = deflate(make(3, {{2, 3}, {1, 2}}), 2);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(2, {{1, 2}}));

  CHECK(deflate(make(2, {{1, 2}, {1, 2}}), 1).error == MoveError::NotApplicable);

  r = deflate(make(2, {{1, 2}}), 1);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(1, {}));

  r = deflate(make(3, {{1, 3}, {1, 2}, {2, 3}}), 1);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(2, {{1, 2}, {1, 2}}));

  // A trivial band whose removal would erase a cusp pair is kept: this
  // deflation would change lk from 3 to 2.
  FenceDiagram zigzag = make(6, {{2, 6}, {1, 2}, {1, 3}, {4, 6}, {4, 5}, {3, 5}});
  CHECK(deflate(zigzag, 1).error == MoveError::NotApplicable);
}

TEST_CASE("twirl shifts the word cyclically") {
  FenceDiagram hopf = make(2, {{1, 2}, {1, 2}});
  MoveResult r = twirl(hopf, TwirlEnd::Front);
  REQUIRE(r.ok);
  CHECK(r.diagram == hopf);

  FenceDiagram f = make(3, {{1, 3}, {1, 2}, {2, 3}});
  r = twirl(f, TwirlEnd::Front);
  REQUIRE(r.ok);
  CHECK(r.diagram == make(3, {{1, 2}, {2, 3}, {1, 3}}));

  CHECK(!twirl(make(3, {}), TwirlEnd::Front).ok);
}

TEST_CASE("turn is the half-rotation involution") {
  CHECK(turn(make(3, {{1, 2}, {2, 3}})).diagram == make(3, {{1, 2}, {2, 3}}));
  CHECK(turn(make(3, {{1, 2}, {1, 3}})).diagram == make(3, {{1, 3}, {2, 3}}));
}

TEST_CASE("moves invert exactly") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    FenceDiagram f = random_diagram(rng, 5, 5);
    for (const MoveInstance& mi : applicable_moves(f)) {
      MoveResult forward = apply_move(f, mi);
      REQUIRE(forward.ok);
      MoveResult back = apply_move(forward.diagram, forward.inverse);
      REQUIRE(back.ok);
      CHECK(back.diagram == f);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("applicable moves all apply and hit every kind") {
  FenceDiagram bare = make(1, {});
  std::vector<MoveInstance> moves = applicable_moves(bare);
  // A bare disk admits exactly one bounded inflation plus the turn.
  int inflations = 0;
  for (const MoveInstance& mi : moves) {
    CHECK(apply_move(bare, mi).ok);
    if (mi.kind == MoveKind::Inflate) {
      ++inflations;
    }
  }
  CHECK(inflations == 1);

  FenceDiagram f = make(4, {{1, 2}, {3, 4}});
  bool has_slip = false;
  bool has_twirl = false;
  bool has_turn = false;
  for (const MoveInstance& mi : applicable_moves(f)) {
    CHECK(apply_move(f, mi).ok);
    has_slip |= mi.kind == MoveKind::Slip && mi.at == 1;
    has_twirl |= mi.kind == MoveKind::Twirl;
    has_turn |= mi.kind == MoveKind::Turn;
  }
  CHECK(has_slip);
  CHECK(has_twirl);
  CHECK(has_turn);
}

TEST_CASE("every applicable move passes the consistency gate") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    FenceDiagram f = random_diagram(rng, 4, 4);
    for (const MoveInstance& mi : applicable_moves(f)) {
      GateReport report = consistency_gate(f, mi);
      if (!report.pass) {
        CAPTURE(to_string(f));
        CAPTURE(to_string(mi));
        CAPTURE(report.failed_check);
        CAPTURE(report.detail);
      }
      CHECK(report.pass);
    }
  }
}

TEST_CASE("macros compose primitives and return replayable traces") {
  FenceDiagram hopf = make(2, {{1, 2}, {1, 2}});
  MacroResult zigzag = macro_new_zigzag(hopf, 1, 1);
  REQUIRE(zigzag.ok);
  CHECK(zigzag.diagram.strands == 3);
  FenceDiagram replay = hopf;
  for (const MoveInstance& mi : zigzag.trace) {
    MoveResult step = apply_move(replay, mi);
    REQUIRE(step.ok);
    replay = step.diagram;
  }
  CHECK(replay == zigzag.diagram);
  CHECK(linking_number(zigzag.diagram) == 1);

  MacroResult vex = macro_vertical_exchange(make(4, {{1, 2}, {3, 4}}), 1);
  REQUIRE(vex.ok);
  CHECK(vex.diagram == make(4, {{3, 4}, {1, 2}}));
  CHECK(vex.trace.size() == 1);
  CHECK(vex.trace[0].kind == MoveKind::Slip);

  MacroResult hex = macro_height_exchange(make(3, {{1, 3}, {2, 3}}), 1);
  REQUIRE(hex.ok);
  CHECK(hex.diagram == make(3, {{2, 3}, {1, 3}}));
  FenceDiagram hex_replay = make(3, {{1, 3}, {2, 3}});
  for (const MoveInstance& mi : hex.trace) {
    MoveResult step = apply_move(hex_replay, mi);
    REQUIRE(step.ok);
    hex_replay = step.diagram;
  }
  CHECK(hex_replay == hex.diagram);

  CHECK(!macro_height_exchange(make(2, {{1, 2}}), 1).ok);
}
