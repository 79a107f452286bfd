#include "fence/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fence {

namespace {

MoveResult fail(MoveError error) {
  MoveResult r;
  r.ok = false;
  r.error = error;
  return r;
}

bool disjoint_or_nested(const Band& a, const Band& b) {
  if (a.bottom < b.top || b.bottom < a.top) {
    return true;  // disjoint
  }
  if (a.top < b.top && b.bottom < a.bottom) {
    return true;  // b strictly inside a
  }
  if (b.top < a.top && a.bottom < b.bottom) {
    return true;  // a strictly inside b
  }
  return false;
}

struct SlideTriple {
  bool found = false;
  SlideForm form = SlideForm::F1;
  int r = 0, s = 0, t = 0;
};

SlideTriple detect_slide_form(const Band& a, const Band& b) {
  SlideTriple out;
  if (a.bottom == b.top) {
    out = {true, SlideForm::F1, a.top, a.bottom, b.bottom};
  } else if (a.bottom == b.bottom && a.top > b.top) {
    out = {true, SlideForm::F2, b.top, a.top, a.bottom};
  } else if (a.top == b.top && a.bottom > b.bottom) {
    out = {true, SlideForm::F3, a.top, b.bottom, a.bottom};
  }
  return out;
}

std::pair<Band, Band> slide_pair(SlideForm form, int r, int s, int t) {
  switch (form) {
    case SlideForm::F1:
      return {{r, s}, {s, t}};
    case SlideForm::F2:
      return {{s, t}, {r, t}};
    case SlideForm::F3:
    default:
      return {{r, t}, {r, s}};
  }
}

// Word positions (1-based) of the band ends attached to line k.
std::vector<int> attachments(const FenceDiagram& f, int k) {
  std::vector<int> out;
  for (int p = 1; p <= static_cast<int>(f.word.size()); ++p) {
    const Band& band = f.word[p - 1];
    if (band.top == k || band.bottom == k) {
      out.push_back(p);
    }
  }
  return out;
}

// An inflation split is an isotopy exactly when, reading the band ends
// cyclically starting just right of the new trivial band, all ends sent
// to the lower line precede all ends kept on the upper line. The wrap
// through the braid closure is what makes the condition cyclic.
bool split_is_legal(const std::vector<int>& end_positions,
                    const std::vector<std::uint8_t>& lower_flags, int t) {
  std::vector<std::uint8_t> cyclic;
  cyclic.reserve(lower_flags.size());
  for (std::size_t i = 0; i < end_positions.size(); ++i) {
    if (end_positions[i] > t) {
      cyclic.push_back(lower_flags[i]);
    }
  }
  for (std::size_t i = 0; i < end_positions.size(); ++i) {
    if (end_positions[i] <= t) {
      cyclic.push_back(lower_flags[i]);
    }
  }
  bool seen_upper = false;
  for (std::uint8_t lower : cyclic) {
    if (lower && seen_upper) {
      return false;
    }
    if (!lower) {
      seen_upper = true;
    }
  }
  return true;
}

}  // namespace

MoveResult slip(const FenceDiagram& f, int t) {
  if (t < 1 || t >= static_cast<int>(f.word.size())) {
    return fail(MoveError::NotApplicable);
  }
  const Band& a = f.word[t - 1];
  const Band& b = f.word[t];
  if (!disjoint_or_nested(a, b)) {
    return fail(MoveError::NotApplicable);
  }
  MoveResult r;
  r.ok = true;
  r.diagram = f;
  std::swap(r.diagram.word[t - 1], r.diagram.word[t]);
  r.inverse = MoveInstance{MoveKind::Slip, t};
  return r;
}

MoveResult slide(const FenceDiagram& f, int t, SlideForm target) {
  if (t < 1 || t >= static_cast<int>(f.word.size())) {
    return fail(MoveError::NotApplicable);
  }
  SlideTriple triple = detect_slide_form(f.word[t - 1], f.word[t]);
  if (!triple.found) {
    return fail(MoveError::NotApplicable);
  }
  if (triple.form == target) {
    return fail(MoveError::BadTarget);
  }
  MoveResult r;
  r.ok = true;
  r.diagram = f;
  auto [first, second] = slide_pair(target, triple.r, triple.s, triple.t);
  r.diagram.word[t - 1] = first;
  r.diagram.word[t] = second;
  r.inverse = MoveInstance{MoveKind::Slide, t};
  r.inverse.target = triple.form;
  return r;
}

MoveResult inflate(const FenceDiagram& f, int k, int t,
                   const std::vector<std::uint8_t>& lower_flags) {
  int m = static_cast<int>(f.word.size());
  if (k < 1 || k > f.strands || t < 0 || t > m) {
    return fail(MoveError::NotApplicable);
  }
  std::vector<int> ends = attachments(f, k);
  if (lower_flags.size() != ends.size()) {
    return fail(MoveError::BadSplit);
  }
  if (!split_is_legal(ends, lower_flags, t)) {
    return fail(MoveError::BadSplit);
  }

  MoveResult r;
  r.ok = true;
  r.diagram.strands = f.strands + 1;
  r.diagram.word.reserve(f.word.size() + 1);

  std::size_t end_index = 0;
  auto map_end = [&](int line, int position) {
    if (line < k) {
      return line;
    }
    if (line > k) {
      return line + 1;
    }
    bool lower = lower_flags[end_index] != 0;
    (void)position;
    ++end_index;
    return lower ? k + 1 : k;
  };

  for (int p = 1; p <= m; ++p) {
    Band band = f.word[p - 1];
    // Band ends are visited in word order; a band touches line k at
    // most once since top < bottom.
    int new_top = map_end(band.top, p);
    int new_bottom = map_end(band.bottom, p);
    r.diagram.word.push_back({new_top, new_bottom});
  }
  r.diagram.word.insert(r.diagram.word.begin() + t, Band{k, k + 1});
  r.inverse = MoveInstance{MoveKind::Deflate};
  r.inverse.line = k;
  return r;
}

MoveResult deflate(const FenceDiagram& f, int k) {
  if (k < 1 || k + 1 > f.strands) {
    return fail(MoveError::NotApplicable);
  }
  int m = static_cast<int>(f.word.size());
  int trivial_pos = 0;
  int trivial_count = 0;
  for (int p = 1; p <= m; ++p) {
    if (f.word[p - 1] == Band{k, k + 1}) {
      trivial_pos = p;
      ++trivial_count;
    }
  }
  if (trivial_count != 1) {
    // Zero: nothing to contract. Two or more: a Hopf-band pair carrying
    // genus, which must not be collapsed.
    return fail(MoveError::NotApplicable);
  }

  // The merge is the inverse of an inflation, so the merged attachment
  // pattern must satisfy the same cyclic split condition: ends of the
  // lower line first after the trivial band, then ends of the upper.
  std::vector<int> merged_positions;
  std::vector<std::uint8_t> merged_lower;
  for (int p = 1; p <= m; ++p) {
    if (p == trivial_pos) {
      continue;
    }
    const Band& band = f.word[p - 1];
    if (band.top == k || band.bottom == k) {
      merged_positions.push_back(p);
      merged_lower.push_back(0);
    } else if (band.top == k + 1 || band.bottom == k + 1) {
      merged_positions.push_back(p);
      merged_lower.push_back(1);
    }
  }
  if (!split_is_legal(merged_positions, merged_lower, trivial_pos)) {
    return fail(MoveError::NotApplicable);
  }

  MoveResult r;
  r.ok = true;
  r.diagram.strands = f.strands - 1;
  std::vector<std::uint8_t> inverse_split;
  for (int p = 1; p <= m; ++p) {
    if (p == trivial_pos) {
      continue;
    }
    Band band = f.word[p - 1];
    auto remap = [&](int line) {
      if (line == k || line == k + 1) {
        inverse_split.push_back(line == k + 1 ? 1 : 0);
        return k;
      }
      return line > k + 1 ? line - 1 : line;
    };
    int new_top = remap(band.top);
    int new_bottom = remap(band.bottom);
    r.diagram.word.push_back({new_top, new_bottom});
  }
  r.inverse = MoveInstance{MoveKind::Inflate};
  r.inverse.line = k;
  r.inverse.at = trivial_pos - 1;
  r.inverse.split = std::move(inverse_split);
  return r;
}

MoveResult twirl(const FenceDiagram& f, TwirlEnd end) {
  if (f.word.empty()) {
    return fail(MoveError::NotApplicable);
  }
  MoveResult r;
  r.ok = true;
  r.diagram = f;
  if (end == TwirlEnd::Front) {
    std::rotate(r.diagram.word.begin(), r.diagram.word.begin() + 1, r.diagram.word.end());
  } else {
    std::rotate(r.diagram.word.begin(), r.diagram.word.end() - 1, r.diagram.word.end());
  }
  r.inverse = MoveInstance{MoveKind::Twirl};
  r.inverse.end = end == TwirlEnd::Front ? TwirlEnd::Back : TwirlEnd::Front;
  return r;
}

MoveResult turn(const FenceDiagram& f) {
  MoveResult r;
  r.ok = true;
  r.diagram.strands = f.strands;
  r.diagram.word.reserve(f.word.size());
  for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
    r.diagram.word.push_back({f.strands + 1 - it->bottom, f.strands + 1 - it->top});
  }
  r.inverse = MoveInstance{MoveKind::Turn};
  return r;
}

MoveResult apply_move(const FenceDiagram& f, const MoveInstance& move) {
  switch (move.kind) {
    case MoveKind::Slip:
      return slip(f, move.at);
    case MoveKind::Slide:
      return slide(f, move.at, move.target);
    case MoveKind::Inflate:
      return inflate(f, move.line, move.at, move.split);
    case MoveKind::Deflate:
      return deflate(f, move.line);
    case MoveKind::Twirl:
      return twirl(f, move.end);
    case MoveKind::Turn:
    default:
      return turn(f);
  }
}

std::vector<MoveInstance> applicable_moves(const FenceDiagram& f) {
  std::vector<MoveInstance> out;
  int m = static_cast<int>(f.word.size());

  for (int t = 1; t < m; ++t) {
    if (slip(f, t).ok) {
      MoveInstance mi{MoveKind::Slip, t};
      out.push_back(mi);
    }
    SlideTriple triple = detect_slide_form(f.word[t - 1], f.word[t]);
    if (triple.found) {
      for (SlideForm target : {SlideForm::F1, SlideForm::F2, SlideForm::F3}) {
        if (target != triple.form) {
          MoveInstance mi{MoveKind::Slide, t};
          mi.target = target;
          out.push_back(mi);
        }
      }
    }
  }

  for (int k = 1; k < f.strands; ++k) {
    if (deflate(f, k).ok) {
      MoveInstance mi{MoveKind::Deflate};
      mi.line = k;
      out.push_back(mi);
    }
  }

  // Inflations: t near an existing attachment (or 0 on a bare line),
  // splits restricted to the legal cyclic family, indexed by how many
  // ends counted cyclically from the new band go to the lower line.
  for (int k = 1; k <= f.strands; ++k) {
    std::vector<int> ends = attachments(f, k);
    std::set<int> t_candidates;
    if (ends.empty()) {
      t_candidates.insert(0);
    } else {
      for (int p : ends) {
        if (p - 1 >= 0) {
          t_candidates.insert(p - 1);
        }
        t_candidates.insert(p);
      }
    }
    int d = static_cast<int>(ends.size());
    for (int t : t_candidates) {
      // Cyclic order starting right of the band.
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < ends.size(); ++i) {
        if (ends[i] > t) {
          order.push_back(i);
        }
      }
      for (std::size_t i = 0; i < ends.size(); ++i) {
        if (ends[i] <= t) {
          order.push_back(i);
        }
      }
      for (int lower_count = 0; lower_count <= d; ++lower_count) {
        std::vector<std::uint8_t> flags(ends.size(), 0);
        for (int i = 0; i < lower_count; ++i) {
          flags[order[i]] = 1;
        }
        MoveInstance mi{MoveKind::Inflate};
        mi.line = k;
        mi.at = t;
        mi.split = std::move(flags);
        out.push_back(mi);
      }
    }
  }

  if (m >= 1) {
    MoveInstance front{MoveKind::Twirl};
    front.end = TwirlEnd::Front;
    out.push_back(front);
    MoveInstance back{MoveKind::Twirl};
    back.end = TwirlEnd::Back;
    out.push_back(back);
  }
  out.push_back(MoveInstance{MoveKind::Turn});
  return out;
}

MacroResult macro_new_zigzag(const FenceDiagram& f, int k, int t) {
  MacroResult out;
  int m = static_cast<int>(f.word.size());
  if (t < 1 || t > m) {
    out.error = MoveError::NotApplicable;
    return out;
  }
  const Band& anchor = f.word[t - 1];
  if (anchor.top != k && anchor.bottom != k) {
    out.error = MoveError::NotApplicable;
    return out;
  }

  std::vector<int> ends = attachments(f, k);
  std::vector<std::uint8_t> flags(ends.size(), 0);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i] == t) {
      flags[i] = 1;
    }
  }
  MoveInstance inflate_move{MoveKind::Inflate};
  inflate_move.line = k;
  inflate_move.at = t - 1;
  inflate_move.split = flags;
  MoveResult step1 = apply_move(f, inflate_move);
  if (!step1.ok) {
    out.error = step1.error;
    return out;
  }

  // The new trivial band sits at position t, the rerouted anchor at
  // t+1; the pair is in form F1 (anchor descending) or F2 (ascending).
  SlideTriple triple =
      detect_slide_form(step1.diagram.word[t - 1], step1.diagram.word[t]);
  if (!triple.found) {
    out.error = MoveError::NotApplicable;
    return out;
  }
  SlideForm target = triple.form == SlideForm::F1 ? SlideForm::F2 : SlideForm::F3;
  MoveInstance slide_move{MoveKind::Slide, t};
  slide_move.target = target;
  MoveResult step2 = apply_move(step1.diagram, slide_move);
  if (!step2.ok) {
    out.error = step2.error;
    return out;
  }
  out.ok = true;
  out.diagram = step2.diagram;
  out.trace = {inflate_move, slide_move};
  return out;
}

MacroResult macro_height_exchange(const FenceDiagram& f, int k) {
  MacroResult out;
  if (k < 1 || k + 1 > f.strands) {
    out.error = MoveError::NotApplicable;
    return out;
  }
  FenceDiagram target;
  target.strands = f.strands;
  for (const Band& band : f.word) {
    if (band == Band{k, k + 1}) {
      out.error = MoveError::NotApplicable;
      return out;
    }
    auto swap_line = [&](int line) {
      if (line == k) {
        return k + 1;
      }
      if (line == k + 1) {
        return k;
      }
      return line;
    };
    int a = swap_line(band.top);
    int b = swap_line(band.bottom);
    target.word.push_back({std::min(a, b), std::max(a, b)});
  }
  if (target == f) {
    out.ok = true;
    out.diagram = f;
    return out;
  }

  // Bounded breadth-first synthesis over the non-closure moves.
  constexpr int kMaxDepth = 6;
  constexpr std::size_t kMaxVisited = 60000;
  auto key = [](const FenceDiagram& g) { return to_string(g); };
  std::map<std::string, std::pair<std::string, MoveInstance>> parent;
  std::deque<std::pair<FenceDiagram, int>> queue;
  parent[key(f)] = {"", MoveInstance{}};
  queue.push_back({f, 0});

  while (!queue.empty() && parent.size() < kMaxVisited) {
    auto [g, depth] = queue.front();
    queue.pop_front();
    if (depth >= kMaxDepth) {
      continue;
    }
    for (const MoveInstance& mi : applicable_moves(g)) {
      if (mi.kind == MoveKind::Twirl || mi.kind == MoveKind::Turn) {
        continue;
      }
      MoveResult step = apply_move(g, mi);
      if (!step.ok || step.diagram.strands > f.strands + 2) {
        continue;
      }
      std::string sk = key(step.diagram);
      if (parent.count(sk)) {
        continue;
      }
      parent[sk] = {key(g), mi};
      if (step.diagram == target) {
        std::vector<MoveInstance> trace;
        std::string walk = sk;
        while (walk != key(f)) {
          auto& [prev, move] = parent[walk];
          trace.push_back(move);
          walk = prev;
        }
        std::reverse(trace.begin(), trace.end());
        out.ok = true;
        out.diagram = target;
        out.trace = std::move(trace);
        return out;
      }
      queue.push_back({step.diagram, depth + 1});
    }
  }
  out.error = MoveError::NotApplicable;
  return out;
}

MacroResult macro_vertical_exchange(const FenceDiagram& f, int t) {
  MacroResult out;
  MoveResult step = slip(f, t);
  if (!step.ok) {
    out.error = step.error;
    return out;
  }
  out.ok = true;
  out.diagram = step.diagram;
  MoveInstance mi{MoveKind::Slip, t};
  out.trace = {mi};
  return out;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Slip:
      return "slip";
    case MoveKind::Slide:
      return "slide";
    case MoveKind::Inflate:
      return "inflate";
    case MoveKind::Deflate:
      return "deflate";
    case MoveKind::Twirl:
      return "twirl";
    case MoveKind::Turn:
    default:
      return "turn";
  }
}

std::string to_string(SlideForm form) {
  switch (form) {
    case SlideForm::F1:
      return "F1";
    case SlideForm::F2:
      return "F2";
    case SlideForm::F3:
    default:
      return "F3";
  }
}

std::string to_string(const MoveInstance& move) {
  std::ostringstream out;
  out << "--kind " << to_string(move.kind);
  switch (move.kind) {
    case MoveKind::Slip:
      out << " --at " << move.at;
      break;
    case MoveKind::Slide:
      out << " --at " << move.at << " --target " << to_string(move.target);
      break;
    case MoveKind::Inflate: {
      out << " --line " << move.line << " --at " << move.at << " --split ";
      if (move.split.empty()) {
        out << "-";
      } else {
        for (std::uint8_t lower : move.split) {
          out << (lower ? 'l' : 'u');
        }
      }
      break;
    }
    case MoveKind::Deflate:
      out << " --line " << move.line;
      break;
    case MoveKind::Twirl:
      out << " --end " << (move.end == TwirlEnd::Front ? "front" : "back");
      break;
    case MoveKind::Turn:
      break;
  }
  return out.str();
}

}  // namespace fence
