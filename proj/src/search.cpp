#include "fence/search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "fence/legendrian.hpp"
#include "fence/oracles.hpp"

namespace fence {

namespace {

std::string state_key(const FenceDiagram& f) {
  std::string key;
  key.reserve(2 + f.word.size() * 2);
  key.push_back(static_cast<char>(f.strands));
  for (const Band& band : f.word) {
    key.push_back(static_cast<char>(band.top));
    key.push_back(static_cast<char>(band.bottom));
  }
  return key;
}

std::optional<std::string> invariant_mismatch(const FenceDiagram& a,
                                              const FenceDiagram& b) {
  SurfaceSummary sa = surface_summary(a);
  SurfaceSummary sb = surface_summary(b);
  if (sa.euler_characteristic != sb.euler_characteristic) {
    return "chi";
  }
  if (sa.boundary_components != sb.boundary_components) {
    return "components";
  }
  if (sa.connected != sb.connected) {
    return "connected";
  }
  bool annulus_a = is_quasipositive_annulus(a);
  bool annulus_b = is_quasipositive_annulus(b);
  if (annulus_a && annulus_b) {
    LegendrianInvariants ia = legendrian_invariants(a);
    LegendrianInvariants ib = legendrian_invariants(b);
    if (ia.tb != ib.tb) {
      return "tb";
    }
    if (ia.rot_abs != ib.rot_abs) {
      return "rot_abs";
    }
  }
  BraidWord wa = expand_band_word(a);
  BraidWord wb = expand_band_word(b);
  if (static_cast<int>(wa.letters.size()) <= kDefaultCrossingBound &&
      static_cast<int>(wb.letters.size()) <= kDefaultCrossingBound) {
    if (!(normalized_bracket(wa) == normalized_bracket(wb))) {
      return "bracket";
    }
  }
  return std::nullopt;
}

struct Edge {
  std::string parent_key;
  MoveInstance move;
};

std::vector<MoveInstance> reconstruct_forward(
    const std::map<std::string, Edge>& parents, const std::string& from_key,
    const std::string& meet_key) {
  std::vector<MoveInstance> path;
  std::string walk = meet_key;
  while (walk != from_key) {
    const Edge& e = parents.at(walk);
    path.push_back(e.move);
    walk = e.parent_key;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<MoveInstance> reconstruct_backward(
    const std::map<std::string, Edge>& parents,
    const std::map<std::string, FenceDiagram>& states, const std::string& to_key,
    const std::string& meet_key) {
  // Backward edges run target -> meet; invert each to go meet -> target.
  std::vector<MoveInstance> path;
  std::string walk = meet_key;
  while (walk != to_key) {
    const Edge& e = parents.at(walk);
    MoveResult redo = apply_move(states.at(e.parent_key), e.move);
    path.push_back(redo.inverse);
    walk = e.parent_key;
  }
  return path;
}

}  // namespace

SearchResult bfs_equivalence(const FenceDiagram& a, const FenceDiagram& b,
                             const SearchBudget& budget) {
  SearchResult result;
  if (a == b) {
    result.verdict = Verdict::Related;
    return result;
  }
  if (auto mismatch = invariant_mismatch(a, b)) {
    result.verdict = Verdict::NotRelatedByInvariant;
    result.invariant_name = *mismatch;
    return result;
  }

  struct Side {
    std::map<std::string, Edge> parents;
    std::map<std::string, FenceDiagram> states;
    std::vector<std::string> frontier;
  };
  Side sides[2];
  std::string key_a = state_key(a);
  std::string key_b = state_key(b);
  sides[0].states[key_a] = a;
  sides[0].frontier = {key_a};
  sides[1].states[key_b] = b;
  sides[1].frontier = {key_b};

  std::uint64_t visited = 2;
  int depth[2] = {0, 0};

  while (depth[0] + depth[1] < budget.max_steps) {
    int side_index = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[side_index];
    Side& other = sides[side_index ^ 1];
    if (side.frontier.empty()) {
      break;
    }
    ++depth[side_index];

    std::vector<std::string> next;
    std::sort(side.frontier.begin(), side.frontier.end());
    for (const std::string& key : side.frontier) {
      const FenceDiagram state = side.states.at(key);
      for (const MoveInstance& mi : applicable_moves(state)) {
        MoveResult step = apply_move(state, mi);
        if (!step.ok) {
          continue;
        }
        if (step.diagram.strands > budget.max_strands ||
            static_cast<int>(step.diagram.word.size()) > budget.max_bands) {
          continue;
        }
        std::string sk = state_key(step.diagram);
        if (side.states.count(sk)) {
          continue;
        }
        side.states[sk] = step.diagram;
        side.parents[sk] = {key, mi};
        next.push_back(sk);
        ++visited;

        if (other.states.count(sk)) {
          result.verdict = Verdict::Related;
          result.visited = visited;
          result.path = reconstruct_forward(sides[0].parents, key_a, sk);
          std::vector<MoveInstance> backward =
              reconstruct_backward(sides[1].parents, sides[1].states, key_b, sk);
          result.path.insert(result.path.end(), backward.begin(), backward.end());
          return result;
        }
        if (visited >= budget.max_visited) {
          result.verdict = Verdict::Unknown;
          result.visited = visited;
          return result;
        }
      }
    }
    side.frontier = std::move(next);
    if (sides[0].frontier.empty() && sides[1].frontier.empty()) {
      break;
    }
  }
  result.verdict = Verdict::Unknown;
  result.visited = visited;
  return result;
}

void enumerate_diagrams(int strands, int bands,
                        const std::function<bool(const FenceDiagram&)>& filter,
                        const std::function<void(const FenceDiagram&)>& sink) {
  if (strands < 1 || bands < 0) {
    throw std::invalid_argument("enumerate_diagrams: bad range");
  }
  std::vector<Band> alphabet;
  for (int i = 1; i <= strands; ++i) {
    for (int j = i + 1; j <= strands; ++j) {
      alphabet.push_back({i, j});
    }
  }
  if (alphabet.empty() && bands > 0) {
    return;
  }

  FenceDiagram f;
  f.strands = strands;
  f.word.assign(bands, alphabet.empty() ? Band{} : alphabet[0]);
  std::vector<std::size_t> odometer(bands, 0);
  for (;;) {
    if (!filter || filter(f)) {
      sink(f);
    }
    int wheel = bands - 1;
    while (wheel >= 0) {
      if (++odometer[wheel] < alphabet.size()) {
        f.word[wheel] = alphabet[odometer[wheel]];
        break;
      }
      odometer[wheel] = 0;
      f.word[wheel] = alphabet[0];
      --wheel;
    }
    if (wheel < 0) {
      break;
    }
  }
}

ClassifyResult classify_annuli(int lk_target, const SearchBudget& budget) {
  if (lk_target < 1) {
    throw std::invalid_argument("classify_annuli: lk target must be >= 1");
  }
  ClassifyResult result;
  std::map<int, AnnulusClass> classes;
  // chi = 0 forces |word| = strands, so the band budget caps strands too.
  int max_b = std::min(budget.max_strands, budget.max_bands);
  for (int b = 2; b <= max_b; ++b) {
    enumerate_diagrams(
        b, b, [](const FenceDiagram& f) { return is_quasipositive_annulus(f); },
        [&](const FenceDiagram& f) {
          ++result.annuli_seen;
          if (linking_number(f) != lk_target) {
            return;
          }
          LegendrianInvariants inv = legendrian_invariants(f);
          if (inv.tb != -lk_target) {
            throw std::logic_error("tb != -lk for " + to_string(f));
          }
          auto [it, inserted] = classes.try_emplace(inv.rot_abs);
          if (inserted) {
            it->second.rot_abs = inv.rot_abs;
            it->second.tb = inv.tb;
            it->second.representative = f;
          }
          ++it->second.population;
        });
  }
  for (auto& [rot_abs, cls] : classes) {
    result.classes.push_back(cls);
  }
  return result;
}

}  // namespace fence
