#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fence/core.hpp"
#include "fence/moves.hpp"

namespace fence {

struct SearchBudget {
  int max_steps = 8;
  int max_strands = 6;
  int max_bands = 8;
  std::uint64_t max_visited = 1000000;
};

enum class Verdict { Related, NotRelatedByInvariant, Unknown };

struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<MoveInstance> path;  // replays source to target when Related
  std::string invariant_name;     // set for NotRelatedByInvariant
  std::uint64_t visited = 0;
};

// Compares the move-invariant vector (chi, components, connectedness,
// tb and rot_abs for annuli, normalized bracket) and, when it matches,
// runs a bidirectional breadth-first search over applicable_moves.
SearchResult bfs_equivalence(const FenceDiagram& a, const FenceDiagram& b,
                             const SearchBudget& budget = {});

// All (C(b,2))^m band words in lexicographic order, filtered.
void enumerate_diagrams(int strands, int bands,
                        const std::function<bool(const FenceDiagram&)>& filter,
                        const std::function<void(const FenceDiagram&)>& sink);

struct AnnulusClass {
  int rot_abs = 0;
  int tb = 0;
  FenceDiagram representative;  // first found, smallest strand count
  std::uint64_t population = 0;
};

struct ClassifyResult {
  std::vector<AnnulusClass> classes;  // sorted by rot_abs
  std::uint64_t annuli_seen = 0;
};

// Enumerates annulus diagrams within the budget with the given linking
// number and groups them by rot_abs. All representatives are verified
// to satisfy tb = -lk.
ClassifyResult classify_annuli(int lk_target, const SearchBudget& budget = {});

}  // namespace fence
