#include "fence/core.hpp"

#include <numeric>
#include <sstream>

namespace fence {

bool is_valid(const FenceDiagram& f) {
  if (f.strands < 1) {
    return false;
  }
  for (const Band& band : f.word) {
    if (band.top < 1 || band.top >= band.bottom || band.bottom > f.strands) {
      return false;
    }
  }
  return true;
}

void require_valid(const FenceDiagram& f) {
  if (!is_valid(f)) {
    throw std::invalid_argument("invalid fence diagram: " + to_string(f));
  }
}

BraidWord expand_band_word(const FenceDiagram& f) {
  BraidWord w;
  w.strands = f.strands;
  for (const Band& band : f.word) {
    for (int k = band.top; k <= band.bottom - 2; ++k) {
      w.letters.push_back({k, 1});
    }
    w.letters.push_back({band.bottom - 1, 1});
    for (int k = band.bottom - 2; k >= band.top; --k) {
      w.letters.push_back({k, -1});
    }
  }
  return w;
}

namespace {

// Keeps img/pos mutually inverse so each transposition is O(1).
struct TrackedPermutation {
  std::vector<int> img;  // img[x-1] = image of x
  std::vector<int> pos;  // pos[v-1] = preimage of v

  explicit TrackedPermutation(int n) : img(n), pos(n) {
    std::iota(img.begin(), img.end(), 1);
    std::iota(pos.begin(), pos.end(), 1);
  }

  void apply_transposition(int a, int b) {
    int xa = pos[a - 1];
    int xb = pos[b - 1];
    img[xa - 1] = b;
    img[xb - 1] = a;
    pos[a - 1] = xb;
    pos[b - 1] = xa;
  }
};

}  // namespace

std::vector<int> closure_permutation(const FenceDiagram& f) {
  TrackedPermutation p(f.strands);
  for (const Band& band : f.word) {
    p.apply_transposition(band.top, band.bottom);
  }
  return p.img;
}

std::vector<int> braid_permutation(const BraidWord& w) {
  TrackedPermutation p(w.strands);
  for (const BraidLetter& letter : w.letters) {
    p.apply_transposition(letter.index, letter.index + 1);
  }
  return p.img;
}

int cycle_count(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j] - 1;
    }
  }
  return cycles;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SurfaceSummary surface_summary(const FenceDiagram& f) {
  SurfaceSummary s;
  s.euler_characteristic = f.strands - static_cast<int>(f.word.size());
  s.boundary_components = cycle_count(closure_permutation(f));

  std::vector<int> parent(f.strands);
  std::iota(parent.begin(), parent.end(), 0);
  int components = f.strands;
  for (const Band& band : f.word) {
    int a = uf_find(parent, band.top - 1);
    int b = uf_find(parent, band.bottom - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  s.connected = components == 1;
  return s;
}

bool is_quasipositive_annulus(const FenceDiagram& f) {
  SurfaceSummary s = surface_summary(f);
  return s.connected && s.euler_characteristic == 0 && s.boundary_components == 2;
}

std::string to_string(const Band& band) {
  return std::to_string(band.top) + "-" + std::to_string(band.bottom);
}

std::string to_string(const FenceDiagram& f) {
  std::ostringstream out;
  out << "b=" << f.strands << " [";
  for (std::size_t i = 0; i < f.word.size(); ++i) {
    if (i > 0) {
      out << " ";
    }
    out << to_string(f.word[i]);
  }
  out << "]";
  return out.str();
}

}  // namespace fence
