#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fence {

// A positive band between two horizontal lines of a fence diagram.
// Lines are numbered 1 (top) to b (bottom); the band hangs from line
// `top` down to line `bottom` and passes in front of every line in
// between.
struct Band {
  int top = 0;
  int bottom = 0;

  friend bool operator==(const Band&, const Band&) = default;
  friend auto operator<=>(const Band&, const Band&) = default;
};

// b horizontal lines plus an ordered word of positive bands. Word order
// is the left-to-right order of the drawn diagram; the leftmost band
// acts first in permutation composition. Equality is syntactic.
struct FenceDiagram {
  int strands = 1;
  std::vector<Band> word;

  friend bool operator==(const FenceDiagram&, const FenceDiagram&) = default;
};

struct BraidLetter {
  int index = 0;  // generator index k of sigma_k, 1 <= k < strands
  int sign = 1;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;
};

struct SurfaceSummary {
  int euler_characteristic = 0;
  int boundary_components = 0;
  bool connected = false;
};

class NotConnectedError : public std::runtime_error {
 public:
  NotConnectedError() : std::runtime_error("diagram is not connected") {}
};

class NotAnnulusError : public std::runtime_error {
 public:
  NotAnnulusError() : std::runtime_error("diagram is not a quasipositive annulus") {}
};

bool is_valid(const FenceDiagram& f);
void require_valid(const FenceDiagram& f);  // throws std::invalid_argument

// Expands each band (i,j) to sigma_i..sigma_{j-2} sigma_{j-1}
// sigma_{j-2}^-1..sigma_i^-1, concatenated in word order. A band
// (i, i+1) becomes the single positive letter sigma_i.
BraidWord expand_band_word(const FenceDiagram& f);

// Composite of the transpositions (top bottom), leftmost band acting
// first. Returned vector has perm[i-1] = image of strand i, 1-based.
std::vector<int> closure_permutation(const FenceDiagram& f);

// Underlying permutation of a braid word, each sigma_k acting as the
// transposition (k k+1), leftmost letter first.
std::vector<int> braid_permutation(const BraidWord& w);

int cycle_count(const std::vector<int>& perm);

// chi = strands - |word|; boundary components = cycles of the closure
// permutation; connected = connectivity of the graph on lines with one
// edge per band.
SurfaceSummary surface_summary(const FenceDiagram& f);

// Connected, chi = 0 and exactly two boundary components.
bool is_quasipositive_annulus(const FenceDiagram& f);

std::string to_string(const Band& band);
std::string to_string(const FenceDiagram& f);

}  // namespace fence
