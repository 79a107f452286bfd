#include "fence/oracles.hpp"

#include <numeric>
#include <sstream>

namespace fence {

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c) {
  LaurentPolynomial p;
  p.add_term(0, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) {
    return;
  }
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& other, std::int64_t coeff,
                                   int shift) {
  for (const auto& [exp, c] : other.terms_) {
    add_term(exp + shift, c * coeff);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out = *this;
  out.add_scaled(rhs, 1, 0);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  // Highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [exp, coeff] = *it;
    if (first) {
      if (coeff < 0) {
        out << "-";
      }
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || exp == 0) {
      out << mag;
    }
    if (exp != 0) {
      out << "A";
      if (exp != 1) {
        out << "^" << exp;
      }
    }
  }
  return out.str();
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

LaurentPolynomial kauffman_bracket(const BraidWord& w, int max_crossings) {
  int n = static_cast<int>(w.letters.size());
  if (n > max_crossings) {
    throw TooLargeError("state sum over " + std::to_string(n) +
                        " crossings exceeds bound " + std::to_string(max_crossings));
  }
  int b = w.strands;

  // Loop value d = -A^2 - A^-2, powers up to the largest possible loop count.
  LaurentPolynomial d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  std::vector<LaurentPolynomial> d_pow(b + n + 1);
  d_pow[0] = LaurentPolynomial::constant(1);
  for (int i = 1; i <= b + n; ++i) {
    d_pow[i] = d_pow[i - 1] * d;
  }

  LaurentPolynomial result;
  int max_nodes = b + n + 1;
  std::vector<int> parent(max_nodes);
  std::vector<int> cur(b);

  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < b; ++i) {
      cur[i] = i;
    }
    int next_node = b;
    int loops = 0;
    int exponent = 0;
    for (int i = 0; i < n; ++i) {
      bool pick_b = (state >> i) & 1u;
      exponent += pick_b ? -1 : 1;
      // For a positive letter the A-smoothing lets the strands run
      // straight and the B-smoothing caps them; mirrored for negative.
      bool hook = (w.letters[i].sign > 0) == pick_b;
      if (hook) {
        int k = w.letters[i].index - 1;
        int a = uf_find(parent, cur[k]);
        int c = uf_find(parent, cur[k + 1]);
        if (a == c) {
          ++loops;
        } else {
          parent[a] = c;
        }
        cur[k] = cur[k + 1] = next_node++;
      }
    }
    for (int i = 0; i < b; ++i) {
      int a = uf_find(parent, cur[i]);
      int c = uf_find(parent, i);
      if (a == c) {
        ++loops;
      } else {
        parent[a] = c;
      }
    }
    result.add_scaled(d_pow[loops - 1], 1, exponent);
  }
  return result;
}

int writhe(const BraidWord& w) {
  int total = 0;
  for (const BraidLetter& letter : w.letters) {
    total += letter.sign;
  }
  return total;
}

LaurentPolynomial normalized_bracket(const BraidWord& w, int max_crossings) {
  LaurentPolynomial raw = kauffman_bracket(w, max_crossings);
  int wr = writhe(w);
  std::int64_t sign = (wr % 2 == 0) ? 1 : -1;
  LaurentPolynomial out;
  out.add_scaled(raw, sign, -3 * wr);
  return out;
}

int linking_number(const FenceDiagram& f) {
  if (!is_quasipositive_annulus(f)) {
    throw NotAnnulusError();
  }
  std::vector<int> perm = closure_permutation(f);
  std::vector<int> component(f.strands, -1);
  int comp = 0;
  for (int i = 0; i < f.strands; ++i) {
    if (component[i] >= 0) {
      continue;
    }
    int j = i;
    while (component[j] < 0) {
      component[j] = comp;
      j = perm[j] - 1;
    }
    ++comp;
  }

  BraidWord w = expand_band_word(f);
  std::vector<int> occ(f.strands);
  std::iota(occ.begin(), occ.end(), 0);
  int total = 0;
  for (const BraidLetter& letter : w.letters) {
    int k = letter.index - 1;
    if (component[occ[k]] != component[occ[k + 1]]) {
      total += letter.sign;
    }
    std::swap(occ[k], occ[k + 1]);
  }
  return total / 2;
}

namespace {

std::string braid_key(const BraidWord& w) {
  std::string key;
  key.reserve(w.letters.size() + 1);
  key.push_back(static_cast<char>(w.strands));
  for (const BraidLetter& letter : w.letters) {
    key.push_back(static_cast<char>(letter.sign > 0 ? letter.index : -letter.index));
  }
  return key;
}

const LaurentPolynomial& cached_normalized_bracket(const BraidWord& w,
                                                   int max_crossings,
                                                   BracketCache& cache) {
  auto [it, inserted] = cache.try_emplace(braid_key(w));
  if (inserted) {
    it->second = normalized_bracket(w, max_crossings);
  }
  return it->second;
}

}  // namespace

GateReport consistency_gate(const FenceDiagram& f, const MoveInstance& move,
                            int max_crossings, BracketCache* cache) {
  GateReport report;
  MoveResult result = apply_move(f, move);
  if (!result.ok) {
    report.failed_check = "not_applicable";
    report.detail = to_string(move) + " on " + to_string(f);
    return report;
  }
  const FenceDiagram& g = result.diagram;
  SurfaceSummary before = surface_summary(f);
  SurfaceSummary after = surface_summary(g);
  if (before.euler_characteristic != after.euler_characteristic) {
    report.failed_check = "chi";
    report.detail = std::to_string(before.euler_characteristic) + " -> " +
                    std::to_string(after.euler_characteristic);
    return report;
  }
  if (before.boundary_components != after.boundary_components) {
    report.failed_check = "components";
    report.detail = std::to_string(before.boundary_components) + " -> " +
                    std::to_string(after.boundary_components);
    return report;
  }
  if (before.connected != after.connected) {
    report.failed_check = "connected";
    return report;
  }
  BraidWord wb = expand_band_word(f);
  BraidWord wa = expand_band_word(g);
  if (static_cast<int>(wb.letters.size()) <= max_crossings &&
      static_cast<int>(wa.letters.size()) <= max_crossings) {
    BracketCache local;
    BracketCache& memo = cache ? *cache : local;
    const LaurentPolynomial& pb = cached_normalized_bracket(wb, max_crossings, memo);
    const LaurentPolynomial& pa = cached_normalized_bracket(wa, max_crossings, memo);
    if (!(pb == pa)) {
      report.failed_check = "bracket";
      report.detail = pb.to_string() + " -> " + pa.to_string();
      return report;
    }
  }
  if (is_quasipositive_annulus(f)) {
    int lk_before = linking_number(f);
    int lk_after = linking_number(g);
    if (lk_before != lk_after) {
      report.failed_check = "lk";
      report.detail = std::to_string(lk_before) + " -> " + std::to_string(lk_after);
      return report;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace fence
