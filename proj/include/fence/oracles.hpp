#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "fence/core.hpp"
#include "fence/moves.hpp"

namespace fence {

// Integer Laurent polynomial in one variable A. No zero coefficients
// are stored; arithmetic is exact.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(std::int64_t c);
  static LaurentPolynomial monomial(std::int64_t coeff, int exponent);

  void add_term(int exponent, std::int64_t coeff);
  // this += other * coeff * A^shift
  void add_scaled(const LaurentPolynomial& other, std::int64_t coeff, int shift);

  LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultCrossingBound = 16;

// Bracket polynomial of the closure of w by full state enumeration:
// loop value -A^2 - A^-2, normalized so a crossingless single loop
// evaluates to 1. State count is 2^|letters|.
LaurentPolynomial kauffman_bracket(const BraidWord& w, int max_crossings = kDefaultCrossingBound);

// (-A^3)^(-writhe) * bracket, a genuine invariant of the closure link,
// comparable across diagrams with different crossing numbers.
LaurentPolynomial normalized_bracket(const BraidWord& w, int max_crossings = kDefaultCrossingBound);

int writhe(const BraidWord& w);

// Half the signed count of crossings between the two boundary
// components of the expanded closure. Requires a quasipositive annulus.
int linking_number(const FenceDiagram& f);

struct GateReport {
  bool pass = false;
  std::string failed_check;  // empty when pass
  std::string detail;
};

// Normalized brackets keyed by expanded word; state sums repeat heavily
// when gating every move of a corpus.
using BracketCache = std::map<std::string, LaurentPolynomial>;

// Before/after comparison of chi, boundary components, connectedness,
// normalized bracket (when both expansions are within the crossing
// bound) and, for annuli, the linking number.
GateReport consistency_gate(const FenceDiagram& f, const MoveInstance& move,
                            int max_crossings = kDefaultCrossingBound,
                            BracketCache* cache = nullptr);

}  // namespace fence
