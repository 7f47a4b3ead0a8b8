#pragma once

#include <map>
#include <string>
#include <vector>

#include "annular/affine_perm.hpp"
#include "annular/ring.hpp"

namespace annular {

/** One atom of a braid word: T_i^k, Omega^k, Y_i^k or Id. */
struct BraidLetter {
  enum class Kind { T, Omega, Y, Id };
  Kind kind = Kind::Id;
  int index = 0;  // T: 0..n-1, Y: 1..n
  long long exponent = 1;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

/** Parses "Y1^2*T0*Omega^-1" style words and validates indices against n. */
BraidWord parse_braid_word(const std::string& text, int n);
std::string braid_word_str(const BraidWord& word);
BraidWord braid_word_inverse(const BraidWord& word);

/** Formal product E_{d^1} * ... * E_{d^r}; each factor is a nonempty row. */
struct EWord {
  std::vector<std::vector<long long>> factors;

  int total_strands() const;
  friend bool operator==(const EWord&, const EWord&) = default;
  friend bool operator<(const EWord& a, const EWord& b) { return a.factors < b.factors; }
  std::string str() const;
  static EWord parse(const std::string& text);
};

/**
 * Braid word for E_{d^1} * ... * E_{d^r} on the total strand count:
 * Y_1^{d_1} ... Y_N^{d_N} followed by one ascending T block per factor.
 */
BraidWord e_word_to_braid(const EWord& e);

/**
 * Element of the extended affine Hecke algebra in the T-basis: a finite
 * Z[q^{\pm1}]-combination of T_v, keyed by the window of v.
 */
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {
    if (n < 1) throw StrandMismatch("HeckeElement: need at least one strand");
  }
  static HeckeElement unit(int n);
  static HeckeElement basis(const AffinePermutation& v);

  int strands() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<long long>, IntLaurent1>& terms() const { return terms_; }
  void add_term(const std::vector<long long>& window, const IntLaurent1& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement operator-() const;
  HeckeElement scaled(const IntLaurent1& c) const;
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  HeckeElement mul_gen_t(long long i) const;      // * T_i
  HeckeElement mul_gen_t_inv(long long i) const;  // * T_i^{-1}
  HeckeElement mul_omega(long long power) const;  // * Omega^power
  /** * Y_i^power via the sigma-omega word for y_i. */
  HeckeElement mul_y(int i, long long power) const;
  HeckeElement mul(const HeckeElement& other) const;

  /** True when every basis term has the same winding degree. */
  bool has_equidegree_support() const;

  std::string str() const;

 private:
  int n_;
  std::map<std::vector<long long>, IntLaurent1> terms_;
};

/** Image of a braid word under the T-basis fold, left to right. */
HeckeElement evaluate_word(int n, const BraidWord& word);

inline HeckeElement evaluate_word(int n, const std::string& text) {
  return evaluate_word(n, parse_braid_word(text, n));
}

}  // namespace annular
