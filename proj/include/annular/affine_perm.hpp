#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "annular/ring.hpp"

namespace annular {

/** A requested strand index or count is out of range for the ambient group. */
struct StrandMismatch : std::invalid_argument {
  explicit StrandMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/** Reduced fraction with positive denominator. */
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  std::string str() const;
};

/**
 * Slope-sorted profile of a conjugacy class: steps (l_i, m_i) with l_i >= 1,
 * ordered by m_i/l_i ascending, ties by (l_i, m_i) lexicographically.
 */
class ConvexPath {
 public:
  using Step = std::pair<long long, long long>;  // (l, m)

  ConvexPath() = default;
  explicit ConvexPath(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  long long total_strands() const;
  friend bool operator==(const ConvexPath&, const ConvexPath&) = default;
  friend bool operator<(const ConvexPath& a, const ConvexPath& b);

  std::string str() const;
  static ConvexPath parse(const std::string& text);

 private:
  std::vector<Step> steps_;
};

/**
 * Element of the extended affine symmetric group on n strands: a bijection
 * v of the integers with v(i+n) = v(i)+n, stored by its window v(1..n).
 * The window residues form a complete residue system mod n.
 */
class AffinePermutation {
 public:
  AffinePermutation(int n, std::vector<long long> window);

  static AffinePermutation identity(int n);
  /** s_i, swapping i and i+1 modulo n; the index is read mod n. */
  static AffinePermutation simple_reflection(int n, long long i);
  /** The rotation pi with pi(i) = i+1. */
  static AffinePermutation rotation(int n);
  /** The translation y^d with y^d(m) = m + n*d_r for m of residue r. */
  static AffinePermutation translation(std::vector<long long> d);

  int strands() const { return n_; }
  const std::vector<long long>& window() const { return window_; }
  long long operator()(long long m) const;

  /** (u * v)(i) = u(v(i)). */
  AffinePermutation compose(const AffinePermutation& other) const;
  AffinePermutation inverse() const;
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
    return a.window_ < b.window_;
  }

  bool is_identity() const;
  /** Winding number: (1/n) * sum(v(i) - i). */
  long long degree() const;
  /** Coxeter length of the degree-zero part, by the inversion formula. */
  long long length() const;
  /** Letter count of the greedy reduced word; equals length(). */
  long long length_by_reduction() const;
  /** True when v(i) > v(i+1), i.e. right multiplication by s_i shortens. */
  bool right_descent(long long i) const;

  AffinePermutation mul_simple(long long i) const;      // v * s_i
  AffinePermutation pre_mul_simple(long long i) const;   // s_i * v
  AffinePermutation mul_rotation(long long power) const;  // v * pi^power

  /**
   * Canonical form v = pi^k * s_{i_1} ... s_{i_l} with the s-word obtained
   * by greedy right-descent stripping.
   */
  struct CanonicalWord {
    long long rotation_power = 0;
    std::vector<int> letters;
  };
  CanonicalWord canonical_word() const;

  /**
   * Factorization v = y^d * w with w finite (w maps [1..n] to [1..n]).
   */
  struct TranslationFactor {
    std::vector<long long> d;
    std::vector<int> w;  // w(i) = w[i-1], a permutation of 1..n
  };
  TranslationFactor translation_finite_factor() const;

  /** Newton point: weakly decreasing rationals, n entries. */
  std::vector<Rational> newton_point() const;
  ConvexPath convex_path() const;

  std::string window_str() const;

 private:
  int n_;
  std::vector<long long> window_;
};

/** One letter of a generator word for the extended affine symmetric group. */
struct GenLetter {
  enum class Kind { Simple, Rotation, Translation, Identity };
  Kind kind = Kind::Identity;
  long long index = 0;    // s_i index (mod n) or y_i index (1..n)
  long long exponent = 1;
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

using GeneratorWord = std::vector<GenLetter>;

/** Product of the letter images, left to right. */
AffinePermutation from_word(int n, const GeneratorWord& word);

/** Parses "s0*s1*pi^-1*y2^3" style words; validates indices against n. */
GeneratorWord parse_generator_word(const std::string& text, int n);

std::string generator_word_str(const GeneratorWord& word);

}  // namespace annular
