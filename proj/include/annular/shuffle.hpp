#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/ring.hpp"

namespace annular {

/**
 * A symmetrized sum failed to clear its denominator: the input was not
 * actually polynomial after symmetrization, or a formula was transcribed
 * wrongly.  Exact division makes this loud instead of silent.
 */
struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Sparse Laurent polynomial in z_1..z_n with RatFun2 coefficients, keyed by
 * exponent vectors.  Workhorse representation behind symmetrization.
 */
struct ZPoly {
  int n = 0;
  std::map<std::vector<int>, RatFun2> terms;

  ZPoly() = default;
  explicit ZPoly(int vars) : n(vars) {}
  static ZPoly monomial(std::vector<int> exps, RatFun2 c = RatFun2(1));

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& exps, const RatFun2& c);
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly scaled(const RatFun2& c) const;
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  /** Substitute z_i -> z_{sigma(i)}; sigma holds 1-based images. */
  ZPoly permuted(const std::vector<int>& sigma) const;
};

/** Denominator factor (1 - c * z_top / z_bottom) with top != bottom. */
struct BinomialFactor {
  int top = 0;
  int bottom = 0;
  RatFun2 coeff;
};

/**
 * The two kernel parameters; substituting rational constants for them turns
 * every construction into a fast randomized probe of the same identity.
 */
struct ShuffleContext {
  RatFun2 q1 = RatFun2::q1();
  RatFun2 q2 = RatFun2::q2();
};

/**
 * Element of one graded piece S_n of the shuffle algebra: a symmetric
 * Laurent polynomial in z_1..z_n over Q(q1,q2).  S_0 holds scalars.
 */
struct SymLaurent {
  int n = 0;
  std::map<std::vector<int>, RatFun2> terms;

  SymLaurent() = default;
  explicit SymLaurent(int vars) : n(vars) {}
  static SymLaurent scalar(const RatFun2& c);
  /** z^d in S_1, scaled by c. */
  static SymLaurent one_var(long long d, const RatFun2& c = RatFun2(1));

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& exps, const RatFun2& c);
  SymLaurent& operator+=(const SymLaurent& o);
  SymLaurent& operator-=(const SymLaurent& o);
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  SymLaurent scaled(const RatFun2& c) const;
  friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

  /** One "(e_1,..,e_n): coefficient" line per dominant exponent vector. */
  std::string str() const;
};

/** Exhaustive symmetry check; used by tests and internal assertions. */
bool is_symmetric(const SymLaurent& F);

/**
 * Sum of sigma(numerator / prod denominators) over sigma in the given
 * 1-based permutation list (all of S_n when omitted), computed over a
 * common cleared denominator with exact division.
 */
SymLaurent symmetrize_fraction(int n, const ZPoly& numerator,
                               const std::vector<BinomialFactor>& denominators,
                               const std::vector<std::vector<int>>* permutations = nullptr);

/** The shuffle product F * G in S_{n+n'}. */
SymLaurent shuffle_product(const SymLaurent& F, const SymLaurent& G,
                           const ShuffleContext& ctx = {});

/** The distinguished element R_d; coefficients are checked to be integral. */
SymLaurent r_element(const std::vector<long long>& d, const ShuffleContext& ctx = {});

/** H_{m,n} = R_{staircase(m,n)}. */
SymLaurent h_element(long long m, int n, const ShuffleContext& ctx = {});

/** Whether both wheel substitutions annihilate F (vacuously true for n < 3). */
bool wheel_check(const SymLaurent& F, const ShuffleContext& ctx = {});

/** The derivation F -> F * (z_1^k + ... + z_n^k); zero on scalars. */
SymLaurent partial_k(const SymLaurent& F, int k);

}  // namespace annular
