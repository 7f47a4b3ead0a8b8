#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace annular {

using Int = mpz_class;

/** Division by a zero element. */
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/** A quotient that was required to be a Laurent polynomial is not one. */
struct NonLaurent : std::domain_error {
  explicit NonLaurent(const std::string& what) : std::domain_error(what) {}
};

/** Text that does not match the expected grammar; carries the offset. */
struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& expected, const std::string& found)
      : std::runtime_error("parse error at position " + std::to_string(position) +
                           ": expected " + expected + ", found " + found),
        position(position),
        expected(expected),
        found(found) {}
  std::size_t position;
  std::string expected;
  std::string found;
};

/**
 * Laurent polynomial in one variable q with arbitrary-precision integer
 * coefficients.  Stored sparsely as exponent -> nonzero coefficient.
 */
class IntLaurent1 {
 public:
  IntLaurent1() = default;
  IntLaurent1(long c);  // NOLINT: implicit constant embedding is intended
  explicit IntLaurent1(Int c);

  static IntLaurent1 monomial(Int c, long e);
  // q^e
  static IntLaurent1 q(long e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<long, Int>& terms() const { return terms_; }

  IntLaurent1& operator+=(const IntLaurent1& o);
  IntLaurent1& operator-=(const IntLaurent1& o);
  IntLaurent1 operator-() const;
  friend IntLaurent1 operator+(IntLaurent1 a, const IntLaurent1& b) { return a += b; }
  friend IntLaurent1 operator-(IntLaurent1 a, const IntLaurent1& b) { return a -= b; }
  friend IntLaurent1 operator*(const IntLaurent1& a, const IntLaurent1& b);
  IntLaurent1& operator*=(const IntLaurent1& o) { return *this = *this * o; }
  friend bool operator==(const IntLaurent1& a, const IntLaurent1& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const IntLaurent1& a, const IntLaurent1& b) { return !(a == b); }
  friend bool operator<(const IntLaurent1& a, const IntLaurent1& b) {
    return a.terms_ < b.terms_;
  }

  IntLaurent1 pow(unsigned long k) const;

  /** Exact division; throws NonLaurent when the quotient is not Laurent. */
  static IntLaurent1 exact_div(const IntLaurent1& num, const IntLaurent1& den);

  /** Canonical text: ascending exponents, "[sign]c[*q^e]", e.g. "-q^-1 + q". */
  std::string str() const;
  static IntLaurent1 parse(const std::string& text);

 private:
  std::map<long, Int> terms_;
  void add_term(long e, const Int& c);
  friend class IntPoly2;
};

// q^e as a value
IntLaurent1 qpow(long e);

/** Graded-lexicographic order on (q1,q2) exponent pairs with q1 < q2. */
struct GrlexLess {
  bool operator()(const std::pair<long, long>& a, const std::pair<long, long>& b) const {
    long ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta < tb;
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  }
};

/**
 * Laurent polynomial in q1, q2 with integer coefficients, stored sparsely
 * as exponent pair -> nonzero coefficient in graded-lex order.
 */
class IntPoly2 {
 public:
  using Key = std::pair<long, long>;

  IntPoly2() = default;
  IntPoly2(long c);  // NOLINT
  explicit IntPoly2(Int c);

  static IntPoly2 monomial(Int c, long e1, long e2);
  static IntPoly2 q1(long e = 1);
  static IntPoly2 q2(long e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Key, Int, GrlexLess>& terms() const { return terms_; }

  IntPoly2& operator+=(const IntPoly2& o);
  IntPoly2& operator-=(const IntPoly2& o);
  IntPoly2 operator-() const;
  friend IntPoly2 operator+(IntPoly2 a, const IntPoly2& b) { return a += b; }
  friend IntPoly2 operator-(IntPoly2 a, const IntPoly2& b) { return a -= b; }
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  IntPoly2& operator*=(const IntPoly2& o) { return *this = *this * o; }
  friend bool operator==(const IntPoly2& a, const IntPoly2& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const IntPoly2& a, const IntPoly2& b) { return !(a == b); }

  IntPoly2 pow(unsigned long k) const;
  /** Multiply every exponent pair by the monomial q1^e1 q2^e2. */
  IntPoly2 shifted(long e1, long e2) const;

  /** Substitute q1 = q^-2, q2 = q^2. */
  IntLaurent1 substitute_q() const;

  std::string str() const;
  static IntPoly2 parse(const std::string& text);

 private:
  std::map<Key, Int, GrlexLess> terms_;
  void add_term(Key e, const Int& c);
  friend class RatFun2;
};

/**
 * Rational function in q1, q2 over the integers, kept normalized: the
 * numerator and denominator share no factor, and the denominator's minimal
 * monomial under graded-lex (q1 < q2) is the constant 1 times a positive
 * coefficient at exponent (0,0).
 */
class RatFun2 {
 public:
  RatFun2() : num_(), den_(1) {}
  RatFun2(long c) : num_(c), den_(1) {}  // NOLINT
  RatFun2(IntPoly2 num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFun2(IntPoly2 num, IntPoly2 den);

  static RatFun2 q1(long e = 1) { return RatFun2(IntPoly2::q1(e)); }
  static RatFun2 q2(long e = 1) { return RatFun2(IntPoly2::q2(e)); }
  static RatFun2 monomial(Int c, long e1, long e2) {
    return RatFun2(IntPoly2::monomial(std::move(c), e1, e2));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  const IntPoly2& num() const { return num_; }
  const IntPoly2& den() const { return den_; }
  /** True when the value is a unit monomial c*q1^a*q2^b with c = ±1. */
  bool is_unit_monomial() const;

  RatFun2& operator+=(const RatFun2& o);
  RatFun2& operator-=(const RatFun2& o);
  RatFun2 operator-() const;
  friend RatFun2 operator+(RatFun2 a, const RatFun2& b) { return a += b; }
  friend RatFun2 operator-(RatFun2 a, const RatFun2& b) { return a -= b; }
  friend RatFun2 operator*(const RatFun2& a, const RatFun2& b);
  RatFun2& operator*=(const RatFun2& o) { return *this = *this * o; }
  friend RatFun2 operator/(const RatFun2& a, const RatFun2& b);
  RatFun2& operator/=(const RatFun2& o) { return *this = *this / o; }
  RatFun2 inverse() const;
  RatFun2 pow(long k) const;

  friend bool operator==(const RatFun2& a, const RatFun2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun2& a, const RatFun2& b) { return !(a == b); }
  /** Arbitrary total order so values can key ordered containers. */
  friend bool operator<(const RatFun2& a, const RatFun2& b);

  /**
   * Substitute q1 = q^-2, q2 = q^2 and divide exactly; throws NonLaurent
   * when the specialized denominator does not divide the numerator.
   */
  IntLaurent1 specialize_q() const;

  std::string str() const;
  static RatFun2 parse(const std::string& text);

 private:
  IntPoly2 num_, den_;
  void normalize();
};

/**
 * Gcd of two integer bivariate Laurent polynomials, computed after clearing
 * to ordinary polynomials by a monomial shift.  Exposed for tests.
 */
IntPoly2 poly2_gcd(const IntPoly2& a, const IntPoly2& b);

/** Exact division in Z[q1^{\pm1}, q2^{\pm1}]; throws NonLaurent if inexact. */
IntPoly2 poly2_exact_div(const IntPoly2& num, const IntPoly2& den);

}  // namespace annular
