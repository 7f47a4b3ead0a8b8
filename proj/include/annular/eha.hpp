#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/cocenter.hpp"
#include "annular/hecke.hpp"
#include "annular/ring.hpp"
#include "annular/shuffle.hpp"

namespace annular {

/** Attempt to divide by a coefficient that is zero in the working ring. */
class ScalarNotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Element of the relation algebra presented by the generators E_d: a finite
 * Q(q1,q2)-linear combination of formal words.  The empty word is the unit
 * and concatenation of words is the product.
 */
struct FormalElement {
  std::map<EWord, RatFun2> terms;

  FormalElement() = default;
  static FormalElement unit();
  static FormalElement generator(const std::vector<long long>& d,
                                 const RatFun2& c = RatFun2(1));
  static FormalElement word(const EWord& w, const RatFun2& c = RatFun2(1));

  bool is_zero() const { return terms.empty(); }
  void add(const EWord& w, const RatFun2& c);
  FormalElement& operator+=(const FormalElement& o);
  FormalElement& operator-=(const FormalElement& o);
  friend FormalElement operator+(FormalElement a, const FormalElement& b) {
    return a += b;
  }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) {
    return a -= b;
  }
  FormalElement operator-() const;
  friend FormalElement operator*(const FormalElement& a, const FormalElement& b);
  FormalElement& operator*=(const FormalElement& o) { return *this = *this * o; }
  FormalElement scaled(const RatFun2& c) const;
  friend bool operator==(const FormalElement&, const FormalElement&) = default;
  std::string str() const;
};

FormalElement commutator(const FormalElement& a, const FormalElement& b);

/** Both sides of one relation instance; the relation asserts lhs = rhs. */
struct RelationInstance {
  FormalElement lhs, rhs;
};

/**
 * E_d - q1*q2*E_{d - alpha_i} = (1 - q1) * E_{d[1..i]} * E_{d[i+1..n]}
 * where alpha_i = e_i - e_{i+1} and 1 <= i <= n-1.
 */
RelationInstance rel_a1_instance(const std::vector<long long>& d, int i);

/**
 * [E_{(k)}, E_d] = (q2 - 1) * sum over positions i of the insertion sums:
 * the entry d_i is replaced by the pair (k-a, d_i+a) for a = 1..k-d_i when
 * k > d_i, by -(d_i-a, k+a) for a = 1..d_i-k when k < d_i, and contributes
 * nothing when k = d_i.
 */
RelationInstance rel_a2_instance(long long k, const std::vector<long long>& d);

/**
 * Coefficient identity at bidegree (A, B) of the cubic-kernel exchange
 * relation for the one-row currents: with K(z,w) = (z - w q1)(z - w q2)
 * (z - w/(q1 q2)) = sum_r c_r z^r w^{3-r} and K'(z,w) = (z q1 - w)(z q2 - w)
 * (z/(q1 q2) - w) = sum_r c'_r z^r w^{3-r},
 * lhs = sum_r c_r E_{(A+r)} E_{(B+3-r)}, rhs = sum_r c'_r E_{(B+3-r)} E_{(A+r)}.
 */
RelationInstance tor1_instance(long long A, long long B);

/** [[E_{(m+1)}, E_{(m-1)}], E_{(m)}] = 0. */
RelationInstance tor2_instance(long long m);

/** The derivation with E_d -> sum_i E_{d + k e_i}, extended by Leibniz. */
FormalElement partial_k(const FormalElement& x, int k);

/** Substitute the context's values for q1 and q2 in a coefficient. */
RatFun2 substitute_params(const RatFun2& f, const ShuffleContext& ctx);

/**
 * Deterministic rational probe values for q1 and q2 derived from the seed;
 * the values avoid 0, +-1, equal parameters, and unit products so that every
 * divisor appearing in the library stays invertible.
 */
ShuffleContext probe_context(unsigned long long seed);

/**
 * Image under E_d -> R_d with concatenation mapped to the shuffle product,
 * graded by total variable count; slot 0 carries the scalar part.  Zero
 * slots are dropped, so the zero element maps to the empty map.
 */
std::map<int, SymLaurent> eval_shuffle(const FormalElement& x,
                                       const ShuffleContext& ctx = {});

/** Shared reducers and memoized word classes for cocenter evaluation. */
class CocenterBank {
 public:
  CocenterReducer& reducer(int n);
  /** Cocenter class of the word's braid, scaled by q^{sum_i (1 - n_i)}. */
  const CocenterVector& word_class(const EWord& w);

 private:
  std::map<int, CocenterReducer> reducers_;
  std::map<EWord, CocenterVector> classes_;
};

/**
 * Image in the Hecke cocenter: coefficients specialize at q1 = q^-2,
 * q2 = q^2, and a word with factor lengths n_1..n_r maps to the class of its
 * braid on N = sum n_i strands scaled by q^{sum_i (1 - n_i)}, graded by N.
 * Zero slots are dropped.  Throws NonLaurent when a coefficient does not
 * specialize.
 */
std::map<int, CocenterVector> eval_cocenter(const FormalElement& x,
                                            CocenterBank& bank);
std::map<int, CocenterVector> eval_cocenter(const FormalElement& x);

/**
 * A combination of words in one-row generators E_{(k)} equal to
 * E_{(0,...,0,m)} of length n; satisfies
 * eval_shuffle(result) = r_element((0,...,0,m)).
 */
FormalElement reduce_single_rows(int n, long long m);

struct VerifyBounds {
  int n_max = 3;
  long long d_max = 1;
  long long k_max = 1;
};

struct VerifyFailure {
  std::string instance;
  std::string detail;
};

struct VerifyReport {
  std::string relation;
  std::string target;
  long long instances = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

/**
 * Enumerates relation instances within the bounds and evaluates lhs - rhs in
 * the chosen target ("cocenter" or "shuffle").  relation is one of rel-a1,
 * rel-a2, tor1, tor2, rel-shuf (the last names the same instance family as
 * rel-a1; it is conventionally checked in the shuffle target).  The probe
 * context applies to the shuffle target only.
 */
VerifyReport verify_suite(const std::string& relation, const std::string& target,
                          const VerifyBounds& bounds, const ShuffleContext& ctx = {});

}  // namespace annular
