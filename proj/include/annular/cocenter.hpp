#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annular/hecke.hpp"

namespace annular {

/**
 * Element of the trace of the extended affine Hecke algebra, written in the
 * basis of conjugacy classes indexed by convex paths.
 */
struct CocenterVector {
  int n = 0;
  std::map<ConvexPath, IntLaurent1> coords;

  CocenterVector() = default;
  explicit CocenterVector(int strands) : n(strands) {}

  bool is_zero() const { return coords.empty(); }
  void add(const ConvexPath& path, const IntLaurent1& c);
  CocenterVector& operator+=(const CocenterVector& o);
  CocenterVector& operator-=(const CocenterVector& o);
  friend CocenterVector operator+(CocenterVector a, const CocenterVector& b) { return a += b; }
  friend CocenterVector operator-(CocenterVector a, const CocenterVector& b) { return a -= b; }
  CocenterVector scaled(const IntLaurent1& c) const;
  friend bool operator==(const CocenterVector&, const CocenterVector&) = default;

  /** One "path: coefficient" line per coordinate, in path order. */
  std::string str() const;
  static CocenterVector parse(const std::string& text, int n);
};

/**
 * Rewrites trace classes of T-basis elements into the minimal-length basis.
 * Memoizes per window; reuse one reducer per strand count for speed.
 * The conjugation order is configurable so independence of the search
 * order can be tested.
 */
class CocenterReducer {
 public:
  explicit CocenterReducer(int n, std::vector<int> conjugation_order = {});

  int strands() const { return n_; }

  /**
   * Searches the length-preserving conjugation orbit of v for an element u
   * and index i with length(s_i u s_i) = length(u) - 2.
   */
  std::optional<std::pair<AffinePermutation, long long>> find_length_drop(
      const AffinePermutation& v) const;

  /** Trace class of a single basis element T_v. */
  CocenterVector class_of(const AffinePermutation& v);
  /** Trace class of a general element, term by term. */
  CocenterVector class_of(const HeckeElement& x);
  /** Trace class of an E-word product, on its total strand count. */
  CocenterVector e_class(const EWord& e);

 private:
  int n_;
  std::vector<int> order_;
  std::map<std::vector<long long>, CocenterVector> cache_;

  const CocenterVector& reduce_window(const std::vector<long long>& w);
};

}  // namespace annular
