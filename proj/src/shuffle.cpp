#include "annular/shuffle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <tuple>

namespace annular {

ZPoly ZPoly::monomial(std::vector<int> exps, RatFun2 c) {
  ZPoly out(static_cast<int>(exps.size()));
  if (!c.is_zero()) out.terms.emplace(std::move(exps), std::move(c));
  return out;
}

void ZPoly::add(const std::vector<int>& exps, const RatFun2& c) {
  if (c.is_zero()) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms) add(e, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms) add(e, -c);
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.n);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add(e, ca * cb);
    }
  return out;
}

ZPoly ZPoly::scaled(const RatFun2& c) const {
  ZPoly out(n);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms) out.terms.emplace(e, coeff * c);
  return out;
}

ZPoly ZPoly::permuted(const std::vector<int>& sigma) const {
  ZPoly out(n);
  for (const auto& [e, c] : terms) {
    std::vector<int> img(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) img[static_cast<std::size_t>(sigma[k]) - 1] = e[k];
    out.terms.emplace(std::move(img), c);
  }
  return out;
}

SymLaurent SymLaurent::scalar(const RatFun2& c) {
  SymLaurent out(0);
  if (!c.is_zero()) out.terms.emplace(std::vector<int>{}, c);
  return out;
}

SymLaurent SymLaurent::one_var(long long d, const RatFun2& c) {
  SymLaurent out(1);
  if (!c.is_zero()) out.terms.emplace(std::vector<int>{static_cast<int>(d)}, c);
  return out;
}

void SymLaurent::add(const std::vector<int>& exps, const RatFun2& c) {
  if (c.is_zero()) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
  if (n != o.n) throw std::invalid_argument("SymLaurent: mixed variable counts");
  for (const auto& [e, c] : o.terms) add(e, c);
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
  if (n != o.n) throw std::invalid_argument("SymLaurent: mixed variable counts");
  for (const auto& [e, c] : o.terms) add(e, -c);
  return *this;
}

SymLaurent SymLaurent::scaled(const RatFun2& c) const {
  SymLaurent out(n);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms) out.terms.emplace(e, coeff * c);
  return out;
}

std::string SymLaurent::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!std::is_sorted(e.rbegin(), e.rend())) continue;  // dominant vectors only
    if (!first) os << '\n';
    first = false;
    os << '(';
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k != 0) os << ',';
      os << e[k];
    }
    os << "): " << c.str();
  }
  return os.str();
}

bool is_symmetric(const SymLaurent& F) {
  for (int i = 0; i + 1 < F.n; ++i) {
    for (const auto& [e, c] : F.terms) {
      std::vector<int> swapped = e;
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
      auto it = F.terms.find(swapped);
      if (it == F.terms.end() || !(it->second == c)) return false;
    }
  }
  return true;
}

namespace {

// (i, j, c) with i < j stands for the cleared binomial z_i - c*z_j.
using Key = std::tuple<int, int, RatFun2>;

ZPoly key_binomial(int n, const Key& key) {
  const auto& [i, j, c] = key;
  std::vector<int> ei(static_cast<std::size_t>(n), 0);
  ei[static_cast<std::size_t>(i) - 1] = 1;
  std::vector<int> ej(static_cast<std::size_t>(n), 0);
  ej[static_cast<std::size_t>(j) - 1] = 1;
  ZPoly out = ZPoly::monomial(std::move(ei));
  out += ZPoly::monomial(std::move(ej), -c);
  return out;
}

// 1 - c * z_a / z_b as a Laurent binomial.
ZPoly one_minus(int n, const RatFun2& c, int a, int b) {
  ZPoly out = ZPoly::monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(a) - 1] += 1;
  e[static_cast<std::size_t>(b) - 1] -= 1;
  out += ZPoly::monomial(std::move(e), -c);
  return out;
}

struct Cleared {
  ZPoly num;
  std::map<Key, int> den;
};

/**
 * Applies sigma to numerator and factors, then clears every factor
 * (1 - c z_a/z_b) to the canonical binomial (z_i - c' z_j), i < j, folding
 * the z-monomial and unit corrections into the numerator.
 */
Cleared clear_factors(const ZPoly& numerator, const std::vector<BinomialFactor>& factors,
                      const std::vector<int>& sigma) {
  Cleared out;
  out.num = numerator.permuted(sigma);
  std::vector<int> extra(static_cast<std::size_t>(numerator.n), 0);
  RatFun2 unit(1);
  for (const auto& f : factors) {
    if (f.coeff.is_zero()) continue;  // the factor is identically 1
    int a = sigma[static_cast<std::size_t>(f.top) - 1];
    int b = sigma[static_cast<std::size_t>(f.bottom) - 1];
    // 1 - c z_a/z_b = (z_b - c z_a) / z_b
    extra[static_cast<std::size_t>(b) - 1] += 1;
    if (b < a) {
      out.den[{b, a, f.coeff}] += 1;
    } else {
      // (z_b - c z_a) = (-c) * (z_a - c^{-1} z_b) with a < b
      out.den[{a, b, f.coeff.inverse()}] += 1;
      unit *= -f.coeff;
    }
  }
  out.num = out.num * ZPoly::monomial(std::move(extra), unit.inverse());
  return out;
}

/** Exact division of P by (z_i - c*z_j); throws InexactDivision otherwise. */
ZPoly synthetic_divide(const ZPoly& P, const Key& key) {
  if (P.is_zero()) return P;
  const auto& [vi, vj, c] = key;
  using Rest = std::map<std::vector<int>, RatFun2>;
  auto add_to = [](Rest& dest, const std::vector<int>& e, const RatFun2& v) {
    if (v.is_zero()) return;
    auto it = dest.find(e);
    if (it == dest.end()) {
      dest.emplace(e, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) dest.erase(it);
  };
  // Multiplication by b = c*z_j, applied to a coefficient layer.
  auto times_b = [&](const Rest& src) {
    Rest out;
    for (const auto& [e, v] : src) {
      std::vector<int> shifted = e;
      shifted[static_cast<std::size_t>(vj) - 1] += 1;
      add_to(out, shifted, v * c);
    }
    return out;
  };

  std::map<int, Rest> layers;  // z_i exponent -> coefficient in the other variables
  for (const auto& [e, v] : P.terms) {
    std::vector<int> rest = e;
    int k = rest[static_cast<std::size_t>(vi) - 1];
    rest[static_cast<std::size_t>(vi) - 1] = 0;
    add_to(layers[k], rest, v);
  }
  int lo = layers.begin()->first;
  int hi = layers.rbegin()->first;

  // P = sum A_k z_i^k; with Q_hi = 0: Q_{k-1} = A_k + b Q_k, remainder A_lo + b Q_lo.
  ZPoly quotient(P.n);
  Rest running;  // Q_k while descending
  for (int k = hi; k > lo; --k) {
    Rest next = times_b(running);
    if (auto it = layers.find(k); it != layers.end())
      for (const auto& [e, v] : it->second) add_to(next, e, v);
    running = std::move(next);
    for (const auto& [e, v] : running) {
      std::vector<int> full = e;
      full[static_cast<std::size_t>(vi) - 1] = k - 1;
      quotient.add(full, v);
    }
  }
  Rest remainder = times_b(running);
  if (auto it = layers.find(lo); it != layers.end())
    for (const auto& [e, v] : it->second) add_to(remainder, e, v);
  if (!remainder.empty())
    throw InexactDivision("symmetrized sum is not a Laurent polynomial");
  return quotient;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

/**
 * Coset representatives of S_{n+k} over S_n x S_k: each size-n subset of
 * positions receives the first block in increasing order.
 */
std::vector<std::vector<int>> block_transversal(int n, int k) {
  int total = n + k;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> sigma(static_cast<std::size_t>(total), 0);
    int lowpos = 0;
    int highpos = n;
    for (int p = 1; p <= total; ++p) {
      if (mask & (1u << (p - 1)))
        sigma[static_cast<std::size_t>(lowpos++)] = p;
      else
        sigma[static_cast<std::size_t>(highpos++)] = p;
    }
    out.push_back(std::move(sigma));
  }
  return out;
}

void require_symmetric(const SymLaurent& F, const char* where) {
  if (!is_symmetric(F)) throw std::logic_error(std::string(where) + ": result not symmetric");
}

bool exact_mode(const ShuffleContext& ctx) {
  return ctx.q1 == RatFun2::q1() && ctx.q2 == RatFun2::q2();
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SymLaurent symmetrize_fraction(int n, const ZPoly& numerator,
                               const std::vector<BinomialFactor>& denominators,
                               const std::vector<std::vector<int>>* permutations) {
  if (numerator.n != n) throw std::invalid_argument("symmetrize_fraction: variable count mismatch");
  std::vector<std::vector<int>> full;
  if (permutations == nullptr) {
    full = all_permutations(n);
    permutations = &full;
  }

  std::vector<Cleared> parts;
  parts.reserve(permutations->size());
  std::map<Key, int> lcm;
  for (const auto& sigma : *permutations) {
    parts.push_back(clear_factors(numerator, denominators, sigma));
    for (const auto& [key, mult] : parts.back().den)
      lcm[key] = std::max(lcm[key], mult);
  }

  ZPoly total(n);
  for (const auto& part : parts) {
    ZPoly term = part.num;
    for (const auto& [key, mult] : lcm) {
      int have = 0;
      if (auto it = part.den.find(key); it != part.den.end()) have = it->second;
      for (int k = have; k < mult; ++k) term = term * key_binomial(n, key);
    }
    total += term;
  }
  for (const auto& [key, mult] : lcm)
    for (int k = 0; k < mult; ++k) total = synthetic_divide(total, key);

  SymLaurent out(n);
  out.terms = std::move(total.terms);
  return out;
}

SymLaurent shuffle_product(const SymLaurent& F, const SymLaurent& G, const ShuffleContext& ctx) {
  int total = F.n + G.n;
  if (F.is_zero() || G.is_zero()) return SymLaurent(total);
  if (F.n == 0) return G.scaled(F.terms.begin()->second);
  if (G.n == 0) return F.scaled(G.terms.begin()->second);

  ZPoly num(total);
  for (const auto& [e, c] : F.terms) {
    std::vector<int> padded = e;
    padded.resize(static_cast<std::size_t>(total), 0);
    num.add(padded, c);
  }
  ZPoly right(total);
  for (const auto& [e, c] : G.terms) {
    std::vector<int> padded(static_cast<std::size_t>(F.n), 0);
    padded.insert(padded.end(), e.begin(), e.end());
    right.add(padded, c);
  }
  num = num * right;

  std::vector<BinomialFactor> denominators;
  for (int i = 1; i <= F.n; ++i)
    for (int j = F.n + 1; j <= total; ++j) {
      num = num * one_minus(total, ctx.q1, i, j);
      num = num * one_minus(total, ctx.q2, i, j);
      num = num * one_minus(total, ctx.q1 * ctx.q2, j, i);
      denominators.push_back({i, j, RatFun2(1)});
    }

  std::vector<std::vector<int>> transversal = block_transversal(F.n, G.n);
  SymLaurent out = symmetrize_fraction(total, num, denominators, &transversal);
  require_symmetric(out, "shuffle_product");
  return out;
}

SymLaurent r_element(const std::vector<long long>& d, const ShuffleContext& ctx) {
  int n = static_cast<int>(d.size());
  if (n < 1) throw std::invalid_argument("r_element: need at least one entry");

  std::vector<int> exps(d.begin(), d.end());
  ZPoly num = ZPoly::monomial(std::move(exps));
  std::vector<BinomialFactor> denominators;
  RatFun2 q1q2 = ctx.q1 * ctx.q2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num = num * one_minus(n, ctx.q1, i, j);
      num = num * one_minus(n, ctx.q2, i, j);
      // The (1 - q1 q2 z_j/z_i) factor at j = i+1 cancels the chain
      // denominator factor (1 - q1 q2 z_{i+1}/z_i).
      if (j > i + 1) num = num * one_minus(n, q1q2, j, i);
      denominators.push_back({i, j, RatFun2(1)});
    }

  SymLaurent out = symmetrize_fraction(n, num, denominators);
  RatFun2 prefactor = (RatFun2(1) - ctx.q1).pow(n - 1) * (RatFun2(1) - ctx.q2).pow(n);
  out = out.scaled(prefactor);
  require_symmetric(out, "r_element");
  if (exact_mode(ctx)) {
    for (const auto& [e, c] : out.terms)
      if (!c.den().is_one())
        throw std::logic_error("r_element: non-integral coefficient");
  }
  return out;
}

SymLaurent h_element(long long m, int n, const ShuffleContext& ctx) {
  if (n < 1) throw std::invalid_argument("h_element: need n >= 1");
  std::vector<long long> d(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    d[static_cast<std::size_t>(i) - 1] = floor_div(m * i, n) - floor_div(m * (i - 1), n);
  return r_element(d, ctx);
}

bool wheel_check(const SymLaurent& F, const ShuffleContext& ctx) {
  if (F.n < 3) return true;
  RatFun2 q1q2 = ctx.q1 * ctx.q2;
  for (const RatFun2& second : {ctx.q1, ctx.q2}) {
    // z_1 = x, z_2 = x*second, z_3 = x*q1*q2, rest unchanged.
    std::map<std::vector<int>, RatFun2> image;
    for (const auto& [e, c] : F.terms) {
      RatFun2 coeff = c * second.pow(e[1]) * q1q2.pow(e[2]);
      std::vector<int> key;
      key.reserve(e.size() - 2);
      key.push_back(e[0] + e[1] + e[2]);
      key.insert(key.end(), e.begin() + 3, e.end());
      auto it = image.find(key);
      if (it == image.end()) {
        if (!coeff.is_zero()) image.emplace(std::move(key), coeff);
      } else {
        it->second += coeff;
        if (it->second.is_zero()) image.erase(it);
      }
    }
    if (!image.empty()) return false;
  }
  return true;
}

SymLaurent partial_k(const SymLaurent& F, int k) {
  if (k < 1) throw std::invalid_argument("partial_k: k must be positive");
  SymLaurent out(F.n);
  for (const auto& [e, c] : F.terms)
    for (std::size_t v = 0; v < e.size(); ++v) {
      std::vector<int> shifted = e;
      shifted[v] += k;
      out.add(shifted, c);
    }
  return out;
}

}  // namespace annular
