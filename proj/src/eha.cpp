#include "annular/eha.hpp"

#include <array>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

namespace annular {

namespace {

RatFun2 qq() { return RatFun2::q1() * RatFun2::q2(); }
RatFun2 one_minus_q1() { return RatFun2(1) - RatFun2::q1(); }
RatFun2 one_minus_q2() { return RatFun2(1) - RatFun2::q2(); }

std::string vec_str(const std::vector<long long>& d) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << ",";
    out << d[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

// ---- FormalElement ----

FormalElement FormalElement::unit() { return word(EWord{}, RatFun2(1)); }

FormalElement FormalElement::generator(const std::vector<long long>& d,
                                       const RatFun2& c) {
  if (d.empty()) throw std::invalid_argument("FormalElement: empty generator row");
  return word(EWord{{d}}, c);
}

FormalElement FormalElement::word(const EWord& w, const RatFun2& c) {
  FormalElement out;
  out.add(w, c);
  return out;
}

void FormalElement::add(const EWord& w, const RatFun2& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

FormalElement& FormalElement::operator+=(const FormalElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

FormalElement FormalElement::operator-() const {
  FormalElement out;
  for (const auto& [w, c] : terms) out.terms.emplace(w, -c);
  return out;
}

FormalElement operator*(const FormalElement& a, const FormalElement& b) {
  FormalElement out;
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      EWord w = wa;
      w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

FormalElement FormalElement::scaled(const RatFun2& c) const {
  FormalElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, coef] : terms) out.terms.emplace(w, coef * c);
  return out;
}

std::string FormalElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) out << " + ";
    first = false;
    std::string body = w.factors.empty() ? "1" : w.str();
    if (c.is_one()) {
      out << body;
    } else {
      out << "(" << c.str() << ")*" << body;
    }
  }
  return out.str();
}

FormalElement commutator(const FormalElement& a, const FormalElement& b) {
  return a * b - b * a;
}

// ---- relation instances ----

RelationInstance rel_a1_instance(const std::vector<long long>& d, int i) {
  const int n = static_cast<int>(d.size());
  if (n < 2) throw std::invalid_argument("rel_a1_instance: need at least two rows");
  if (i < 1 || i > n - 1)
    throw std::out_of_range("rel_a1_instance: split index out of range");
  std::vector<long long> shifted = d;
  shifted[i - 1] -= 1;
  shifted[i] += 1;
  RelationInstance inst;
  inst.lhs = FormalElement::generator(d);
  inst.lhs.add(EWord{{shifted}}, -qq());
  std::vector<long long> left(d.begin(), d.begin() + i);
  std::vector<long long> right(d.begin() + i, d.end());
  inst.rhs = FormalElement::word(EWord{{left, right}}, one_minus_q1());
  return inst;
}

RelationInstance rel_a2_instance(long long k, const std::vector<long long>& d) {
  const int n = static_cast<int>(d.size());
  if (n < 1) throw std::invalid_argument("rel_a2_instance: need at least one row");
  RelationInstance inst;
  inst.lhs = commutator(FormalElement::generator({k}), FormalElement::generator(d));
  const RatFun2 q2m1 = RatFun2::q2() - RatFun2(1);
  for (int i = 0; i < n; ++i) {
    auto inserted = [&](long long first, long long second) {
      std::vector<long long> row(d.begin(), d.begin() + i);
      row.push_back(first);
      row.push_back(second);
      row.insert(row.end(), d.begin() + i + 1, d.end());
      return EWord{{row}};
    };
    if (k > d[i]) {
      for (long long a = 1; a <= k - d[i]; ++a)
        inst.rhs.add(inserted(k - a, d[i] + a), q2m1);
    } else if (k < d[i]) {
      for (long long a = 1; a <= d[i] - k; ++a)
        inst.rhs.add(inserted(d[i] - a, k + a), -q2m1);
    }
  }
  return inst;
}

RelationInstance tor1_instance(long long A, long long B) {
  // Expand the two cubic kernels as polynomials in z; entry r is the
  // coefficient of z^r w^{3-r}.
  const std::array<RatFun2, 3> roots = {RatFun2::q1(), RatFun2::q2(),
                                        qq().inverse()};
  std::vector<RatFun2> c{RatFun2(1)}, cp{RatFun2(1)};
  for (const RatFun2& a : roots) {
    // c *= (z - w*a): z contributes at r+1, w at r.
    std::vector<RatFun2> next(c.size() + 1, RatFun2(0));
    for (std::size_t r = 0; r < c.size(); ++r) {
      next[r + 1] += c[r];
      next[r] -= c[r] * a;
    }
    c = std::move(next);
    // cp *= (z*a - w).
    std::vector<RatFun2> nextp(cp.size() + 1, RatFun2(0));
    for (std::size_t r = 0; r < cp.size(); ++r) {
      nextp[r + 1] += cp[r] * a;
      nextp[r] -= cp[r];
    }
    cp = std::move(nextp);
  }
  RelationInstance inst;
  for (long long r = 0; r <= 3; ++r) {
    inst.lhs += FormalElement::generator({A + r}, c[r]) *
                FormalElement::generator({B + 3 - r});
    inst.rhs += FormalElement::generator({B + 3 - r}, cp[r]) *
                FormalElement::generator({A + r});
  }
  return inst;
}

RelationInstance tor2_instance(long long m) {
  RelationInstance inst;
  inst.lhs = commutator(commutator(FormalElement::generator({m + 1}),
                                   FormalElement::generator({m - 1})),
                        FormalElement::generator({m}));
  return inst;
}

// ---- derivation ----

FormalElement partial_k(const FormalElement& x, int k) {
  if (k < 1) throw std::invalid_argument("partial_k: k must be positive");
  FormalElement out;
  for (const auto& [w, c] : x.terms) {
    for (std::size_t f = 0; f < w.factors.size(); ++f) {
      for (std::size_t p = 0; p < w.factors[f].size(); ++p) {
        EWord bumped = w;
        bumped.factors[f][p] += k;
        out.add(bumped, c);
      }
    }
  }
  return out;
}

// ---- parameter substitution and probe values ----

namespace {

bool is_symbolic(const ShuffleContext& ctx) {
  return ctx.q1 == RatFun2::q1() && ctx.q2 == RatFun2::q2();
}

RatFun2 eval_poly2(const IntPoly2& p, const ShuffleContext& ctx) {
  RatFun2 acc(0);
  for (const auto& [e, coef] : p.terms())
    acc += RatFun2(IntPoly2(coef)) * ctx.q1.pow(e.first) * ctx.q2.pow(e.second);
  return acc;
}

}  // namespace

RatFun2 substitute_params(const RatFun2& f, const ShuffleContext& ctx) {
  if (is_symbolic(ctx)) return f;
  return eval_poly2(f.num(), ctx) / eval_poly2(f.den(), ctx);
}

ShuffleContext probe_context(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(2, 9);
  auto draw = [&]() {
    for (;;) {
      int p = num(rng);
      int r = den(rng);
      if (p == 0 || p == r || p == -r) continue;
      return RatFun2(IntPoly2(p), IntPoly2(r));
    }
  };
  auto degenerate = [](const RatFun2& v) {
    return v.is_zero() || v == RatFun2(1) || v == RatFun2(-1);
  };
  for (;;) {
    ShuffleContext ctx;
    ctx.q1 = draw();
    ctx.q2 = draw();
    if (ctx.q1 == ctx.q2) continue;
    if (degenerate(ctx.q1) || degenerate(ctx.q2)) continue;
    if (degenerate(ctx.q1 * ctx.q2)) continue;
    return ctx;
  }
}

// ---- evaluation homomorphisms ----

std::map<int, SymLaurent> eval_shuffle(const FormalElement& x,
                                       const ShuffleContext& ctx) {
  std::map<int, SymLaurent> out;
  for (const auto& [w, c] : x.terms) {
    SymLaurent value = SymLaurent::scalar(substitute_params(c, ctx));
    for (const auto& row : w.factors)
      value = shuffle_product(value, r_element(row, ctx), ctx);
    const int strands = w.total_strands();
    auto it = out.find(strands);
    if (it == out.end()) it = out.emplace(strands, SymLaurent(strands)).first;
    it->second += value;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

CocenterReducer& CocenterBank::reducer(int n) {
  auto it = reducers_.find(n);
  if (it == reducers_.end()) it = reducers_.try_emplace(n, n).first;
  return it->second;
}

const CocenterVector& CocenterBank::word_class(const EWord& w) {
  auto it = classes_.find(w);
  if (it != classes_.end()) return it->second;
  const int strands = w.total_strands();
  CocenterVector value(strands);
  if (strands == 0) {
    value.add(ConvexPath{}, IntLaurent1(1));
  } else {
    long long shift = 0;
    for (const auto& row : w.factors)
      shift += 1 - static_cast<long long>(row.size());
    value = reducer(strands).e_class(w).scaled(IntLaurent1::q(shift));
  }
  return classes_.emplace(w, std::move(value)).first->second;
}

std::map<int, CocenterVector> eval_cocenter(const FormalElement& x,
                                            CocenterBank& bank) {
  std::map<int, CocenterVector> out;
  for (const auto& [w, c] : x.terms) {
    const IntLaurent1 coef = c.specialize_q();
    if (coef.is_zero()) continue;
    const int strands = w.total_strands();
    auto it = out.find(strands);
    if (it == out.end()) it = out.emplace(strands, CocenterVector(strands)).first;
    it->second += bank.word_class(w).scaled(coef);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.coords.empty())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::map<int, CocenterVector> eval_cocenter(const FormalElement& x) {
  CocenterBank bank;
  return eval_cocenter(x, bank);
}

// ---- one-row reduction ----

namespace {

/**
 * Memoized rewriting of E_d into words in one-row generators, implementing
 * the inductive surjectivity argument: push row entries rightward with the
 * two-sided first relation, then solve a commutator identity for the single
 * remaining column.
 */
class SingleRowReducer {
 public:
  const FormalElement& vec(const std::vector<long long>& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    FormalElement result;
    if (d.size() == 1) {
      result = FormalElement::generator(d);
    } else {
      auto [mono, rest] = to_single(d);
      long long total = 0;
      for (long long v : d) total += v;
      result = rest + column(static_cast<int>(d.size()), total).scaled(mono);
    }
    return memo_.emplace(d, std::move(result)).first->second;
  }

 private:
  /** E_e = scalar * E_{(0^{n-1}, sum e)} + rest, rest in one-row words. */
  std::pair<RatFun2, FormalElement> to_single(std::vector<long long> e) {
    const int n = static_cast<int>(e.size());
    RatFun2 scalar(1);
    FormalElement rest;
    for (;;) {
      int i = -1;
      for (int j = 0; j + 1 < n; ++j) {
        if (e[j] != 0) {
          i = j;
          break;
        }
      }
      if (i < 0) break;
      auto split = [&]() {
        std::vector<long long> left(e.begin(), e.begin() + i + 1);
        std::vector<long long> right(e.begin() + i + 1, e.end());
        return vec(left) * vec(right);
      };
      if (e[i] > 0) {
        rest += split().scaled(scalar * one_minus_q1());
        scalar *= qq();
        e[i] -= 1;
        e[i + 1] += 1;
      } else {
        e[i] += 1;
        e[i + 1] -= 1;
        scalar *= qq().inverse();
        rest -= split().scaled(scalar * one_minus_q1());
      }
    }
    return {std::move(scalar), std::move(rest)};
  }

  /** One-row expression for E_{(0^{n-1}, m)} via the commutator solves. */
  const FormalElement& column(int n, long long m) {
    const std::pair<int, long long> key{n, m};
    auto it = columns_.find(key);
    if (it != columns_.end()) return it->second;

    FormalElement comm;
    std::vector<std::vector<long long>> expansion;
    if (m < 0) {
      std::vector<long long> head(n - 2, 0);
      head.push_back(m);
      comm = commutator(vec(head), FormalElement::generator({0}));
      for (long long a = m; a <= -1; ++a) {
        std::vector<long long> row(n - 2, 0);
        row.push_back(a);
        row.push_back(m - a);
        expansion.push_back(std::move(row));
      }
    } else if (m > 0) {
      std::vector<long long> head(n - 2, 0);
      head.push_back(m);
      comm = commutator(FormalElement::generator({0}), vec(head));
      for (long long a = 1; a <= m; ++a) {
        std::vector<long long> row(n - 2, 0);
        row.push_back(m - a);
        row.push_back(a);
        expansion.push_back(std::move(row));
      }
    } else {
      std::vector<long long> head(n - 1, 0);
      head[0] = -1;
      comm = commutator(vec(head), FormalElement::generator({1}));
      expansion.emplace_back(n, 0);
      for (int i = 0; i + 2 <= n; ++i) {
        std::vector<long long> row(n, 0);
        row[0] = -1;
        row[1 + i] = 1;
        expansion.push_back(std::move(row));
      }
    }

    RatFun2 geometric(0);
    FormalElement rest;
    for (const auto& row : expansion) {
      auto [mono, part] = to_single(row);
      geometric += mono;
      rest += part;
    }
    const RatFun2 divisor = one_minus_q2() * geometric;
    if (divisor.is_zero())
      throw ScalarNotInvertible("reduce_single_rows: zero geometric divisor");
    FormalElement result =
        (comm - rest.scaled(one_minus_q2())).scaled(divisor.inverse());
    return columns_.emplace(key, std::move(result)).first->second;
  }

  std::map<std::vector<long long>, FormalElement> memo_;
  std::map<std::pair<int, long long>, FormalElement> columns_;
};

}  // namespace

FormalElement reduce_single_rows(int n, long long m) {
  if (n < 1) throw std::invalid_argument("reduce_single_rows: need n >= 1");
  std::vector<long long> d(n, 0);
  d.back() = m;
  SingleRowReducer reducer;
  return reducer.vec(d);
}

// ---- verification suites ----

namespace {

void for_each_vector(int n, long long bound,
                     const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> d(n, -bound);
  for (;;) {
    fn(d);
    int pos = n - 1;
    while (pos >= 0 && d[pos] == bound) {
      d[pos] = -bound;
      --pos;
    }
    if (pos < 0) return;
    ++d[pos];
  }
}

std::string render_cocenter(const std::map<int, CocenterVector>& v) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, value] : v) {
    if (!first) out << "; ";
    first = false;
    out << "strands " << n << ": " << value.str();
  }
  return out.str();
}

std::string render_shuffle(const std::map<int, SymLaurent>& v) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, value] : v) {
    if (!first) out << "; ";
    first = false;
    out << "vars " << n << ": " << value.str();
  }
  return out.str();
}

}  // namespace

std::string VerifyReport::str() const {
  std::ostringstream out;
  out << "verify " << relation << " target=" << target
      << " instances=" << instances << " failures=" << failures.size();
  for (const auto& f : failures)
    out << "\n  FAIL " << f.instance << ": " << f.detail;
  return out.str();
}

VerifyReport verify_suite(const std::string& relation, const std::string& target,
                          const VerifyBounds& bounds, const ShuffleContext& ctx) {
  if (target != "cocenter" && target != "shuffle")
    throw std::invalid_argument("verify_suite: unknown target '" + target + "'");

  std::vector<std::pair<std::string, RelationInstance>> instances;
  if (relation == "rel-a1" || relation == "rel-shuf") {
    for (int n = 2; n <= bounds.n_max; ++n) {
      for_each_vector(n, bounds.d_max, [&](const std::vector<long long>& d) {
        for (int i = 1; i <= n - 1; ++i)
          instances.emplace_back("d=" + vec_str(d) + " i=" + std::to_string(i),
                                 rel_a1_instance(d, i));
      });
    }
  } else if (relation == "rel-a2") {
    for (int n = 1; n <= bounds.n_max; ++n) {
      for_each_vector(n, bounds.d_max, [&](const std::vector<long long>& d) {
        for (long long k = -bounds.k_max; k <= bounds.k_max; ++k)
          instances.emplace_back("k=" + std::to_string(k) + " d=" + vec_str(d),
                                 rel_a2_instance(k, d));
      });
    }
  } else if (relation == "tor1") {
    for (long long A = -bounds.d_max; A <= bounds.d_max; ++A)
      for (long long B = -bounds.d_max; B <= bounds.d_max; ++B)
        instances.emplace_back(
            "A=" + std::to_string(A) + " B=" + std::to_string(B),
            tor1_instance(A, B));
  } else if (relation == "tor2") {
    for (long long m = -bounds.k_max; m <= bounds.k_max; ++m)
      instances.emplace_back("m=" + std::to_string(m), tor2_instance(m));
  } else {
    throw std::invalid_argument("verify_suite: unknown relation '" + relation + "'");
  }

  VerifyReport report;
  report.relation = relation;
  report.target = target;
  CocenterBank bank;
  for (const auto& [description, instance] : instances) {
    ++report.instances;
    const FormalElement diff = instance.lhs - instance.rhs;
    std::string detail;
    if (target == "cocenter") {
      const auto value = eval_cocenter(diff, bank);
      if (!value.empty()) detail = render_cocenter(value);
    } else {
      const auto value = eval_shuffle(diff, ctx);
      if (!value.empty()) detail = render_shuffle(value);
    }
    if (!detail.empty()) report.failures.push_back({description, detail});
  }
  return report;
}

}  // namespace annular
