#include "annular/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace annular {

namespace {

// ---- univariate polynomials over Z, index = degree ----

using UP = std::vector<Int>;

void up_trim(UP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool up_is_zero(const UP& p) { return p.empty(); }

long up_deg(const UP& p) { return static_cast<long>(p.size()) - 1; }

UP up_mul(const UP& a, const UP& b) {
  if (up_is_zero(a) || up_is_zero(b)) return {};
  UP r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  up_trim(r);
  return r;
}

UP up_scale(const UP& a, const Int& c) {
  if (c == 0) return {};
  UP r(a);
  for (auto& x : r) x *= c;
  return r;
}

UP up_sub(const UP& a, const UP& b) {
  UP r(a);
  if (r.size() < b.size()) r.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  up_trim(r);
  return r;
}

Int up_content(const UP& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UP up_exact_div_int(const UP& p, const Int& c) {
  UP r(p);
  for (auto& x : r) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw std::logic_error("up_exact_div_int: inexact");
    x = q;
  }
  return r;
}

// Exact division in Z[x]; throws when the quotient does not exist.
UP up_exact_div(const UP& num, const UP& den) {
  if (up_is_zero(den)) throw DivisionByZero("polynomial division by zero");
  if (up_is_zero(num)) return {};
  if (num.size() < den.size()) throw NonLaurent("univariate division: degree too small");
  UP rem(num);
  UP quot(num.size() - den.size() + 1, Int(0));
  const Int& lead = den.back();
  while (!up_is_zero(rem)) {
    if (rem.size() < den.size()) throw NonLaurent("univariate division: nonzero remainder");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw NonLaurent("univariate division: leading coefficient not divisible");
    std::size_t shift = rem.size() - den.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
    up_trim(rem);
  }
  up_trim(quot);
  return quot;
}

// lc(b)^(deg a - deg b + 1) * a mod b, the pseudo-remainder.
UP up_pseudo_rem(UP a, const UP& b) {
  long db = up_deg(b);
  const Int& lb = b.back();
  while (!up_is_zero(a) && up_deg(a) >= db) {
    long shift = up_deg(a) - db;
    Int la = a.back();
    a = up_scale(a, lb);
    UP sub(static_cast<std::size_t>(shift), Int(0));
    sub.insert(sub.end(), b.begin(), b.end());
    a = up_sub(a, up_scale(sub, la));
  }
  return a;
}

UP up_gcd(UP a, UP b) {
  if (up_is_zero(a)) {
    if (!up_is_zero(b) && b.back() < 0) return up_scale(b, Int(-1));
    return b;
  }
  if (up_is_zero(b)) {
    if (a.back() < 0) return up_scale(a, Int(-1));
    return a;
  }
  Int ca = up_content(a), cb = up_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = up_exact_div_int(a, ca);
  b = up_exact_div_int(b, cb);
  if (up_deg(a) < up_deg(b)) std::swap(a, b);
  // primitive polynomial remainder sequence
  while (true) {
    UP r = up_pseudo_rem(a, b);
    if (up_is_zero(r)) break;
    r = up_exact_div_int(r, up_content(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (b.back() < 0) b = up_scale(b, Int(-1));
  return up_scale(b, cg);
}

// ---- bivariate polynomials: index = q2-degree, coefficients in Z[q1] ----

using BP = std::vector<UP>;

void bp_trim(BP& p) {
  while (!p.empty() && up_is_zero(p.back())) p.pop_back();
}

bool bp_is_zero(const BP& p) { return p.empty(); }

BP bp_mul(const BP& a, const BP& b) {
  if (bp_is_zero(a) || bp_is_zero(b)) return {};
  BP r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!up_is_zero(a[i]) && !up_is_zero(b[j]))
        r[i + j] = up_sub(r[i + j], up_scale(up_mul(a[i], b[j]), Int(-1)));
  bp_trim(r);
  return r;
}

BP bp_scale(const BP& a, const UP& c) {
  BP r(a);
  for (auto& x : r) x = up_mul(x, c);
  bp_trim(r);
  return r;
}

BP bp_sub(const BP& a, const BP& b) {
  BP r(a);
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = up_sub(r[i], b[i]);
  bp_trim(r);
  return r;
}

UP bp_content(const BP& p) {
  UP g;
  for (const auto& c : p) g = up_gcd(g, c);
  return g;
}

BP bp_exact_div_up(const BP& p, const UP& c) {
  BP r(p);
  for (auto& x : r)
    if (!up_is_zero(x)) x = up_exact_div(x, c);
  return r;
}

// Exact division in Z[q1][q2]; throws NonLaurent when inexact.
BP bp_exact_div(const BP& num, const BP& den) {
  if (bp_is_zero(den)) throw DivisionByZero("polynomial division by zero");
  if (bp_is_zero(num)) return {};
  if (num.size() < den.size()) throw NonLaurent("bivariate division: degree too small");
  BP rem(num);
  BP quot(num.size() - den.size() + 1);
  const UP& lead = den.back();
  while (!bp_is_zero(rem)) {
    if (rem.size() < den.size()) throw NonLaurent("bivariate division: nonzero remainder");
    UP qc = up_exact_div(rem.back(), lead);
    std::size_t shift = rem.size() - den.size();
    quot[shift] = qc;
    for (std::size_t i = 0; i < den.size(); ++i)
      rem[shift + i] = up_sub(rem[shift + i], up_mul(qc, den[i]));
    bp_trim(rem);
  }
  bp_trim(quot);
  return quot;
}

BP bp_pseudo_rem(BP a, const BP& b) {
  std::size_t db = b.size() - 1;
  const UP& lb = b.back();
  while (!bp_is_zero(a) && a.size() - 1 >= db && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UP la = a.back();
    a = bp_scale(a, lb);
    BP sub(shift);
    sub.insert(sub.end(), b.begin(), b.end());
    a = bp_sub(a, bp_scale(sub, la));
    if (!bp_is_zero(a) && a.size() > shift + db) {
      // pseudo-division must strictly drop the q2-degree
      throw std::logic_error("bp_pseudo_rem: degree did not drop");
    }
  }
  return a;
}

BP bp_gcd(BP a, BP b) {
  auto normalized = [](BP p) {
    if (bp_is_zero(p)) return p;
    UP c = bp_content(p);
    p = bp_exact_div_up(p, c);
    if (p.back().back() < 0)
      for (auto& x : p) x = up_scale(x, Int(-1));
    // restore the content so gcd(0, b) = b exactly
    return bp_scale(p, c.back() < 0 ? up_scale(c, Int(-1)) : c);
  };
  if (bp_is_zero(a)) return normalized(std::move(b));
  if (bp_is_zero(b)) return normalized(std::move(a));
  UP ca = bp_content(a), cb = bp_content(b);
  UP cg = up_gcd(ca, cb);
  a = bp_exact_div_up(a, ca);
  b = bp_exact_div_up(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    BP r = bp_pseudo_rem(a, b);
    if (bp_is_zero(r)) break;
    r = bp_exact_div_up(r, bp_content(r));
    a = std::move(b);
    b = std::move(r);
  }
  UP bc = bp_content(b);
  b = bp_exact_div_up(b, bc);
  if (b.back().back() < 0)
    for (auto& x : b) x = up_scale(x, Int(-1));
  return bp_scale(b, cg);
}

// ---- conversions between the sparse Laurent maps and cleared BP form ----

struct Cleared {
  BP poly;
  long shift1 = 0, shift2 = 0;  // original = poly * q1^shift1 * q2^shift2
};

Cleared to_bp(const IntPoly2& p) {
  Cleared out;
  if (p.is_zero()) return out;
  long min1 = std::numeric_limits<long>::max(), min2 = min1;
  for (const auto& [e, c] : p.terms()) {
    min1 = std::min(min1, e.first);
    min2 = std::min(min2, e.second);
  }
  out.shift1 = min1;
  out.shift2 = min2;
  for (const auto& [e, c] : p.terms()) {
    std::size_t d2 = static_cast<std::size_t>(e.second - min2);
    std::size_t d1 = static_cast<std::size_t>(e.first - min1);
    if (out.poly.size() <= d2) out.poly.resize(d2 + 1);
    UP& row = out.poly[d2];
    if (row.size() <= d1) row.resize(d1 + 1, Int(0));
    row[d1] = c;
  }
  return out;
}

IntPoly2 from_bp(const BP& p, long shift1, long shift2) {
  IntPoly2 out;
  for (std::size_t d2 = 0; d2 < p.size(); ++d2)
    for (std::size_t d1 = 0; d1 < p[d2].size(); ++d1)
      if (p[d2][d1] != 0)
        out += IntPoly2::monomial(p[d2][d1], static_cast<long>(d1) + shift1,
                                  static_cast<long>(d2) + shift2);
  return out;
}

// ---- shared lexical helpers for the canonical text formats ----

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!consume(c)) throw ParseError(pos, what, found_here());
  }
  std::string found_here() {
    skip_ws();
    if (pos >= text.size()) return "end of input";
    return "'" + text.substr(pos, 1) + "'";
  }
  bool consume_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  long parse_long(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(start, what, found_here());
    return std::stol(text.substr(start, pos - start));
  }
  Int parse_nat(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(start, what, found_here());
    return Int(text.substr(start, pos - start));
  }
};

std::string int_str(const Int& c) { return c.get_str(); }

// Renders c * mon with sign handling shared by both polynomial rings;
// `mon` is empty for the constant term.
void render_term(std::ostringstream& out, bool first, const Int& c, const std::string& mon) {
  Int a = c >= 0 ? c : Int(-c);
  std::string magnitude;
  if (mon.empty())
    magnitude = int_str(a);
  else if (a == 1)
    magnitude = mon;
  else
    magnitude = int_str(a) + "*" + mon;
  if (first)
    out << (c < 0 ? "-" : "") << magnitude;
  else
    out << (c < 0 ? " - " : " + ") << magnitude;
}

std::string power_str(const std::string& var, long e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

// ---- IntLaurent1 ----

IntLaurent1::IntLaurent1(long c) {
  if (c != 0) terms_[0] = Int(c);
}

IntLaurent1::IntLaurent1(Int c) {
  if (c != 0) terms_[0] = std::move(c);
}

IntLaurent1 IntLaurent1::monomial(Int c, long e) {
  IntLaurent1 p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

IntLaurent1 IntLaurent1::q(long e) { return monomial(Int(1), e); }

IntLaurent1 qpow(long e) { return IntLaurent1::q(e); }

bool IntLaurent1::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void IntLaurent1::add_term(long e, const Int& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntLaurent1& IntLaurent1::operator+=(const IntLaurent1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntLaurent1& IntLaurent1::operator-=(const IntLaurent1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
  return *this;
}

IntLaurent1 IntLaurent1::operator-() const {
  IntLaurent1 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntLaurent1 operator*(const IntLaurent1& a, const IntLaurent1& b) {
  IntLaurent1 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

IntLaurent1 IntLaurent1::pow(unsigned long k) const {
  IntLaurent1 r(1);
  for (unsigned long i = 0; i < k; ++i) r *= *this;
  return r;
}

IntLaurent1 IntLaurent1::exact_div(const IntLaurent1& num, const IntLaurent1& den) {
  if (den.is_zero()) throw DivisionByZero("IntLaurent1: division by zero");
  if (num.is_zero()) return IntLaurent1();
  long num_min = num.terms_.begin()->first;
  long den_min = den.terms_.begin()->first;
  // clear to ordinary polynomials in q
  UP n(static_cast<std::size_t>(num.terms_.rbegin()->first - num_min + 1), Int(0));
  for (const auto& [e, c] : num.terms_) n[static_cast<std::size_t>(e - num_min)] = c;
  UP d(static_cast<std::size_t>(den.terms_.rbegin()->first - den_min + 1), Int(0));
  for (const auto& [e, c] : den.terms_) d[static_cast<std::size_t>(e - den_min)] = c;
  UP quotient = up_exact_div(n, d);
  IntLaurent1 out;
  long base = num_min - den_min;
  for (std::size_t i = 0; i < quotient.size(); ++i)
    if (quotient[i] != 0) out.terms_[base + static_cast<long>(i)] = quotient[i];
  return out;
}

std::string IntLaurent1::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    render_term(out, first, c, e == 0 ? "" : power_str("q", e));
    first = false;
  }
  return out.str();
}

IntLaurent1 IntLaurent1::parse(const std::string& text) {
  Cursor cur{text};
  IntLaurent1 out;
  bool negative = cur.consume('-');
  while (true) {
    Int coeff(1);
    long exponent = 0;
    bool have_coeff = false, have_mon = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.parse_nat("coefficient");
      have_coeff = true;
    }
    if ((!have_coeff || cur.consume('*')) && cur.peek() == 'q') {
      cur.expect('q', "'q'");
      exponent = cur.consume('^') ? cur.parse_long("exponent") : 1;
      have_mon = true;
    }
    if (!have_coeff && !have_mon) throw ParseError(cur.pos, "term", cur.found_here());
    out.add_term(exponent, negative ? Int(-coeff) : coeff);
    if (cur.at_end()) break;
    if (cur.consume('+'))
      negative = false;
    else if (cur.consume('-'))
      negative = true;
    else
      throw ParseError(cur.pos, "'+', '-' or end of input", cur.found_here());
  }
  return out;
}

// ---- IntPoly2 ----

IntPoly2::IntPoly2(long c) {
  if (c != 0) terms_[{0, 0}] = Int(c);
}

IntPoly2::IntPoly2(Int c) {
  if (c != 0) terms_[{0, 0}] = std::move(c);
}

IntPoly2 IntPoly2::monomial(Int c, long e1, long e2) {
  IntPoly2 p;
  if (c != 0) p.terms_[{e1, e2}] = std::move(c);
  return p;
}

IntPoly2 IntPoly2::q1(long e) { return monomial(Int(1), e, 0); }
IntPoly2 IntPoly2::q2(long e) { return monomial(Int(1), 0, e); }

bool IntPoly2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
         terms_.begin()->second == 1;
}

void IntPoly2::add_term(Key e, const Int& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
  return *this;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

IntPoly2 IntPoly2::pow(unsigned long k) const {
  IntPoly2 r(1);
  for (unsigned long i = 0; i < k; ++i) r *= *this;
  return r;
}

IntPoly2 IntPoly2::shifted(long e1, long e2) const {
  IntPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_[{e.first + e1, e.second + e2}] = c;
  return r;
}

IntLaurent1 IntPoly2::substitute_q() const {
  IntLaurent1 out;
  for (const auto& [e, c] : terms_) out.add_term(-2 * e.first + 2 * e.second, c);
  return out;
}

std::string IntPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mon;
    if (e.first != 0) mon = power_str("q1", e.first);
    if (e.second != 0) {
      if (!mon.empty()) mon += "*";
      mon += power_str("q2", e.second);
    }
    render_term(out, first, c, mon);
    first = false;
  }
  return out.str();
}

IntPoly2 IntPoly2::parse(const std::string& text) {
  Cursor cur{text};
  IntPoly2 out;
  bool negative = cur.consume('-');
  while (true) {
    Int coeff(1);
    long e1 = 0, e2 = 0;
    bool have_coeff = false, have_mon = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.parse_nat("coefficient");
      have_coeff = true;
    }
    bool expect_mon = !have_coeff;
    if (have_coeff && cur.consume('*')) expect_mon = true;
    while (expect_mon || cur.peek() == 'q') {
      if (cur.consume_word("q1"))
        e1 += cur.consume('^') ? cur.parse_long("exponent") : 1;
      else if (cur.consume_word("q2"))
        e2 += cur.consume('^') ? cur.parse_long("exponent") : 1;
      else if (expect_mon)
        throw ParseError(cur.pos, "'q1' or 'q2'", cur.found_here());
      else
        break;
      have_mon = true;
      expect_mon = cur.consume('*');
    }
    if (!have_coeff && !have_mon) throw ParseError(cur.pos, "term", cur.found_here());
    out.add_term({e1, e2}, negative ? Int(-coeff) : coeff);
    if (cur.at_end()) break;
    if (cur.consume('+'))
      negative = false;
    else if (cur.consume('-'))
      negative = true;
    else
      throw ParseError(cur.pos, "'+', '-' or end of input", cur.found_here());
  }
  return out;
}

// ---- RatFun2 ----

IntPoly2 poly2_gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly2();
  Cleared ca = to_bp(a), cb = to_bp(b);
  BP g = bp_gcd(ca.poly, cb.poly);
  return from_bp(g, 0, 0);
}

IntPoly2 poly2_exact_div(const IntPoly2& num, const IntPoly2& den) {
  if (den.is_zero()) throw DivisionByZero("IntPoly2: division by zero");
  if (num.is_zero()) return IntPoly2();
  Cleared cn = to_bp(num), cd = to_bp(den);
  BP q = bp_exact_div(cn.poly, cd.poly);
  return from_bp(q, cn.shift1 - cd.shift1, cn.shift2 - cd.shift2);
}

RatFun2::RatFun2(IntPoly2 num, IntPoly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("RatFun2: zero denominator");
  normalize();
}

void RatFun2::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly2(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly2 g = poly2_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly2_exact_div(num_, g);
      den_ = poly2_exact_div(den_, g);
    }
  }
  // make the denominator's grlex-minimal monomial the positive constant 1*(0,0)
  auto min_term = den_.terms().begin();
  long s1 = min_term->first.first, s2 = min_term->first.second;
  if (s1 != 0 || s2 != 0) {
    den_ = den_.shifted(-s1, -s2);
    num_ = num_.shifted(-s1, -s2);
  }
  if (den_.terms().begin()->second < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

bool RatFun2::is_unit_monomial() const {
  if (!den_.is_one() || !num_.is_monomial()) return false;
  const Int& c = num_.terms().begin()->second;
  return c == 1 || c == -1;
}

RatFun2& RatFun2::operator+=(const RatFun2& o) {
  IntPoly2 n = num_ * o.den_ + o.num_ * den_;
  IntPoly2 d = den_ * o.den_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

RatFun2& RatFun2::operator-=(const RatFun2& o) {
  IntPoly2 n = num_ * o.den_ - o.num_ * den_;
  IntPoly2 d = den_ * o.den_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

RatFun2 RatFun2::operator-() const {
  RatFun2 r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero() || b.is_zero()) return RatFun2();
  RatFun2 r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
  if (b.is_zero()) throw DivisionByZero("RatFun2: division by zero");
  if (a.is_zero()) return RatFun2();
  RatFun2 r;
  r.num_ = a.num_ * b.den_;
  r.den_ = a.den_ * b.num_;
  r.normalize();
  return r;
}

RatFun2 RatFun2::inverse() const { return RatFun2(1) / *this; }

RatFun2 RatFun2::pow(long k) const {
  RatFun2 base = k >= 0 ? *this : inverse();
  RatFun2 r(1);
  for (long i = 0, m = k >= 0 ? k : -k; i < m; ++i) r *= base;
  return r;
}

bool operator<(const RatFun2& a, const RatFun2& b) {
  auto key = [](const RatFun2& r) {
    std::vector<std::pair<std::pair<long, long>, Int>> flat;
    for (const auto& [e, c] : r.num().terms()) flat.emplace_back(e, c);
    flat.emplace_back(std::pair<long, long>{std::numeric_limits<long>::min(), 0}, Int(0));
    for (const auto& [e, c] : r.den().terms()) flat.emplace_back(e, c);
    return flat;
  };
  return key(a) < key(b);
}

IntLaurent1 RatFun2::specialize_q() const {
  IntLaurent1 n = num_.substitute_q();
  IntLaurent1 d = den_.substitute_q();
  if (d.is_zero())
    throw NonLaurent("specialize_q: denominator vanishes at q1=q^-2, q2=q^2");
  try {
    return IntLaurent1::exact_div(n, d);
  } catch (const NonLaurent&) {
    throw NonLaurent("specialize_q: " + str() + " is not Laurent at q1=q^-2, q2=q^2");
  }
}

std::string RatFun2::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun2 RatFun2::parse(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.peek() != '(') {
    IntPoly2 p = IntPoly2::parse(text);
    return RatFun2(std::move(p));
  }
  std::size_t depth = 0, split = std::string::npos;
  for (std::size_t i = cur.pos; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') {
      if (depth == 0) throw ParseError(i, "balanced parentheses", "')'");
      --depth;
      if (depth == 0 && split == std::string::npos) split = i;
    }
  }
  if (split == std::string::npos || split + 1 >= text.size())
    throw ParseError(text.size(), "'/(denominator)'", "end of input");
  std::size_t open = text.find('(', cur.pos);
  IntPoly2 num = IntPoly2::parse(text.substr(open + 1, split - open - 1));
  Cursor tail{text, split + 1};
  tail.expect('/', "'/'");
  tail.expect('(', "'('");
  std::size_t dstart = tail.pos;
  std::size_t dend = text.rfind(')');
  if (dend == std::string::npos || dend < dstart)
    throw ParseError(text.size(), "')'", "end of input");
  IntPoly2 den = IntPoly2::parse(text.substr(dstart, dend - dstart));
  Cursor rest{text, dend + 1};
  if (!rest.at_end()) throw ParseError(rest.pos, "end of input", rest.found_here());
  return RatFun2(std::move(num), std::move(den));
}

}  // namespace annular
