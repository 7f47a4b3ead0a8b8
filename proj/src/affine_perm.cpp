#include "annular/affine_perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace annular {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// residue of m in [1..n]
long long residue_1n(long long m, long long n) {
  long long r = m - floor_div(m - 1, n) * n;
  return r;
}

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

// ---- Rational ----

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = gcd_ll(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// ---- ConvexPath ----

namespace {

// slope ascending, ties by (l, m) lexicographically ascending
bool step_less(const ConvexPath::Step& a, const ConvexPath::Step& b) {
  __int128 lhs = static_cast<__int128>(a.second) * b.first;
  __int128 rhs = static_cast<__int128>(b.second) * a.first;
  if (lhs != rhs) return lhs < rhs;
  return a < b;
}

}  // namespace

ConvexPath::ConvexPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_)
    if (s.first < 1) throw std::invalid_argument("ConvexPath: step width must be >= 1");
  std::sort(steps_.begin(), steps_.end(), step_less);
}

long long ConvexPath::total_strands() const {
  long long t = 0;
  for (const auto& s : steps_) t += s.first;
  return t;
}

bool operator<(const ConvexPath& a, const ConvexPath& b) {
  return std::lexicographical_compare(a.steps_.begin(), a.steps_.end(), b.steps_.begin(),
                                      b.steps_.end(), step_less);
}

std::string ConvexPath::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out << ",";
    out << "(" << steps_[i].first << "," << steps_[i].second << ")";
  }
  out << "]";
  return out.str();
}

ConvexPath ConvexPath::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c, const std::string& what) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, what,
                       pos >= text.size() ? "end of input" : "'" + text.substr(pos, 1) + "'");
    ++pos;
  };
  auto parse_ll = [&]() -> long long {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits)
      throw ParseError(start, "integer",
                       pos >= text.size() ? "end of input" : "'" + text.substr(pos, 1) + "'");
    return std::stoll(text.substr(start, pos - start));
  };
  expect('[', "'['");
  std::vector<ConvexPath::Step> steps;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      expect('(', "'('");
      long long l = parse_ll();
      expect(',', "','");
      long long m = parse_ll();
      expect(')', "')'");
      steps.emplace_back(l, m);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']', "',' or ']'");
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, "end of input", "'" + text.substr(pos, 1) + "'");
  return ConvexPath(std::move(steps));
}

// ---- AffinePermutation ----

AffinePermutation::AffinePermutation(int n, std::vector<long long> window)
    : n_(n), window_(std::move(window)) {
  if (n_ < 1) throw StrandMismatch("AffinePermutation: need at least one strand");
  if (window_.size() != static_cast<std::size_t>(n_))
    throw StrandMismatch("AffinePermutation: window size differs from strand count");
  std::vector<bool> seen(n_, false);
  for (long long v : window_) {
    long long r = residue_1n(v, n_) - 1;
    if (seen[r])
      throw std::invalid_argument("AffinePermutation: window residues must be distinct mod n");
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long long> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, long long i) {
  if (n < 2) throw StrandMismatch("simple_reflection: needs n >= 2");
  std::vector<long long> w(n);
  for (int j = 1; j <= n; ++j) {
    long long m = j;
    if (residue_1n(m - i, n) == static_cast<long long>(n))  // j == i mod n
      m = j + 1;
    else if (residue_1n(m - i - 1, n) == static_cast<long long>(n))  // j == i+1 mod n
      m = j - 1;
    w[j - 1] = m;
  }
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::rotation(int n) {
  std::vector<long long> w(n);
  std::iota(w.begin(), w.end(), 2);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::translation(std::vector<long long> d) {
  int n = static_cast<int>(d.size());
  std::vector<long long> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i + n * d[i - 1];
  return AffinePermutation(n, std::move(w));
}

long long AffinePermutation::operator()(long long m) const {
  long long r = residue_1n(m, n_);
  long long k = (m - r) / n_;
  return window_[r - 1] + k * n_;
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& other) const {
  if (n_ != other.n_) throw StrandMismatch("compose: strand counts differ");
  std::vector<long long> w(n_);
  for (int i = 1; i <= n_; ++i) w[i - 1] = (*this)(other(i));
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long long> w(n_);
  for (int i = 1; i <= n_; ++i) {
    long long v = window_[i - 1];
    long long r = residue_1n(v, n_);
    long long k = (v - r) / n_;
    w[r - 1] = i - k * n_;
  }
  return AffinePermutation(n_, std::move(w));
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

long long AffinePermutation::degree() const {
  long long s = 0;
  for (int i = 1; i <= n_; ++i) s += window_[i - 1] - i;
  return s / n_;
}

long long AffinePermutation::length() const {
  long long l = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      long long f = floor_div(window_[j - 1] - window_[i - 1], n_);
      l += f < 0 ? -f : f;
    }
  return l;
}

bool AffinePermutation::right_descent(long long i) const {
  return (*this)(i) > (*this)(i + 1);
}

AffinePermutation AffinePermutation::mul_simple(long long i) const {
  // (v s_i)(j) = v(s_i(j)): swap the window entries at residues i, i+1
  std::vector<long long> w(n_);
  for (int j = 1; j <= n_; ++j) {
    long long m = j;
    if (residue_1n(m - i, n_) == static_cast<long long>(n_))
      m = j + 1;
    else if (residue_1n(m - i - 1, n_) == static_cast<long long>(n_))
      m = j - 1;
    w[j - 1] = (*this)(m);
  }
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::pre_mul_simple(long long i) const {
  std::vector<long long> w(n_);
  for (int j = 1; j <= n_; ++j) {
    long long m = window_[j - 1];
    if (residue_1n(m - i, n_) == static_cast<long long>(n_))
      m += 1;
    else if (residue_1n(m - i - 1, n_) == static_cast<long long>(n_))
      m -= 1;
    w[j - 1] = m;
  }
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::mul_rotation(long long power) const {
  std::vector<long long> w(n_);
  for (int j = 1; j <= n_; ++j) w[j - 1] = (*this)(j + power);
  return AffinePermutation(n_, std::move(w));
}

long long AffinePermutation::length_by_reduction() const {
  return static_cast<long long>(canonical_word().letters.size());
}

AffinePermutation::CanonicalWord AffinePermutation::canonical_word() const {
  CanonicalWord out;
  out.rotation_power = degree();
  // alpha = pi^{-k} * v has degree zero and the same length as v
  AffinePermutation alpha = identity(n_).mul_rotation(-out.rotation_power).compose(*this);
  std::vector<int> reversed;
  while (!alpha.is_identity()) {
    bool found = false;
    for (int i = 0; i < n_; ++i) {
      if (alpha.right_descent(i)) {
        reversed.push_back(i);
        alpha = alpha.mul_simple(i);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("canonical_word: non-identity element without right descent");
  }
  out.letters.assign(reversed.rbegin(), reversed.rend());
  return out;
}

AffinePermutation::TranslationFactor AffinePermutation::translation_finite_factor() const {
  TranslationFactor out;
  out.w.resize(n_);
  out.d.assign(n_, 0);
  for (int i = 1; i <= n_; ++i)
    out.w[i - 1] = static_cast<int>(residue_1n(window_[i - 1], n_));
  std::vector<int> winv(n_);
  for (int i = 1; i <= n_; ++i) winv[out.w[i - 1] - 1] = i;
  for (int j = 1; j <= n_; ++j) out.d[j - 1] = (window_[winv[j - 1] - 1] - j) / n_;
  return out;
}

std::vector<Rational> AffinePermutation::newton_point() const {
  TranslationFactor f = translation_finite_factor();
  std::vector<Rational> out;
  std::vector<bool> seen(n_, false);
  for (int start = 1; start <= n_; ++start) {
    if (seen[start - 1]) continue;
    long long len = 0, sum = 0;
    int i = start;
    do {
      seen[i - 1] = true;
      sum += f.d[i - 1];
      ++len;
      i = f.w[i - 1];
    } while (i != start);
    for (long long k = 0; k < len; ++k) out.emplace_back(sum, len);
  }
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return out;
}

ConvexPath AffinePermutation::convex_path() const {
  TranslationFactor f = translation_finite_factor();
  std::vector<ConvexPath::Step> steps;
  std::vector<bool> seen(n_, false);
  for (int start = 1; start <= n_; ++start) {
    if (seen[start - 1]) continue;
    long long len = 0, sum = 0;
    int i = start;
    do {
      seen[i - 1] = true;
      sum += f.d[i - 1];
      ++len;
      i = f.w[i - 1];
    } while (i != start);
    steps.emplace_back(len, sum);
  }
  return ConvexPath(std::move(steps));
}

std::string AffinePermutation::window_str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < n_; ++i) {
    if (i) out << ",";
    out << window_[i];
  }
  out << ")";
  return out.str();
}

// ---- generator words ----

AffinePermutation from_word(int n, const GeneratorWord& word) {
  AffinePermutation v = AffinePermutation::identity(n);
  for (const auto& letter : word) {
    long long e = letter.exponent;
    switch (letter.kind) {
      case GenLetter::Kind::Identity:
        break;
      case GenLetter::Kind::Simple: {
        AffinePermutation s = AffinePermutation::simple_reflection(n, letter.index);
        // s_i is an involution
        if (e % 2 != 0) v = v.compose(s);
        break;
      }
      case GenLetter::Kind::Rotation:
        v = v.mul_rotation(e);
        break;
      case GenLetter::Kind::Translation: {
        if (letter.index < 1 || letter.index > n)
          throw StrandMismatch("from_word: y index out of range");
        std::vector<long long> d(n, 0);
        d[letter.index - 1] = e;
        v = v.compose(AffinePermutation::translation(std::move(d)));
        break;
      }
    }
  }
  return v;
}

GeneratorWord parse_generator_word(const std::string& text, int n) {
  GeneratorWord out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_ll = [&](const std::string& what) -> long long {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits)
      throw ParseError(start, what,
                       pos >= text.size() ? "end of input" : "'" + text.substr(pos, 1) + "'");
    return std::stoll(text.substr(start, pos - start));
  };
  skip();
  if (pos >= text.size()) throw ParseError(pos, "generator word", "end of input");
  while (true) {
    skip();
    GenLetter letter;
    if (text.compare(pos, 2, "pi") == 0) {
      pos += 2;
      letter.kind = GenLetter::Kind::Rotation;
    } else if (text.compare(pos, 2, "id") == 0) {
      pos += 2;
      letter.kind = GenLetter::Kind::Identity;
    } else if (pos < text.size() && text[pos] == 's') {
      ++pos;
      letter.kind = GenLetter::Kind::Simple;
      letter.index = parse_ll("simple reflection index");
      if (n < 2) throw StrandMismatch("parse_generator_word: s letters need n >= 2");
      if (letter.index < 0 || letter.index >= n)
        throw StrandMismatch("parse_generator_word: s index must lie in 0.." +
                             std::to_string(n - 1));
    } else if (pos < text.size() && text[pos] == 'y') {
      ++pos;
      letter.kind = GenLetter::Kind::Translation;
      letter.index = parse_ll("translation index");
      if (letter.index < 1 || letter.index > n)
        throw StrandMismatch("parse_generator_word: y index must lie in 1.." +
                             std::to_string(n));
    } else {
      throw ParseError(pos, "'s', 'y', 'pi' or 'id'",
                       pos >= text.size() ? "end of input" : "'" + text.substr(pos, 1) + "'");
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      letter.exponent = parse_ll("exponent");
    }
    out.push_back(letter);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '*')
      throw ParseError(pos, "'*' or end of input", "'" + text.substr(pos, 1) + "'");
    ++pos;
  }
  return out;
}

std::string generator_word_str(const GeneratorWord& word) {
  std::ostringstream out;
  bool first = true;
  for (const auto& letter : word) {
    if (!first) out << "*";
    first = false;
    switch (letter.kind) {
      case GenLetter::Kind::Identity: out << "id"; break;
      case GenLetter::Kind::Simple: out << "s" << letter.index; break;
      case GenLetter::Kind::Rotation: out << "pi"; break;
      case GenLetter::Kind::Translation: out << "y" << letter.index; break;
    }
    if (letter.exponent != 1) out << "^" << letter.exponent;
  }
  if (first) out << "id";
  return out.str();
}

}  // namespace annular
