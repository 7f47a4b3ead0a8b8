#include "annular/hecke.hpp"

#include <cctype>
#include <sstream>

namespace annular {

namespace {

// q - q^-1, the coefficient of the quadratic correction
IntLaurent1 qdiff() { return qpow(1) - qpow(-1); }

struct WordCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  std::string found_here() {
    skip_ws();
    if (pos >= text.size()) return "end of input";
    return "'" + text.substr(pos, 1) + "'";
  }
  long long parse_ll(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(start, what, found_here());
    return std::stoll(text.substr(start, pos - start));
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

}  // namespace

// ---- braid words ----

BraidWord parse_braid_word(const std::string& text, int n) {
  WordCursor cur{text};
  BraidWord out;
  cur.skip_ws();
  if (cur.pos >= text.size()) throw ParseError(cur.pos, "braid word", "end of input");
  while (true) {
    BraidLetter letter;
    if (cur.consume_word("Omega")) {
      letter.kind = BraidLetter::Kind::Omega;
    } else if (cur.consume_word("Id")) {
      letter.kind = BraidLetter::Kind::Id;
    } else if (cur.consume('T')) {
      letter.kind = BraidLetter::Kind::T;
      long long i = cur.parse_ll("generator index");
      if (n < 2) throw StrandMismatch("braid word: T generators need n >= 2");
      if (i < 0 || i >= n)
        throw StrandMismatch("braid word: T index must lie in 0.." + std::to_string(n - 1));
      letter.index = static_cast<int>(i);
    } else if (cur.consume('Y')) {
      letter.kind = BraidLetter::Kind::Y;
      long long i = cur.parse_ll("generator index");
      if (i < 1 || i > n)
        throw StrandMismatch("braid word: Y index must lie in 1.." + std::to_string(n));
      letter.index = static_cast<int>(i);
    } else {
      throw ParseError(cur.pos, "'T', 'Y', 'Omega' or 'Id'", cur.found_here());
    }
    if (cur.consume('^')) letter.exponent = cur.parse_ll("exponent");
    out.push_back(letter);
    cur.skip_ws();
    if (cur.pos >= text.size()) break;
    if (!cur.consume('*'))
      throw ParseError(cur.pos, "'*' or end of input", cur.found_here());
  }
  return out;
}

std::string braid_word_str(const BraidWord& word) {
  std::ostringstream out;
  bool first = true;
  for (const auto& letter : word) {
    if (!first) out << "*";
    first = false;
    switch (letter.kind) {
      case BraidLetter::Kind::T: out << "T" << letter.index; break;
      case BraidLetter::Kind::Y: out << "Y" << letter.index; break;
      case BraidLetter::Kind::Omega: out << "Omega"; break;
      case BraidLetter::Kind::Id: out << "Id"; break;
    }
    if (letter.exponent != 1) out << "^" << letter.exponent;
  }
  if (first) out << "Id";
  return out.str();
}

BraidWord braid_word_inverse(const BraidWord& word) {
  BraidWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    BraidLetter letter = *it;
    letter.exponent = -letter.exponent;
    out.push_back(letter);
  }
  return out;
}

// ---- E-words ----

int EWord::total_strands() const {
  std::size_t total = 0;
  for (const auto& f : factors) total += f.size();
  return static_cast<int>(total);
}

std::string EWord::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out << "*";
    first = false;
    out << "E(";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ",";
      out << f[i];
    }
    out << ")";
  }
  if (first) out << "E()";
  return out.str();
}

EWord EWord::parse(const std::string& text) {
  WordCursor cur{text};
  EWord out;
  while (true) {
    if (!cur.consume('E')) throw ParseError(cur.pos, "'E'", cur.found_here());
    if (!cur.consume('(')) throw ParseError(cur.pos, "'('", cur.found_here());
    std::vector<long long> row;
    row.push_back(cur.parse_ll("integer"));
    while (cur.consume(',')) row.push_back(cur.parse_ll("integer"));
    if (!cur.consume(')')) throw ParseError(cur.pos, "',' or ')'", cur.found_here());
    out.factors.push_back(std::move(row));
    cur.skip_ws();
    if (cur.pos >= text.size()) break;
    if (!cur.consume('*'))
      throw ParseError(cur.pos, "'*' or end of input", cur.found_here());
  }
  return out;
}

BraidWord e_word_to_braid(const EWord& e) {
  BraidWord out;
  int offset = 0;
  for (const auto& f : e.factors) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] == 0) continue;
      BraidLetter y;
      y.kind = BraidLetter::Kind::Y;
      y.index = offset + static_cast<int>(j) + 1;
      y.exponent = f[j];
      out.push_back(y);
    }
    offset += static_cast<int>(f.size());
  }
  offset = 0;
  for (const auto& f : e.factors) {
    for (int i = offset + 1; i < offset + static_cast<int>(f.size()); ++i) {
      BraidLetter t;
      t.kind = BraidLetter::Kind::T;
      t.index = i;
      t.exponent = 1;
      out.push_back(t);
    }
    offset += static_cast<int>(f.size());
  }
  return out;
}

// ---- Hecke elements ----

HeckeElement HeckeElement::unit(int n) {
  HeckeElement e(n);
  e.terms_[AffinePermutation::identity(n).window()] = IntLaurent1(1);
  return e;
}

HeckeElement HeckeElement::basis(const AffinePermutation& v) {
  HeckeElement e(v.strands());
  e.terms_[v.window()] = IntLaurent1(1);
  return e;
}

void HeckeElement::add_term(const std::vector<long long>& window, const IntLaurent1& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(window);
  if (it == terms_.end()) {
    terms_.emplace(window, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (n_ != o.n_) throw StrandMismatch("HeckeElement: strand counts differ");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (n_ != o.n_) throw StrandMismatch("HeckeElement: strand counts differ");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

HeckeElement HeckeElement::scaled(const IntLaurent1& c) const {
  HeckeElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, coeff] : terms_) r.terms_[w] = coeff * c;
  return r;
}

HeckeElement HeckeElement::mul_gen_t(long long i) const {
  if (n_ < 2) throw StrandMismatch("mul_gen_t: T generators need n >= 2");
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    AffinePermutation v(n_, w);
    AffinePermutation vs = v.mul_simple(i);
    if (v(i) < v(i + 1)) {
      r.add_term(vs.window(), c);
    } else {
      r.add_term(vs.window(), c);
      r.add_term(w, c * qdiff());
    }
  }
  return r;
}

HeckeElement HeckeElement::mul_gen_t_inv(long long i) const {
  // T_i^{-1} = T_i - (q - q^-1)
  HeckeElement r = mul_gen_t(i);
  r -= scaled(qdiff());
  return r;
}

HeckeElement HeckeElement::mul_omega(long long power) const {
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    AffinePermutation v(n_, w);
    r.terms_[v.mul_rotation(power).window()] = c;
  }
  return r;
}

HeckeElement HeckeElement::mul_y(int i, long long power) const {
  if (i < 1 || i > n_) throw StrandMismatch("mul_y: index out of range");
  HeckeElement r = *this;
  if (power == 0) return r;
  long long reps = power > 0 ? power : -power;
  for (long long rep = 0; rep < reps; ++rep) {
    if (power > 0) {
      // y_i = s_{i-1}^{-1} ... s_1^{-1} omega s_{n-1} ... s_i
      for (int j = i - 1; j >= 1; --j) r = r.mul_gen_t_inv(j);
      r = r.mul_omega(1);
      for (int j = n_ - 1; j >= i; --j) r = r.mul_gen_t(j);
    } else {
      // y_i^{-1} = s_i^{-1} ... s_{n-1}^{-1} omega^{-1} s_1 ... s_{i-1}
      for (int j = i; j <= n_ - 1; ++j) r = r.mul_gen_t_inv(j);
      r = r.mul_omega(-1);
      for (int j = 1; j <= i - 1; ++j) r = r.mul_gen_t(j);
    }
  }
  return r;
}

HeckeElement HeckeElement::mul(const HeckeElement& other) const {
  if (n_ != other.n_) throw StrandMismatch("mul: strand counts differ");
  HeckeElement total(n_);
  for (const auto& [w, c] : other.terms_) {
    AffinePermutation v(n_, w);
    auto word = v.canonical_word();
    HeckeElement part = mul_omega(word.rotation_power);
    for (int i : word.letters) part = part.mul_gen_t(i);
    total += part.scaled(c);
  }
  return total;
}

bool HeckeElement::has_equidegree_support() const {
  if (terms_.empty()) return true;
  long long deg = AffinePermutation(n_, terms_.begin()->first).degree();
  for (const auto& [w, c] : terms_)
    if (AffinePermutation(n_, w).degree() != deg) return false;
  return true;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*T" << AffinePermutation(n_, w).window_str();
  }
  return out.str();
}

HeckeElement evaluate_word(int n, const BraidWord& word) {
  HeckeElement r = HeckeElement::unit(n);
  for (const auto& letter : word) {
    switch (letter.kind) {
      case BraidLetter::Kind::Id:
        break;
      case BraidLetter::Kind::Omega:
        r = r.mul_omega(letter.exponent);
        break;
      case BraidLetter::Kind::T: {
        if (letter.index < 0 || letter.index >= n)
          throw StrandMismatch("evaluate_word: T index out of range");
        long long reps = letter.exponent >= 0 ? letter.exponent : -letter.exponent;
        for (long long k = 0; k < reps; ++k)
          r = letter.exponent > 0 ? r.mul_gen_t(letter.index) : r.mul_gen_t_inv(letter.index);
        break;
      }
      case BraidLetter::Kind::Y:
        if (letter.index < 1 || letter.index > n)
          throw StrandMismatch("evaluate_word: Y index out of range");
        r = r.mul_y(letter.index, letter.exponent);
        break;
    }
  }
  return r;
}

}  // namespace annular
