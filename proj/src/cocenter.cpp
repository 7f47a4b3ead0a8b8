#include "annular/cocenter.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace annular {

namespace {

IntLaurent1 qdiff() { return IntLaurent1::q() - IntLaurent1::q(-1); }

}  // namespace

void CocenterVector::add(const ConvexPath& path, const IntLaurent1& c) {
  if (c.is_zero()) return;
  auto it = coords.find(path);
  if (it == coords.end()) {
    coords.emplace(path, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords.erase(it);
}

CocenterVector& CocenterVector::operator+=(const CocenterVector& o) {
  if (n != o.n) throw StrandMismatch("CocenterVector: mixed strand counts");
  for (const auto& [path, c] : o.coords) add(path, c);
  return *this;
}

CocenterVector& CocenterVector::operator-=(const CocenterVector& o) {
  if (n != o.n) throw StrandMismatch("CocenterVector: mixed strand counts");
  for (const auto& [path, c] : o.coords) add(path, -c);
  return *this;
}

CocenterVector CocenterVector::scaled(const IntLaurent1& c) const {
  CocenterVector out(n);
  if (c.is_zero()) return out;
  for (const auto& [path, coeff] : coords) out.coords.emplace(path, coeff * c);
  return out;
}

std::string CocenterVector::str() const {
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [path, c] : coords) {
    if (!first) os << '\n';
    first = false;
    os << path.str() << ": " << c.str();
  }
  return os.str();
}

CocenterVector CocenterVector::parse(const std::string& text, int n) {
  CocenterVector out(n);
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    std::size_t sep = line.find(": ");
    if (sep == std::string::npos)
      throw ParseError(pos, "\"path: coefficient\" line", line);
    ConvexPath path = ConvexPath::parse(line.substr(0, sep));
    IntLaurent1 c = IntLaurent1::parse(line.substr(sep + 2));
    out.add(path, c);
    pos = end + 1;
  }
  return out;
}

CocenterReducer::CocenterReducer(int n, std::vector<int> conjugation_order)
    : n_(n), order_(std::move(conjugation_order)) {
  if (n < 1) throw StrandMismatch("CocenterReducer: need at least one strand");
  if (order_.empty() && n_ >= 2) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
  }
  for (int i : order_) {
    if (n_ < 2) throw StrandMismatch("CocenterReducer: no simple reflections on one strand");
    if (i < 0 || i >= n_) throw StrandMismatch("CocenterReducer: conjugation index out of range");
  }
}

namespace {

struct SliceSearch {
  // Element of the slice admitting a length drop at the paired index.
  std::optional<std::pair<AffinePermutation, long long>> drop;
  // All windows visited; they share one trace class.
  std::vector<std::vector<long long>> visited;
  // A visited window whose class is already cached, if any.
  std::optional<std::vector<long long>> known;
};

SliceSearch search_slice(const AffinePermutation& start, const std::vector<int>& order,
                         const std::map<std::vector<long long>, CocenterVector>* cache) {
  SliceSearch out;
  const long long len = start.length();
  const int n = start.strands();
  const AffinePermutation rot = AffinePermutation::rotation(n);
  const AffinePermutation rot_inv = rot.inverse();

  std::set<std::vector<long long>> seen;
  std::deque<AffinePermutation> queue;
  seen.insert(start.window());
  out.visited.push_back(start.window());
  queue.push_back(start);
  if (cache != nullptr && cache->count(start.window()) != 0) {
    out.known = start.window();
    return out;
  }

  auto enqueue = [&](AffinePermutation next) {
    auto [it, inserted] = seen.insert(next.window());
    if (!inserted) return false;
    out.visited.push_back(next.window());
    if (cache != nullptr && cache->count(next.window()) != 0) {
      out.known = next.window();
      return true;
    }
    queue.push_back(std::move(next));
    return false;
  };

  while (!queue.empty()) {
    AffinePermutation u = queue.front();
    queue.pop_front();
    for (int i : order) {
      AffinePermutation conj = u.mul_simple(i).pre_mul_simple(i);
      long long l = conj.length();
      if (l == len - 2) {
        out.drop = {u, i};
        return out;
      }
      if (l == len && enqueue(std::move(conj))) return out;
    }
    if (enqueue(rot.compose(u).compose(rot_inv))) return out;
    if (enqueue(rot_inv.compose(u).compose(rot))) return out;
  }
  return out;
}

}  // namespace

std::optional<std::pair<AffinePermutation, long long>> CocenterReducer::find_length_drop(
    const AffinePermutation& v) const {
  if (v.strands() != n_) throw StrandMismatch("find_length_drop: wrong strand count");
  return search_slice(v, order_, nullptr).drop;
}

const CocenterVector& CocenterReducer::reduce_window(const std::vector<long long>& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  AffinePermutation v(n_, w);
  SliceSearch found = search_slice(v, order_, &cache_);

  CocenterVector result(n_);
  if (found.known) {
    result = cache_.at(*found.known);
  } else if (found.drop) {
    // With u' = s_i u s_i two letters shorter, T_u = T_{s_i} T_{u'} T_{s_i},
    // so in the trace [T_u] = [T_{u'} T_{s_i}^2] = [T_{u'}] + (q - q^-1) [T_{s_i u}].
    const auto& [u, i] = *found.drop;
    AffinePermutation shorter = u.mul_simple(i).pre_mul_simple(i);
    AffinePermutation half = u.pre_mul_simple(i);
    result = reduce_window(shorter.window());
    result += reduce_window(half.window()).scaled(qdiff());
  } else {
    result.add(v.convex_path(), IntLaurent1(1));
  }

  const CocenterVector* stored = nullptr;
  for (const auto& window : found.visited) {
    auto [it, inserted] = cache_.emplace(window, result);
    if (window == w) stored = &it->second;
  }
  return *stored;
}

CocenterVector CocenterReducer::class_of(const AffinePermutation& v) {
  if (v.strands() != n_) throw StrandMismatch("class_of: wrong strand count");
  return reduce_window(v.window());
}

CocenterVector CocenterReducer::class_of(const HeckeElement& x) {
  if (x.strands() != n_) throw StrandMismatch("class_of: wrong strand count");
  CocenterVector out(n_);
  for (const auto& [window, c] : x.terms()) out += reduce_window(window).scaled(c);
  return out;
}

CocenterVector CocenterReducer::e_class(const EWord& e) {
  if (e.total_strands() != n_) throw StrandMismatch("e_class: wrong strand count");
  return class_of(evaluate_word(n_, e_word_to_braid(e)));
}

}  // namespace annular
