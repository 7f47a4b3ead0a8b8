// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout, nonzero exit when any criterion fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "annular/cli.hpp"
#include "annular/cocenter.hpp"
#include "annular/eha.hpp"
#include "annular/hecke.hpp"
#include "annular/ring.hpp"
#include "annular/shuffle.hpp"

using namespace annular;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << id << (pass ? " PASS " : " FAIL ") << detail << "\n" << std::flush;
  if (!pass) ++failures;
}

void criterion(const std::string& id,
               const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [pass, detail] = body();
    report(id, pass, detail);
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

BraidWord random_braid(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> kind(n >= 2 ? 0 : 1, 2);
  std::uniform_int_distribution<long long> t_index(0, n - 1);
  std::uniform_int_distribution<long long> y_index(1, n);
  std::uniform_int_distribution<long long> expo(-2, 2);
  BraidWord word;
  for (int j = 0; j < len; ++j) {
    BraidLetter letter;
    switch (kind(rng)) {
      case 0:
        letter.kind = BraidLetter::Kind::T;
        letter.index = static_cast<int>(t_index(rng));
        letter.exponent = expo(rng) >= 0 ? 1 : -1;
        break;
      case 1:
        letter.kind = BraidLetter::Kind::Omega;
        letter.exponent = expo(rng);
        break;
      default:
        letter.kind = BraidLetter::Kind::Y;
        letter.index = static_cast<int>(y_index(rng));
        letter.exponent = expo(rng);
        break;
    }
    word.push_back(letter);
  }
  return word;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/** Staircase exponents of the one-step element of width l and winding m. */
std::vector<long long> staircase(long long m, long long l) {
  std::vector<long long> d;
  for (long long i = 1; i <= l; ++i)
    d.push_back(floor_div(m * i, l) - floor_div(m * (i - 1), l));
  return d;
}

std::string verify_detail(const VerifyReport& r) {
  std::ostringstream out;
  out << r.relation << " in " << r.target << ": " << r.instances
      << " instances, " << r.failures.size() << " failures";
  return out.str();
}

std::pair<bool, std::string> a1() {
  CocenterReducer reducer(2);
  const CocenterVector lhs = reducer.class_of(evaluate_word(2, "Y1")) -
                             reducer.class_of(evaluate_word(2, "Y2"));
  const CocenterVector rhs =
      reducer.class_of(evaluate_word(2, "Omega"))
          .scaled(IntLaurent1::q() - IntLaurent1::q(-1));
  const bool pass = lhs == rhs;
  return {pass, "[Y1] - [Y2] = (q - q^-1)[Omega] on 2 strands"};
}

std::pair<bool, std::string> a2() {
  const VerifyReport r = verify_suite("rel-a1", "cocenter", {4, 2, 2});
  return {r.ok() && r.instances == 2150, verify_detail(r)};
}

std::pair<bool, std::string> a3() {
  const VerifyReport r = verify_suite("rel-a2", "cocenter", {3, 2, 2});
  return {r.ok() && r.instances == 775, verify_detail(r)};
}

std::pair<bool, std::string> a4() {
  std::mt19937 rng(20250814);
  int pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    CocenterReducer reducer(n);
    std::uniform_int_distribution<int> len(1, 6);
    for (int trial = 0; trial < 70; ++trial) {
      const HeckeElement x = evaluate_word(n, random_braid(rng, n, len(rng)));
      const HeckeElement y = evaluate_word(n, random_braid(rng, n, len(rng)));
      if (!(reducer.class_of(x.mul(y)) == reducer.class_of(y.mul(x))))
        return {false, "trace property failed at n=" + std::to_string(n) +
                           " trial=" + std::to_string(trial)};
      ++pairs;
    }
  }
  return {true, "[xy] = [yx] for " + std::to_string(pairs) +
                    " seeded pairs, n <= 3, length <= 6"};
}

std::pair<bool, std::string> a5() {
  // All convex paths with total strands <= 3 and |m_i| <= 2, generated as
  // multisets of steps listed in canonical (slope-ascending) order.
  using Step = ConvexPath::Step;
  std::vector<Step> pool;
  for (long long l = 1; l <= 3; ++l)
    for (long long m = -2; m <= 2; ++m) pool.push_back({l, m});
  // canonical step order: slope ascending, ties lexicographic
  std::sort(pool.begin(), pool.end(), [](const Step& a, const Step& b) {
    const __int128 lhs = static_cast<__int128>(a.second) * b.first;
    const __int128 rhs = static_cast<__int128>(b.second) * a.first;
    if (lhs != rhs) return lhs < rhs;
    return a < b;
  });
  std::vector<std::vector<Step>> paths;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    paths.push_back({pool[i]});
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].first + pool[j].first > 3) continue;
      paths.push_back({pool[i], pool[j]});
      for (std::size_t k = j; k < pool.size(); ++k) {
        if (pool[i].first + pool[j].first + pool[k].first > 3) continue;
        paths.push_back({pool[i], pool[j], pool[k]});
      }
    }
  }

  CocenterBank bank;
  int checked = 0;
  for (const auto& steps : paths) {
    const ConvexPath path(steps);
    // steeper steps sit on lower strand indices: factors in reverse order
    EWord word;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      word.factors.push_back(staircase(it->second, it->first));
    const int strands = word.total_strands();
    CocenterVector expected(strands);
    expected.add(path, IntLaurent1(1));
    if (!(bank.reducer(strands).e_class(word) == expected))
      return {false, "coordinate mismatch at path " + path.str()};
    ++checked;
  }
  return {checked == 90,
          "unit coordinates at all " + std::to_string(checked) +
              " convex paths with strands <= 3, |m_i| <= 2"};
}

std::pair<bool, std::string> a6() {
  const VerifyReport r = verify_suite("rel-shuf", "shuffle", {3, 1, 1});
  return {r.ok() && r.instances == 63, verify_detail(r)};
}

std::pair<bool, std::string> a7() {
  int checked = 0;
  for (long long d1 = -1; d1 <= 1; ++d1)
    for (long long d2 = -1; d2 <= 1; ++d2)
      for (long long d3 = -1; d3 <= 1; ++d3) {
        if (!wheel_check(r_element({d1, d2, d3})))
          return {false, "wheel check failed for R_(" + std::to_string(d1) +
                             "," + std::to_string(d2) + "," +
                             std::to_string(d3) + ")"};
        ++checked;
      }
  return {checked == 27,
          "wheel_check(R_d) for all " + std::to_string(checked) +
              " d in [-1,1]^3"};
}

std::pair<bool, std::string> a8() {
  const VerifyReport tor1 = verify_suite("tor1", "shuffle", {2, 2, 1});
  const VerifyReport tor2 = verify_suite("tor2", "shuffle", {2, 2, 1});
  const bool pass =
      tor1.ok() && tor1.instances == 25 && tor2.ok() && tor2.instances == 3;
  return {pass, verify_detail(tor1) + "; " + verify_detail(tor2)};
}

std::pair<bool, std::string> a9() {
  std::vector<SymLaurent> basis;
  for (long long a = -1; a <= 1; ++a) basis.push_back(r_element({a}));
  basis.push_back(r_element({0, 0}));
  int checked = 0;
  for (int k = 1; k <= 2; ++k)
    for (const SymLaurent& f : basis)
      for (const SymLaurent& g : basis) {
        const SymLaurent lhs = partial_k(shuffle_product(f, g), k);
        const SymLaurent rhs = shuffle_product(partial_k(f, k), g) +
                               shuffle_product(f, partial_k(g, k));
        if (!(lhs == rhs))
          return {false, "derivation law failed at k=" + std::to_string(k)};
        ++checked;
      }
  return {checked == 32,
          "partial_k Leibniz law on " + std::to_string(checked) +
              " (k, F, G) triples"};
}

std::pair<bool, std::string> a10() {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (long long m = -1; m <= 1; ++m) {
      const FormalElement x = reduce_single_rows(n, m);
      for (const auto& [w, c] : x.terms)
        for (const auto& row : w.factors)
          if (row.size() != 1)
            return {false, "non-one-row support at n=" + std::to_string(n) +
                               " m=" + std::to_string(m)};
      std::vector<long long> column(n, 0);
      column.back() = m;
      const auto image = eval_shuffle(x);
      if (!(image.size() == 1 && image.count(n) == 1 &&
            image.at(n) == r_element(column)))
        return {false, "shuffle oracle mismatch at n=" + std::to_string(n) +
                           " m=" + std::to_string(m)};
      ++checked;
    }
  return {checked == 9, "one-row reduction passes the shuffle oracle on " +
                            std::to_string(checked) + " (n, m) cases"};
}

std::pair<bool, std::string> a11() {
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      std::ostringstream lhs_word;
      for (int i = 1; i <= k; ++i) lhs_word << (i > 1 ? "*" : "") << "Y" << i;
      std::ostringstream block;
      block << "Omega";
      for (int i = n - 1; i >= k; --i) block << "*T" << i;
      std::ostringstream rhs_word;
      for (int rep = 0; rep < k; ++rep)
        rhs_word << (rep ? "*" : "") << block.str();
      if (!(evaluate_word(n, lhs_word.str()) == evaluate_word(n, rhs_word.str())))
        return {false, "translation identity failed at n=" + std::to_string(n) +
                           " k=" + std::to_string(k)};
      ++checked;
    }
  return {checked == 10, "Y1..Yk = (Omega T_{n-1}..T_k)^k on " +
                             std::to_string(checked) + " (n, k) cases"};
}

std::pair<bool, std::string> a12() {
  struct Capture {
    int code;
    std::string out;
  };
  auto invoke = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return Capture{code, out.str()};
  };
  const std::vector<std::vector<std::string>> machine_runs = {
      {"classify", "-n", "3", "pi*s1*y2^-1", "--format", "machine"},
      {"cocenter", "-n", "2", "Y1*T1", "--format", "machine"},
      {"shuffle", "R(0,1)*R(0)", "--wheel", "--format", "machine"},
      {"verify", "rel-a2", "--n-max", "2", "--format", "machine"},
      {"reduce", "-n", "2", "-m", "-1", "--format", "machine"},
  };
  for (const auto& args : machine_runs) {
    const Capture first = invoke(args);
    const Capture second = invoke(args);
    if (first.code != 0 || first.out != second.out)
      return {false, "non-deterministic or failing invocation: " + args[0]};
    const auto doc = nlohmann::json::parse(first.out);
    for (const char* field : {"command", "inputs", "results", "failures"})
      if (!doc.contains(field))
        return {false, std::string("missing field '") + field + "' in " + args[0]};
  }

  // rendered values reparse to equal objects
  const Capture rendered = invoke({"cocenter", "-n", "2", "Y1*T1"});
  std::string text = rendered.out;
  if (text.empty()) return {false, "empty cocenter rendering"};
  text.pop_back();
  const CocenterVector reparsed = CocenterVector::parse(text, 2);
  const CocenterVector direct =
      CocenterReducer(2).class_of(evaluate_word(2, "Y1*T1"));
  if (!(reparsed == direct)) return {false, "cocenter rendering round-trip failed"};

  const AffinePermutation v = from_word(3, parse_generator_word("pi*s1*y2^-1", 3));
  if (!(ConvexPath::parse(v.convex_path().str()) == v.convex_path()))
    return {false, "convex path round-trip failed"};
  const RatFun2 sample =
      (RatFun2(1) - RatFun2::q1()) / (RatFun2(2) + RatFun2::q2());
  if (!(RatFun2::parse(sample.str()) == sample))
    return {false, "coefficient round-trip failed"};

  return {true, "machine reports byte-identical across runs; renderings reparse"};
}

}  // namespace

int main() {
  criterion("A1", a1);
  criterion("A2", a2);
  criterion("A3", a3);
  criterion("A4", a4);
  criterion("A5", a5);
  criterion("A6", a6);
  criterion("A7", a7);
  criterion("A8", a8);
  criterion("A9", a9);
  criterion("A10", a10);
  criterion("A11", a11);
  criterion("A12", a12);
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
