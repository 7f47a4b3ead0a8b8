#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "annular/affine_perm.hpp"

using namespace annular;

namespace {

std::mt19937 rng(777);

AffinePermutation random_element(int n, int letters = 6) {
  std::uniform_int_distribution<int> kind(0, 2), idx(0, n - 1), yidx(1, n), expo(-2, 2);
  AffinePermutation v = AffinePermutation::identity(n);
  for (int t = 0; t < letters; ++t) {
    switch (kind(rng)) {
      case 0:
        if (n >= 2) v = v.mul_simple(idx(rng));
        break;
      case 1:
        v = v.mul_rotation(expo(rng));
        break;
      default: {
        std::vector<long long> d(n, 0);
        d[yidx(rng) - 1] = expo(rng);
        v = v.compose(AffinePermutation::translation(d));
        break;
      }
    }
  }
  return v;
}

AffinePermutation y_gen(int n, int i) {
  std::vector<long long> d(n, 0);
  d[i - 1] = 1;
  return AffinePermutation::translation(d);
}

}  // namespace

TEST_CASE("window construction and invariants") {
  auto id3 = AffinePermutation::identity(3);
  CHECK(id3.window() == std::vector<long long>{1, 2, 3});
  CHECK(id3.is_identity());
  CHECK_THROWS_AS(AffinePermutation(2, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(AffinePermutation(2, {1, 2, 3}), StrandMismatch);
  CHECK(AffinePermutation::simple_reflection(3, 0).window() ==
        std::vector<long long>{0, 2, 4});
  CHECK(AffinePermutation::rotation(2).window() == std::vector<long long>{2, 3});
}

TEST_CASE("periodic evaluation") {
  auto pi = AffinePermutation::rotation(3);
  CHECK(pi(1) == 2);
  CHECK(pi(3) == 4);
  CHECK(pi(0) == 1);
  CHECK(pi(-5) == -4);
  CHECK(pi(7) == 8);
}

TEST_CASE("composition and inverse") {
  auto pi = AffinePermutation::rotation(2);
  auto s1 = AffinePermutation::simple_reflection(2, 1);
  CHECK(pi.compose(s1).window() == std::vector<long long>{3, 2});
  CHECK(pi.compose(s1) == y_gen(2, 1));
  CHECK(y_gen(2, 1).compose(y_gen(2, 2)) == pi.mul_rotation(1));
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 30; ++t) {
      auto v = random_element(n);
      CHECK(v.compose(v.inverse()).is_identity());
      CHECK(v.inverse().compose(v).is_identity());
    }
}

TEST_CASE("degree") {
  CHECK(AffinePermutation::translation({2, 1}).degree() == 3);
  CHECK(AffinePermutation::rotation(5).degree() == 1);
  CHECK(AffinePermutation::simple_reflection(4, 2).degree() == 0);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 30; ++t) {
      auto u = random_element(n), v = random_element(n);
      CHECK(u.compose(v).degree() == u.degree() + v.degree());
    }
}

TEST_CASE("length formula on pinned examples") {
  CHECK(AffinePermutation::rotation(2).length() == 0);
  CHECK(AffinePermutation::rotation(4).length() == 0);
  CHECK(y_gen(2, 1).length() == 1);
  CHECK(AffinePermutation::simple_reflection(3, 0).length() == 1);
  // pi*s0*s1 on 2 strands has window (4,1) and length 2
  auto v = from_word(2, parse_generator_word("pi*s0*s1", 2));
  CHECK(v.window() == std::vector<long long>{4, 1});
  CHECK(v.length() == 2);
  // translations: length of y^d is sum over pairs |d_i - d_j|
  CHECK(AffinePermutation::translation({2, -1, 0}).length() == 3 + 2 + 1);
}

TEST_CASE("length agrees with greedy reduction") {
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 60; ++t) {
      auto v = random_element(n);
      if (v.length() > 12) continue;
      CHECK(v.length() == v.length_by_reduction());
    }
  // exhaustive over the length <= 5 ball of degree-zero elements on 3 strands
  std::set<std::vector<long long>> seen{AffinePermutation::identity(3).window()};
  std::vector<AffinePermutation> frontier{AffinePermutation::identity(3)};
  for (int depth = 1; depth <= 5; ++depth) {
    std::vector<AffinePermutation> next;
    for (const auto& u : frontier)
      for (int i = 0; i < 3; ++i) {
        auto w = u.mul_simple(i);
        if (w.length() == depth && seen.insert(w.window()).second) {
          CHECK(w.length_by_reduction() == depth);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  CHECK(seen.size() > 20);
}

TEST_CASE("descents predict length steps") {
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      auto v = random_element(n);
      for (int i = 0; i < n; ++i) {
        long long delta = v.mul_simple(i).length() - v.length();
        CHECK(delta == (v.right_descent(i) ? -1 : 1));
      }
    }
}

TEST_CASE("canonical word reconstructs the element") {
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      auto v = random_element(n, 5);
      auto cw = v.canonical_word();
      CHECK(static_cast<long long>(cw.letters.size()) == v.length());
      auto rebuilt = AffinePermutation::identity(n).mul_rotation(cw.rotation_power);
      for (int i : cw.letters) rebuilt = rebuilt.mul_simple(i);
      CHECK(rebuilt == v);
    }
}

TEST_CASE("translation generators commute and conjugate along simple reflections") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(y_gen(n, i).compose(y_gen(n, j)) == y_gen(n, j).compose(y_gen(n, i)));
    for (int i = 1; i < n; ++i) {
      auto s = AffinePermutation::simple_reflection(n, i);
      CHECK(y_gen(n, i + 1) == s.compose(y_gen(n, i)).compose(s));
    }
  }
}

TEST_CASE("dominant translations factor through the rotation word") {
  // y_1...y_k = (pi * s_{n-1} ... s_k)^k
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      AffinePermutation lhs = AffinePermutation::identity(n);
      for (int i = 1; i <= k; ++i) lhs = lhs.compose(y_gen(n, i));
      AffinePermutation base = AffinePermutation::rotation(n);
      for (int i = n - 1; i >= k; --i)
        base = base.compose(AffinePermutation::simple_reflection(n, i));
      AffinePermutation rhs = AffinePermutation::identity(n);
      for (int i = 0; i < k; ++i) rhs = rhs.compose(base);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("translation-finite factorization") {
  auto pi = AffinePermutation::rotation(2);
  auto f = pi.translation_finite_factor();
  CHECK(f.d == std::vector<long long>{1, 0});
  CHECK(f.w == std::vector<int>{2, 1});
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      auto v = random_element(n);
      auto tf = v.translation_finite_factor();
      std::vector<long long> w_window(tf.w.begin(), tf.w.end());
      auto rebuilt =
          AffinePermutation::translation(tf.d).compose(AffinePermutation(n, w_window));
      CHECK(rebuilt == v);
    }
}

TEST_CASE("newton point examples") {
  CHECK(AffinePermutation::rotation(2).newton_point() ==
        std::vector<Rational>{{1, 2}, {1, 2}});
  CHECK(AffinePermutation::translation({3, 1}).newton_point() ==
        std::vector<Rational>{{3, 1}, {1, 1}});
  CHECK(AffinePermutation::simple_reflection(2, 1).newton_point() ==
        std::vector<Rational>{{0, 1}, {0, 1}});
}

TEST_CASE("newton point from powers") {
  // v^k = y^d for k = order of the finite part; newton = sorted d/k
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 25; ++t) {
      auto v = random_element(n, 4);
      AffinePermutation p = v;
      long long k = 1;
      auto is_translation = [](const AffinePermutation& u) {
        auto f = u.translation_finite_factor();
        for (std::size_t i = 0; i < f.w.size(); ++i)
          if (f.w[i] != static_cast<int>(i) + 1) return false;
        return true;
      };
      while (!is_translation(p)) {
        p = p.compose(v);
        ++k;
      }
      auto d = p.translation_finite_factor().d;
      std::vector<Rational> expected;
      for (long long di : d) expected.emplace_back(di, k);
      std::sort(expected.begin(), expected.end(),
                [](const Rational& a, const Rational& b) { return b < a; });
      CHECK(v.newton_point() == expected);
    }
}

TEST_CASE("convex path examples and invariance") {
  CHECK(AffinePermutation::identity(3).convex_path() ==
        ConvexPath({{1, 0}, {1, 0}, {1, 0}}));
  CHECK(AffinePermutation::rotation(2).convex_path() == ConvexPath({{2, 1}}));
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      auto v = random_element(n, 4);
      auto g = random_element(n, 4);
      CHECK(g.compose(v).compose(g.inverse()).convex_path() == v.convex_path());
    }
}

TEST_CASE("convex path slopes agree with the newton point") {
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      auto v = random_element(n, 4);
      ConvexPath path = v.convex_path();
      std::vector<Rational> slopes;
      for (auto [l, m] : path.steps())
        for (long long i = 0; i < l; ++i) slopes.emplace_back(m, l);
      std::sort(slopes.begin(), slopes.end(),
                [](const Rational& a, const Rational& b) { return b < a; });
      CHECK(slopes == v.newton_point());
    }
}

TEST_CASE("coxeter-type translations of equal total are conjugate") {
  // e_d = y^d s_1 ... s_{n-1}; its path depends only on |d|
  for (int n = 2; n <= 4; ++n) {
    std::uniform_int_distribution<int> expo(-2, 2);
    for (int t = 0; t < 25; ++t) {
      std::vector<long long> d1(n), d2(n);
      long long tot1 = 0;
      for (int i = 0; i < n; ++i) {
        d1[i] = expo(rng);
        tot1 += d1[i];
      }
      long long acc = 0;
      for (int i = 0; i + 1 < n; ++i) {
        d2[i] = expo(rng);
        acc += d2[i];
      }
      d2[n - 1] = tot1 - acc;
      auto coxeter = [n](const std::vector<long long>& d) {
        auto v = AffinePermutation::translation(d);
        for (int i = 1; i < n; ++i)
          v = v.compose(AffinePermutation::simple_reflection(n, i));
        return v;
      };
      CHECK(coxeter(d1).convex_path() == coxeter(d2).convex_path());
      CHECK(coxeter(d1).convex_path() == ConvexPath({{n, tot1}}));
      // n-th power of e_d is the diagonal translation by |d|
      AffinePermutation p = AffinePermutation::identity(n);
      for (int i = 0; i < n; ++i) p = p.compose(coxeter(d1));
      CHECK(p == AffinePermutation::translation(std::vector<long long>(n, tot1)));
    }
  }
}

TEST_CASE("convex path text format") {
  ConvexPath p({{1, 1}, {1, 0}});
  CHECK(p.str() == "[(1,0),(1,1)]");
  CHECK(ConvexPath::parse("[(1,0),(1,1)]") == p);
  CHECK(ConvexPath::parse("[]") == ConvexPath());
  // ties sort by (l, m) lexicographically
  CHECK(ConvexPath({{2, 2}, {1, 1}}).str() == "[(1,1),(2,2)]");
  CHECK(ConvexPath({{2, -1}, {2, 1}, {1, 0}}).str() == "[(2,-1),(1,0),(2,1)]");
  CHECK_THROWS_AS(ConvexPath::parse("[(1,0)"), ParseError);
  CHECK_THROWS_AS(ConvexPath({{0, 1}}), std::invalid_argument);
  for (int t = 0; t < 40; ++t) {
    auto v = random_element(3, 4);
    CHECK(ConvexPath::parse(v.convex_path().str()) == v.convex_path());
  }
}

TEST_CASE("generator word parsing") {
  CHECK(from_word(2, parse_generator_word("y1", 2)).window() ==
        std::vector<long long>{3, 2});
  CHECK(from_word(3, parse_generator_word("s0", 3)).window() ==
        std::vector<long long>{0, 2, 4});
  CHECK(from_word(2, parse_generator_word("pi^-1*pi", 2)).is_identity());
  CHECK(from_word(2, parse_generator_word("s1^2", 2)).is_identity());
  CHECK(from_word(2, parse_generator_word("y1^3", 2)) ==
        AffinePermutation::translation({3, 0}));
  CHECK(from_word(2, parse_generator_word("id", 2)).is_identity());
  CHECK_THROWS_AS(parse_generator_word("s5", 3), StrandMismatch);
  CHECK_THROWS_AS(parse_generator_word("y4", 3), StrandMismatch);
  CHECK_THROWS_AS(parse_generator_word("x1", 3), ParseError);
  CHECK_THROWS_AS(parse_generator_word("s1 s2", 3), ParseError);
  CHECK_THROWS_AS(parse_generator_word("", 3), ParseError);
  auto w = parse_generator_word("pi^-1*s0*y2^2", 3);
  CHECK(parse_generator_word(generator_word_str(w), 3) == w);
}
