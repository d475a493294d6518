#include <doctest.h>

#include <numeric>
#include <set>

#include "chevkit/errors.hpp"
#include "chevkit/root_system.hpp"

using namespace chevkit;

namespace {

Coeffs vec(std::initializer_list<int> v) { return Coeffs(v); }

std::set<Coeffs> positive_set(const RootSystem& rs) {
  std::set<Coeffs> out;
  for (int k = 0; k < rs.num_positive(); ++k) out.insert(rs.root(k));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("root_system");

TEST_CASE("rank bounds produce typed errors naming the range") {
  CHECK_THROWS_AS(build_root_system({TypeLetter::A, 0}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::B, 1}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::C, 1}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::D, 2}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::E, 5}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::E, 9}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::F, 3}), RankError);
  CHECK_THROWS_AS(build_root_system({TypeLetter::G, 3}), RankError);
  try {
    build_root_system({TypeLetter::E, 9});
    FAIL("expected RankError");
  } catch (const RankError& e) {
    CHECK(std::string(e.what()).find("{6,7,8}") != std::string::npos);
  }
}

TEST_CASE("A2 has the six expected roots") {
  auto rs = build_root_system({TypeLetter::A, 2});
  CHECK(rs->num_roots() == 6);
  CHECK(rs->is_root(vec({1, 0})));
  CHECK(rs->is_root(vec({0, 1})));
  CHECK(rs->is_root(vec({1, 1})));
  CHECK(rs->is_root(vec({-1, 0})));
  CHECK(rs->is_root(vec({0, -1})));
  CHECK(rs->is_root(vec({-1, -1})));
  CHECK_FALSE(rs->is_root(vec({1, -1})));
  CHECK_FALSE(rs->is_root(vec({2, 1})));
}

TEST_CASE("root counts match the classical values") {
  for (int r = 1; r <= 8; ++r)
    CHECK(build_root_system({TypeLetter::A, r})->num_roots() == r * (r + 1));
  for (int r = 2; r <= 6; ++r) {
    CHECK(build_root_system({TypeLetter::B, r})->num_roots() == 2 * r * r);
    CHECK(build_root_system({TypeLetter::C, r})->num_roots() == 2 * r * r);
  }
  for (int r = 3; r <= 7; ++r)
    CHECK(build_root_system({TypeLetter::D, r})->num_roots() == 2 * r * (r - 1));
  CHECK(build_root_system({TypeLetter::E, 6})->num_roots() == 72);
  CHECK(build_root_system({TypeLetter::E, 7})->num_roots() == 126);
  CHECK(build_root_system({TypeLetter::E, 8})->num_roots() == 240);
  CHECK(build_root_system({TypeLetter::F, 4})->num_roots() == 48);
  CHECK(build_root_system({TypeLetter::G, 2})->num_roots() == 12);
}

TEST_CASE("B_r positive roots are the three published families") {
  for (int r = 2; r <= 5; ++r) {
    auto rs = build_root_system({TypeLetter::B, r});
    std::set<Coeffs> expect;
    for (int i = 1; i <= r; ++i) {  // a_1 + ... + a_i
      Coeffs v(r, 0);
      for (int k = 0; k < i; ++k) v[k] = 1;
      expect.insert(v);
    }
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {  // a_{i+1} + ... + a_j
        Coeffs v(r, 0);
        for (int k = i; k < j; ++k) v[k] = 1;
        expect.insert(v);
      }
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {  // 2(a_1+...+a_i) + a_{i+1} + ... + a_j
        Coeffs v(r, 0);
        for (int k = 0; k < i; ++k) v[k] = 2;
        for (int k = i; k < j; ++k) v[k] = 1;
        expect.insert(v);
      }
    CHECK(positive_set(*rs) == expect);
  }
}

TEST_CASE("C_r positive roots are the long gammas and two short families") {
  for (int r = 2; r <= 5; ++r) {
    auto rs = build_root_system({TypeLetter::C, r});
    auto gamma = [&](int j) {  // 2(a_j + ... + a_{r-1}) + a_r, 1-based j
      Coeffs v(r, 0);
      for (int k = j - 1; k < r - 1; ++k) v[k] = 2;
      v[r - 1] = 1;
      return v;
    };
    std::set<Coeffs> expect;
    for (int j = 1; j <= r; ++j) expect.insert(gamma(j));
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        Coeffs a(r, 0);  // alpha_ij = a_i + ... + a_{j-1}
        for (int k = i - 1; k < j - 1; ++k) a[k] = 1;
        expect.insert(a);
        Coeffs g = gamma(j);  // gamma_ij = alpha_ij + gamma_j
        for (int k = 0; k < r; ++k) g[k] += a[k];
        expect.insert(g);
      }
    CHECK(positive_set(*rs) == expect);
    // The long roots are exactly the gammas.
    for (int j = 1; j <= r; ++j) CHECK(rs->d_of_root(rs->index_of(gamma(j))) == 2);
  }
}

TEST_CASE("pq on A2 and the simply laced rule") {
  auto rs = build_root_system({TypeLetter::A, 2});
  PQPair pq = rs->pq(rs->index_of(vec({1, 0})), rs->index_of(vec({0, 1})));
  CHECK(pq.p == 1);
  CHECK(pq.q == 0);

  for (auto type : {CartanType{TypeLetter::A, 3}, CartanType{TypeLetter::D, 4}}) {
    auto sl = build_root_system(type);
    for (int a = 0; a < sl->num_roots(); ++a)
      for (int b = 0; b < sl->num_roots(); ++b) {
        if (sl->sum_index(a, b) < 0) continue;
        PQPair v = sl->pq(a, b);
        CHECK(v.q == 0);
        CHECK(v.p == 1);
      }
  }
}

TEST_CASE("pq on B2 against the brute-force scan") {
  // With alpha_1 short, the alpha_1-string through alpha_1+alpha_2 reaches
  // both alpha_2 and 2*alpha_1+alpha_2; the alpha_2-string stops at alpha_1.
  auto rs = build_root_system({TypeLetter::B, 2});
  CHECK(rs->num_roots() == 8);
  int a1 = rs->index_of(vec({1, 0}));
  int a2 = rs->index_of(vec({0, 1}));
  int a12 = rs->index_of(vec({1, 1}));
  CHECK(rs->is_root(vec({2, 1})));
  PQPair one = rs->pq(a1, a12);
  CHECK(one.p == 1);
  CHECK(one.q == 1);
  PQPair two = rs->pq(a2, a12);
  CHECK(two.p == 0);
  CHECK(two.q == 1);
}

TEST_CASE("pq rejects alpha = +-beta") {
  auto rs = build_root_system({TypeLetter::A, 2});
  CHECK_THROWS_AS(rs->pq(0, 0), RootStringError);
  CHECK_THROWS_AS(rs->pq(0, rs->negate(0)), RootStringError);
}

TEST_CASE("q - p equals the Cartan pairing, exhaustively") {
  for (auto type : {CartanType{TypeLetter::A, 3}, CartanType{TypeLetter::B, 3},
                    CartanType{TypeLetter::C, 3}, CartanType{TypeLetter::D, 4},
                    CartanType{TypeLetter::F, 4}, CartanType{TypeLetter::G, 2}}) {
    auto rs = build_root_system(type);
    for (int a = 0; a < rs->num_roots(); ++a)
      for (int b = 0; b < rs->num_roots(); ++b) {
        if (a == b || rs->negate(a) == b) continue;
        PQPair pq = rs->pq(a, b);
        long long pairing =
            2 * rs->inner(rs->root(a), rs->root(b)) / rs->inner(rs->root(a), rs->root(a));
        CHECK(pq.q - pq.p == pairing);
      }
  }
}

TEST_CASE("heights") {
  auto f4 = build_root_system({TypeLetter::F, 4});
  CHECK(f4->height(f4->parse_root("1000")) == 1);
  CHECK(f4->height(f4->parse_root("1342")) == 10);
  auto a2 = build_root_system({TypeLetter::A, 2});
  CHECK(a2->height(a2->index_of(vec({-1, -1}))) == -2);
  for (int k = 0; k < a2->num_roots(); ++k)
    CHECK(a2->height(a2->negate(k)) == -a2->height(k));
}

TEST_CASE("inner products") {
  auto d4 = build_root_system({TypeLetter::D, 4});
  for (int a = 0; a < d4->num_roots(); ++a) {
    CHECK(d4->inner(d4->root(a), d4->root(a)) == 2);
    for (int b = 0; b < d4->num_roots(); ++b)
      if (d4->sum_index(a, b) >= 0) CHECK(d4->inner(d4->root(a), d4->root(b)) == -1);
  }
  auto g2 = build_root_system({TypeLetter::G, 2});
  CHECK(g2->inner(vec({1, 0}), vec({1, 0})) == 6);
  CHECK(g2->inner(vec({0, 1}), vec({0, 1})) == 2);
  CHECK(g2->pairing(0, vec({0, 1})) == -1);  // <alpha_1^vee, alpha_2> = a_12
}

TEST_CASE("negation is an involution matching the index layout") {
  auto rs = build_root_system({TypeLetter::C, 3});
  for (int k = 0; k < rs->num_roots(); ++k) {
    CHECK(rs->negate(rs->negate(k)) == k);
    Coeffs neg = rs->root(k);
    for (int& x : neg) x = -x;
    CHECK(rs->index_of(neg) == rs->negate(k));
  }
}

TEST_CASE("weights symmetrise the Cartan matrix in every type") {
  for (auto type : {CartanType{TypeLetter::A, 4}, CartanType{TypeLetter::B, 4},
                    CartanType{TypeLetter::C, 4}, CartanType{TypeLetter::D, 5},
                    CartanType{TypeLetter::E, 6}, CartanType{TypeLetter::F, 4},
                    CartanType{TypeLetter::G, 2}}) {
    auto rs = build_root_system(type);
    for (int i = 0; i < rs->rank(); ++i) {
      CHECK(rs->cartan()[i][i] == 2);
      for (int j = 0; j < rs->rank(); ++j)
        CHECK(rs->d()[i] * rs->cartan()[i][j] == rs->cartan()[j][i] * rs->d()[j]);
    }
  }
}

TEST_CASE("positive roots are enumerated by height, ties by descending lex") {
  auto f4 = build_root_system({TypeLetter::F, 4});
  CHECK(f4->render(0) == "1000");
  CHECK(f4->render(1) == "0100");
  CHECK(f4->render(2) == "0010");
  CHECK(f4->render(3) == "0001");
  for (int k = 0; k + 1 < f4->num_positive(); ++k) {
    int ha = f4->height(k), hb = f4->height(k + 1);
    CHECK(ha <= hb);
    if (ha == hb) CHECK(f4->root(k) > f4->root(k + 1));
  }
}

TEST_CASE("rendering and parsing round-trip") {
  auto f4 = build_root_system({TypeLetter::F, 4});
  for (int k = 0; k < f4->num_roots(); ++k) CHECK(f4->parse_root(f4->render(k)) == k);
  CHECK(f4->render(f4->negate(f4->parse_root("0121"))) == "-0121");
  CHECK(f4->parse_root("[0,1,2,1]") == f4->parse_root("0121"));

  auto a10 = build_root_system({TypeLetter::A, 10});
  for (int k = 0; k < a10->num_roots(); ++k) {
    CHECK(a10->render(k).front() == '[');  // rank > 9 forces the bracketed form
    CHECK(a10->parse_root(a10->render(k)) == k);
  }

  CHECK_THROWS_AS(f4->parse_root(""), ParseError);
  CHECK_THROWS_AS(f4->parse_root("012"), ParseError);
  CHECK_THROWS_AS(f4->parse_root("[1,2"), ParseError);
  CHECK_THROWS_AS(f4->parse_root("01x1"), ParseError);
  CHECK_THROWS_AS(f4->parse_root("4000"), Error);  // well-formed but not a root
}

TEST_CASE("CartanType parsing") {
  CHECK(CartanType::parse("F4") == CartanType{TypeLetter::F, 4});
  CHECK(CartanType::parse("e8") == CartanType{TypeLetter::E, 8});
  CHECK(CartanType::parse("B").rank == -1);
  CHECK_THROWS_AS(CartanType::parse("H4"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("B2x"), ParseError);
}

TEST_SUITE_END();
