#include <doctest.h>

#include <cmath>
#include <random>

#include "linerig/error.hpp"
#include "linerig/polyverify.hpp"

using namespace linerig;

namespace {

using Point = std::array<Integer, kNumVars>;

// f straight from its definition on numbers, with no polynomial arithmetic.
Integer f_by_definition(const Point& x) {
  auto pu = [&](int i) { return x[i - 1]; };
  auto pv = [&](int i) { return x[3 + i]; };
  auto f1 = [&](int i) -> Integer { return pu(i) * pv(i) - pu(4) * pv(4); };
  auto f2 = [&](int i) -> Integer { return pu(i) - pu(4); };
  auto f3 = [&](int i) -> Integer { return pv(i) - pv(4); };
  auto f4 = [&](int i) -> Integer { return f1(i) * f3(3) - f1(3) * f3(i); };
  auto f5 = [&](int i) -> Integer { return f2(i) * f3(3) - f2(3) * f3(i); };
  return f4(1) * f5(2) - f4(2) * f5(1);
}

Point random_point(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  Point x;
  for (auto& c : x) c = d(rng);
  return x;
}

MultiPoly random_poly(std::mt19937_64& rng) {
  MultiPoly p;
  for (int t = 0; t < 4; ++t) {
    Exponents e{};
    for (auto& k : e) k = static_cast<std::uint8_t>(rng() % 2);
    p += MultiPoly::monomial(static_cast<long>(rng() % 11) - 5, e);
  }
  return p;
}

std::vector<double> unit(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> n;
  std::vector<double> v(d);
  double s = 0;
  for (auto& x : v) {
    x = n(rng);
    s += x * x;
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

IsometryParams random_params(std::mt19937_64& rng, int d, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  IsometryParams p;
  p.c_G.resize(d);
  p.c_H.resize(d);
  for (auto& x : p.c_G) x = n(rng);
  for (auto& x : p.c_H) x = n(rng);
  p.d_G = unit(rng, d);
  p.d_H = unit(rng, d);
  return p;
}

}  // namespace

TEST_CASE("the transcribed polynomial equals the derived one") {
  const MultiPoly derived = derive_f();
  const MultiPoly transcribed = paper_f();
  CHECK(derived.term_count() == 44);
  CHECK(transcribed.term_count() == 44);
  CHECK(diff(derived, transcribed).empty());
  CHECK(derived == transcribed);
  CHECK(fnv1a64(join_polynomial_text()) == kJoinPolynomialChecksum);
}

TEST_CASE("shape of the polynomial") {
  const MultiPoly f = paper_f();
  CHECK_FALSE(f.is_zero());
  CHECK(f.total_degree() == 5);
  for (Var v : {Var::pu1, Var::pu2, Var::pu3, Var::pu4}) CHECK(f.max_degree(v) == 1);
  for (const auto& [e, c] : f.terms()) CHECK((abs(c) == 1 || abs(c) == 2));
}

TEST_CASE("evaluation matches the definition") {
  const Point x{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(paper_f().evaluate(x) == derive_f().evaluate(x));
  CHECK(derive_f().evaluate(x) == f_by_definition(x));

  std::mt19937_64 rng(51);
  const MultiPoly f = derive_f();
  for (int t = 0; t < 200; ++t) {
    const Point p = random_point(rng, 1000);
    CHECK(f.evaluate(p) == f_by_definition(p));
  }
}

TEST_CASE("building blocks") {
  CHECK(poly_f4(1) == poly_f1(1) * poly_f3(3) - poly_f1(3) * poly_f3(1));
  CHECK(poly_f5(2) == poly_f2(2) * poly_f3(3) - poly_f2(3) * poly_f3(2));
  CHECK(poly_f2(1) == MultiPoly::variable(Var::pu1) - MultiPoly::variable(Var::pu4));
  CHECK_THROWS_AS(poly_f1(0), Error);
  CHECK_THROWS_AS(poly_f1(4), Error);
  CHECK_THROWS_AS(poly_f4(3), Error);
  CHECK_THROWS_AS(poly_f5(3), Error);
}

TEST_CASE("f vanishes when v3 and v4 coincide") {
  const MultiPoly f = derive_f();
  const MultiPoly v4 = MultiPoly::variable(Var::pv4);
  CHECK(f.substitute(Var::pv3, v4).is_zero());
  CHECK(f.substitute(Var::pv3, v4).substitute(Var::pu3, MultiPoly::variable(Var::pu4)).is_zero());
  // but not when only the u coordinates coincide
  CHECK_FALSE(f.substitute(Var::pu3, MultiPoly::variable(Var::pu4)).is_zero());
}

TEST_CASE("ring laws and the evaluation homomorphism") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    const Point x = random_point(rng, 50);
    CHECK(((a + b) * c).evaluate(x) == (a.evaluate(x) + b.evaluate(x)) * c.evaluate(x));
    CHECK((a * (b * c)).evaluate(x) == a.evaluate(x) * b.evaluate(x) * c.evaluate(x));
  }
  const MultiPoly f = derive_f();
  for (int t = 0; t < 100; ++t) {
    const Point x = random_point(rng, 1 << 20);
    const MultiPoly g = random_poly(rng);
    CHECK(((f + g) - g).evaluate(x) == f.evaluate(x));
    CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
  }
}

TEST_CASE("double evaluation tracks exact evaluation") {
  std::mt19937_64 rng(53);
  const MultiPoly f = derive_f();
  for (int t = 0; t < 50; ++t) {
    const Point x = random_point(rng, 30);
    std::array<double, kNumVars> xd;
    for (int i = 0; i < kNumVars; ++i) xd[i] = x[i].get_d();
    CHECK(f.evaluate(xd) == doctest::Approx(f.evaluate(x).get_d()));
  }
}

TEST_CASE("parser") {
  const MultiPoly p = parse_poly_text("# c\n+2 u1 v3^2\n-1 u1 v3 v3\n\n3\n");
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient(Exponents{1, 0, 0, 0, 0, 0, 2, 0}) == 1);
  CHECK(p.coefficient(Exponents{}) == 3);
  CHECK(parse_poly_text("").is_zero());
  CHECK_THROWS_AS(parse_poly_text("x u1"), Error);
  CHECK_THROWS_AS(parse_poly_text("1 u5"), Error);
  CHECK_THROWS_AS(parse_poly_text("1 w1"), Error);
  CHECK_THROWS_AS(parse_poly_text("1 u1^z"), Error);
  CHECK_THROWS_AS(parse_poly_text("1 u1^0"), Error);
}

TEST_CASE("diff reports every kind of difference") {
  const MultiPoly a = parse_poly_text("1 u1\n2 u2\n3 u3\n");
  const MultiPoly b = parse_poly_text("1 u1\n5 u2\n1 v4\n");
  const PolyDiff d = diff(a, b);
  CHECK(d.only_left.size() == 1);
  CHECK(d.only_right.size() == 1);
  REQUIRE(d.mismatched.size() == 1);
  CHECK(std::get<1>(d.mismatched[0]) == 2);
  CHECK(std::get<2>(d.mismatched[0]) == 5);
  CHECK(monomial_string(d.only_right[0].first) == "pv4");
  CHECK(monomial_string(Exponents{}) == "1");
}

TEST_CASE("equation chain holds on arbitrary inputs") {
  std::mt19937_64 rng(54);
  std::normal_distribution<double> n(0.0, 2.0);
  for (int t = 0; t < 300; ++t) {
    const int d = 2 + t % 3;
    const IsometryParams params = random_params(rng, d, 1.0);
    std::array<double, 4> pu, pv;
    for (auto& x : pu) x = n(rng);
    for (auto& x : pv) x = n(rng);
    const ChainReport r = check_equation_chain(params, pu, pv);
    CHECK(r.max() <= 1e-9);
  }
}

TEST_CASE("equation chain with identical isometries") {
  std::mt19937_64 rng(55);
  IsometryParams p = random_params(rng, 3, 1.0);
  p.c_H = p.c_G;
  p.d_H = p.d_G;
  const ChainReport r = check_equation_chain(p, {0.1, 0.5, -0.3, 2.0}, {1.0, -1.5, 0.25, 0.75});
  CHECK(r.max() <= 1e-9);
}

TEST_CASE("equation chain residuals are scale stable") {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 50; ++t) {
    IsometryParams p = random_params(rng, 3, 1.0);
    std::array<double, 4> pu{0.3, -1.1, 0.8, 1.9}, pv{-0.7, 0.2, 1.4, -2.2};
    for (double s : {1e-3, 1.0, 1e3}) {
      IsometryParams q = p;
      for (auto& x : q.c_G) x *= s;
      for (auto& x : q.c_H) x *= s;
      std::array<double, 4> su, sv;
      for (int i = 0; i < 4; ++i) {
        su[i] = pu[i] * s;
        sv[i] = pv[i] * s;
      }
      CHECK(check_equation_chain(q, su, sv).max() <= 1e-9);
    }
  }
}

TEST_CASE("equation chain rejects bad parameters") {
  IsometryParams p{{0, 0}, {0, 0}, {1, 0}, {0, 1}};
  CHECK_NOTHROW(check_equation_chain(p, {1, 2, 3, 4}, {5, 6, 7, 8}));
  IsometryParams mixed = p;
  mixed.c_H = {0, 0, 0};
  CHECK_THROWS_AS(check_equation_chain(mixed, {1, 2, 3, 4}, {5, 6, 7, 8}), Error);
  IsometryParams long_dir = p;
  long_dir.d_G = {1, 1};
  CHECK_THROWS_AS(check_equation_chain(long_dir, {1, 2, 3, 4}, {5, 6, 7, 8}), Error);
}
