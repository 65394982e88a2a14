#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "linerig/rational.hpp"

namespace linerig {

/// Variables of the join elimination polynomial, in storage order.
enum class Var : int { pu1, pu2, pu3, pu4, pv1, pv2, pv3, pv4 };
inline constexpr int kNumVars = 8;

using Exponents = std::array<std::uint8_t, kNumVars>;

/// Sparse polynomial in eight variables with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored; terms are kept in
/// lexicographic exponent order.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const Integer& c);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Integer& c, const Exponents& exps);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& exps) const;
  int max_degree(Var v) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  /// Term-by-term evaluation.
  Integer evaluate(std::span<const Integer, kNumVars> point) const;
  double evaluate(std::span<const double, kNumVars> point) const;

  /// Replaces variable v by the polynomial s.
  MultiPoly substitute(Var v, const MultiPoly& s) const;

  /// e.g. "-2*pu1*pu2*pv1*pv3*pv4 + ..."
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

const char* var_name(Var v);

}  // namespace linerig
