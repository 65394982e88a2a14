#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linerig/multipoly.hpp"

namespace linerig {

/// Elimination polynomial built from its defining products:
///   f1(i) = pu_i pv_i - pu4 pv4,  f2(i) = pu_i - pu4,  f3(i) = pv_i - pv4,
///   f4(i) = f1(i) f3(3) - f1(3) f3(i),  f5(i) = f2(i) f3(3) - f2(3) f3(i),
///   f = f4(1) f5(2) - f4(2) f5(1).
MultiPoly derive_f();

/// Building blocks of derive_f, exposed for tests. i is 1-based.
MultiPoly poly_f1(int i);
MultiPoly poly_f2(int i);
MultiPoly poly_f3(int i);
MultiPoly poly_f4(int i);
MultiPoly poly_f5(int i);

/// The published polynomial, parsed from the transcription compiled into the
/// library. Throws Error if the embedded text fails its checksum.
MultiPoly paper_f();

/// Parses the transcription format: one term per line, "<coef> <var>[^k] ...",
/// '#' starts a comment line. Variables are u1..u4, v1..v4.
MultiPoly parse_poly_text(const std::string& text);

inline constexpr std::uint64_t kJoinPolynomialChecksum = 0x13158882f89b109aULL;
std::uint64_t fnv1a64(const std::string& data);
const std::string& join_polynomial_text();

struct PolyDiff {
  std::vector<std::pair<Exponents, Integer>> only_left;
  std::vector<std::pair<Exponents, Integer>> only_right;
  /// Same monomial, different coefficient: (monomial, left, right).
  std::vector<std::tuple<Exponents, Integer, Integer>> mismatched;

  bool empty() const { return only_left.empty() && only_right.empty() && mismatched.empty(); }
};

PolyDiff diff(const MultiPoly& left, const MultiPoly& right);
std::string monomial_string(const Exponents& e);

struct IsometryParams {
  std::vector<double> c_G;
  std::vector<double> c_H;
  std::vector<double> d_G;  // unit
  std::vector<double> d_H;  // unit
};

/// Relative residuals of the identities along the elimination chain, with
/// q(v) = c_G + p(v) d_G and q(u) = c_H + p(u) d_H. Each residual is
/// |lhs - rhs| divided by the summed magnitudes of all terms involved.
struct ChainReport {
  double four_terms = 0.0;   // expanded squared-length identity, i = 1..4
  double three_terms = 0.0;  // differences against i = 4
  double two_terms = 0.0;    // f3-weighted eliminations, i = 1, 2
  double final = 0.0;        // 2(1 - d_G.d_H) f against the expanded polynomial
  double max() const;
};

/// Throws Error on mismatched dimensions or non-unit directions (1e-12).
ChainReport check_equation_chain(const IsometryParams& params, const std::array<double, 4>& pu,
                                 const std::array<double, 4>& pv);

}  // namespace linerig
