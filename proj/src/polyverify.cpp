#include "linerig/polyverify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "join_polynomial_data.hpp"
#include "linerig/error.hpp"

namespace linerig {

namespace {

MultiPoly pu(int i) { return MultiPoly::variable(static_cast<Var>(i - 1)); }
MultiPoly pv(int i) { return MultiPoly::variable(static_cast<Var>(3 + i)); }

void check_index(int i, int hi) {
  if (i < 1 || i > hi) throw Error("polynomial index out of range");
}

// A value together with the sum of absolute values of everything that went
// into it, which bounds the floating-point cancellation error.
struct Tracked {
  double v = 0.0;
  double mag = 0.0;
};

Tracked lit(double x) { return {x, std::abs(x)}; }
Tracked operator+(Tracked a, Tracked b) { return {a.v + b.v, a.mag + b.mag}; }
Tracked operator-(Tracked a, Tracked b) { return {a.v - b.v, a.mag + b.mag}; }
Tracked operator*(Tracked a, Tracked b) { return {a.v * b.v, a.mag * b.mag}; }

double relative(Tracked lhs, Tracked rhs) {
  const double scale = lhs.mag + rhs.mag;
  const double err = std::abs(lhs.v - rhs.v);
  return scale > 0.0 ? err / scale : err;
}

Tracked dot(const std::vector<double>& a, const std::vector<double>& b) {
  Tracked t;
  for (std::size_t k = 0; k < a.size(); ++k) t = t + lit(a[k]) * lit(b[k]);
  return t;
}

}  // namespace

MultiPoly poly_f1(int i) {
  check_index(i, 3);
  return pu(i) * pv(i) - pu(4) * pv(4);
}
MultiPoly poly_f2(int i) {
  check_index(i, 3);
  return pu(i) - pu(4);
}
MultiPoly poly_f3(int i) {
  check_index(i, 3);
  return pv(i) - pv(4);
}
MultiPoly poly_f4(int i) {
  check_index(i, 2);
  return poly_f1(i) * poly_f3(3) - poly_f1(3) * poly_f3(i);
}
MultiPoly poly_f5(int i) {
  check_index(i, 2);
  return poly_f2(i) * poly_f3(3) - poly_f2(3) * poly_f3(i);
}

MultiPoly derive_f() { return poly_f4(1) * poly_f5(2) - poly_f4(2) * poly_f5(1); }

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::string& join_polynomial_text() {
  static const std::string text = detail::kJoinPolynomialText;
  return text;
}

MultiPoly parse_poly_text(const std::string& text) {
  MultiPoly out;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string coef_text;
    tokens >> coef_text;
    if (!coef_text.empty() && coef_text[0] == '+') coef_text.erase(0, 1);
    Integer coef;
    if (coef_text.empty() || coef.set_str(coef_text, 10) != 0)
      throw Error("polynomial text line " + std::to_string(lineno) + ": bad coefficient");
    Exponents e{};
    std::string var;
    while (tokens >> var) {
      int power = 1;
      if (auto caret = var.find('^'); caret != std::string::npos) {
        try {
          power = std::stoi(var.substr(caret + 1));
        } catch (const std::exception&) {
          throw Error("polynomial text line " + std::to_string(lineno) + ": bad exponent");
        }
        var.resize(caret);
      }
      if (var.size() != 2 || (var[0] != 'u' && var[0] != 'v') || var[1] < '1' || var[1] > '4' || power < 1)
        throw Error("polynomial text line " + std::to_string(lineno) + ": bad variable '" + var + "'");
      const int idx = (var[0] == 'u' ? 0 : 4) + (var[1] - '1');
      e[idx] = static_cast<std::uint8_t>(e[idx] + power);
    }
    out += MultiPoly::monomial(coef, e);
  }
  return out;
}

MultiPoly paper_f() {
  const std::string& text = join_polynomial_text();
  if (fnv1a64(text) != kJoinPolynomialChecksum) throw Error("embedded polynomial transcription fails its checksum");
  return parse_poly_text(text);
}

PolyDiff diff(const MultiPoly& left, const MultiPoly& right) {
  PolyDiff d;
  for (const auto& [e, c] : left.terms()) {
    auto it = right.terms().find(e);
    if (it == right.terms().end())
      d.only_left.emplace_back(e, c);
    else if (it->second != c)
      d.mismatched.emplace_back(e, c, it->second);
  }
  for (const auto& [e, c] : right.terms())
    if (!left.terms().contains(e)) d.only_right.emplace_back(e, c);
  return d;
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(static_cast<Var>(i));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

double ChainReport::max() const { return std::max({four_terms, three_terms, two_terms, final}); }

ChainReport check_equation_chain(const IsometryParams& params, const std::array<double, 4>& pu_in,
                                 const std::array<double, 4>& pv_in) {
  const std::size_t d = params.c_G.size();
  if (d == 0 || params.c_H.size() != d || params.d_G.size() != d || params.d_H.size() != d)
    throw Error("equation chain: parameter dimensions differ");
  for (const auto* dir : {&params.d_G, &params.d_H}) {
    double norm2 = 0.0;
    for (double x : *dir) norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) throw Error("equation chain: direction is not a unit vector");
  }

  const Tracked k = dot(params.c_G, params.c_G) - lit(2.0) * dot(params.c_G, params.c_H) + dot(params.c_H, params.c_H);
  const Tracked a = lit(2.0) * (lit(1.0) - dot(params.d_G, params.d_H));
  const Tracked b = lit(2.0) * (dot(params.c_H, params.d_H) - dot(params.c_G, params.d_H));
  const Tracked c = lit(2.0) * (dot(params.c_G, params.d_G) - dot(params.c_H, params.d_G));

  std::array<Tracked, 4> u, v, lhs;
  for (int i = 0; i < 4; ++i) {
    u[i] = lit(pu_in[i]);
    v[i] = lit(pv_in[i]);
    // ||q(v_i) - q(u_i)||^2 - (p(v_i) - p(u_i))^2 straight from the vectors.
    Tracked sq;
    for (std::size_t x = 0; x < d; ++x) {
      const Tracked diff_x = (lit(params.c_G[x]) + v[i] * lit(params.d_G[x])) -
                             (lit(params.c_H[x]) + u[i] * lit(params.d_H[x]));
      sq = sq + diff_x * diff_x;
    }
    lhs[i] = sq - (v[i] - u[i]) * (v[i] - u[i]);
  }

  ChainReport report;
  for (int i = 0; i < 4; ++i) {
    const Tracked rhs = k + a * u[i] * v[i] + b * u[i] + c * v[i];
    report.four_terms = std::max(report.four_terms, relative(lhs[i], rhs));
  }

  auto f1 = [&](int i) { return u[i] * v[i] - u[3] * v[3]; };
  auto f2 = [&](int i) { return u[i] - u[3]; };
  auto f3 = [&](int i) { return v[i] - v[3]; };
  std::array<Tracked, 3> three;
  for (int i = 0; i < 3; ++i) {
    three[i] = lhs[i] - lhs[3];
    const Tracked rhs = a * f1(i) + b * f2(i) + c * f3(i);
    report.three_terms = std::max(report.three_terms, relative(three[i], rhs));
  }

  auto f4 = [&](int i) { return f1(i) * f3(2) - f1(2) * f3(i); };
  auto f5 = [&](int i) { return f2(i) * f3(2) - f2(2) * f3(i); };
  std::array<Tracked, 2> two;
  for (int i = 0; i < 2; ++i) {
    two[i] = three[i] * f3(2) - three[2] * f3(i);
    const Tracked rhs = a * f4(i) + b * f5(i);
    report.two_terms = std::max(report.two_terms, relative(two[i], rhs));
  }

  // The final step is compared against the expanded polynomial, not the
  // factored products above.
  static const MultiPoly f = derive_f();
  const std::array<double, kNumVars> point{pu_in[0], pu_in[1], pu_in[2], pu_in[3],
                                           pv_in[0], pv_in[1], pv_in[2], pv_in[3]};
  std::array<double, kNumVars> abs_point;
  std::transform(point.begin(), point.end(), abs_point.begin(), [](double x) { return std::abs(x); });
  double f_mag = 0.0;
  for (const auto& [e, coef] : f.terms()) {
    double t = std::abs(coef.get_d());
    for (int x = 0; x < kNumVars; ++x) t *= std::pow(abs_point[x], e[x]);
    f_mag += t;
  }
  const Tracked f_value{f.evaluate(std::span<const double, kNumVars>(point)), f_mag};
  const Tracked final_lhs = two[0] * f5(1) - two[1] * f5(0);
  report.final = relative(final_lhs, a * f_value);
  return report;
}

}  // namespace linerig
