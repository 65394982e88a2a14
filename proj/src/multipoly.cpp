#include "linerig/multipoly.hpp"

#include <cmath>

#include "linerig/error.hpp"

namespace linerig {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"pu1", "pu2", "pu3", "pu4", "pv1", "pv2", "pv3", "pv4"};
  return names[static_cast<int>(v)];
}

MultiPoly MultiPoly::constant(const Integer& c) { return monomial(c, Exponents{}); }

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<int>(v)] = 1;
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const Integer& c, const Exponents& exps) {
  MultiPoly p;
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

int MultiPoly::max_degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw Error("multipoly: exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Integer MultiPoly::evaluate(std::span<const Integer, kNumVars> point) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double, kNumVars> point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < kNumVars; ++i) t *= std::pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& s) const {
  const int idx = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    MultiPoly term = monomial(c, rest);
    for (int k = 0; k < e[idx]; ++k) term *= s;
    out += term;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool any = false;
    if (mag != 1) {
      out += mag.get_str();
      any = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < e[i]; ++k) {
        if (any) out += "*";
        out += var_name(static_cast<Var>(i));
        any = true;
      }
    }
    if (!any) out += "1";
  }
  return out;
}

}  // namespace linerig
