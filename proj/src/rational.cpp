#include "linerig/rational.hpp"

#include "linerig/error.hpp"

namespace linerig {

Rational parse_rational(std::string_view text) {
  Rational q;
  const std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw Error("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace linerig
