#include "witgen/rational.hpp"

namespace witgen {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::domain, "empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    fail(errc::domain, "malformed rational literal: '" + text + "'");
  if (r.get_den() == 0)
    fail(errc::domain, "rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace witgen
