#include "ucob/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "ucob/errors.hpp"

namespace ucob {

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { throw ParseError("bad rational: '" + text + "'"); };
  if (text.empty()) bad();
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) bad();
  try {
    mpq_class q(text, 10);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rational();
}

std::string Rational::str() const {
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ucob
