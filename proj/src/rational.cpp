#include "invariants/rational.hpp"

namespace invariants {

Rational Rational::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(t)));
    }
    mpz_class num(t.substr(0, slash));
    mpz_class den(t.substr(slash + 1));
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  }
}

std::string Rational::str() const {
  return v_.get_str();
}

}  // namespace invariants
