#include "operadix/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace operadix {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer num(std::string(text.substr(i, num_end - i)));
  Integer den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace operadix
