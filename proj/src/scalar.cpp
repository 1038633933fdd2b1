#include "oddquad/scalar.hpp"

#include <stdexcept>

namespace oddquad {

ExactScalar rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  ExactScalar x(num, den);
  x.canonicalize();
  return x;
}

std::string to_string(const ExactScalar& x) { return x.get_str(10); }

ExactScalar parse_scalar(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));

  ExactScalar result;
  result.get_num().set_str(std::string(num), 10);
  if (slash == std::string_view::npos) {
    result.get_den() = 1;
  } else {
    result.get_den().set_str(std::string(den), 10);
    if (result.get_den() == 0)
      throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  result.canonicalize();
  return result;
}

bool is_integer(const ExactScalar& x) { return x.get_den() == 1; }

bool has_half_integer_denominator(const ExactScalar& x) {
  return x.get_den() == 1 || x.get_den() == 2;
}

double to_double(const ExactScalar& x) { return x.get_d(); }

}  // namespace oddquad
