#include "ainf/scalar.hpp"

#include <stdexcept>

namespace ainf {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ainf
