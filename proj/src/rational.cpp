#include "qf/rational.hpp"

#include <cctype>

namespace qf {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t start = 0;
  if (text[0] == '-' || text[0] == '+') start = 1;
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits(text, start, text.size())) return std::nullopt;
  } else {
    if (!digits(text, start, slash)) return std::nullopt;
    if (!digits(text, slash + 1, text.size())) return std::nullopt;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace qf
