#ifndef QF_RATIONAL_HPP
#define QF_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qf {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace qf

#endif
