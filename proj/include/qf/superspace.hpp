#ifndef QF_SUPERSPACE_HPP
#define QF_SUPERSPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qf/matrix.hpp"
#include "qf/rational.hpp"

namespace qf {

enum class Parity : unsigned { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) ^ static_cast<unsigned>(b)));
}

inline int parity_bit(Parity p) { return static_cast<int>(p); }

/// (-1)^{|a||b|}
inline int sign_of(Parity a, Parity b) {
  return (parity_bit(a) & parity_bit(b)) ? -1 : 1;
}

inline const char* parity_name(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

/// Ordered homogeneous basis with parities. Immutable once built; shared by
/// every object living on it.
class SuperSpace {
 public:
  SuperSpace(std::vector<std::string> names, std::vector<Parity> parities);

  std::size_t dim() const { return names_.size(); }
  std::size_t dim_even() const { return dim_even_; }
  std::size_t dim_odd() const { return names_.size() - dim_even_; }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  Parity parity(std::size_t i) const { return parities_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a basis name, or nullopt.
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool same_basis(const SuperSpace& other) const {
    return names_ == other.names_ && parities_ == other.parities_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::size_t dim_even_;
};

using SpacePtr = std::shared_ptr<const SuperSpace>;

SpacePtr make_space_with_parities(std::vector<std::string> names,
                                  std::vector<Parity> parities);

/// "e1 e2 | f1 f2" style construction, evens then odds.
SpacePtr make_space(const std::vector<std::string>& even_names,
                    const std::vector<std::string>& odd_names);

/// Coordinate vector attached to a space.
struct Vec {
  SpacePtr space;
  RatVec coords;

  Vec() = default;
  Vec(SpacePtr s, RatVec c);

  bool is_zero() const { return rat_vec_is_zero(coords); }

  /// A vector is homogeneous of parity p when every nonzero coordinate sits
  /// on a basis vector of parity p. Zero vectors are homogeneous of either
  /// parity; we report even.
  bool is_homogeneous() const;
  Parity parity() const;
};

Vec basis_vector(const SpacePtr& s, std::size_t i);

}  // namespace qf

#endif
