#include "qf/superspace.hpp"

#include <set>

namespace qf {

SuperSpace::SuperSpace(std::vector<std::string> names, std::vector<Parity> parities)
    : names_(std::move(names)), parities_(std::move(parities)) {
  if (names_.size() != parities_.size())
    throw UsageError("superspace: names/parities length mismatch");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw UsageError("superspace: empty basis name");
    if (!seen.insert(n).second)
      throw UsageError("superspace: duplicate basis name '" + n + "'");
  }
  dim_even_ = 0;
  for (auto p : parities_)
    if (p == Parity::even) ++dim_even_;
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

SpacePtr make_space_with_parities(std::vector<std::string> names,
                                  std::vector<Parity> parities) {
  return std::make_shared<const SuperSpace>(std::move(names), std::move(parities));
}

SpacePtr make_space(const std::vector<std::string>& even_names,
                    const std::vector<std::string>& odd_names) {
  std::vector<std::string> names = even_names;
  names.insert(names.end(), odd_names.begin(), odd_names.end());
  std::vector<Parity> parities(even_names.size(), Parity::even);
  parities.insert(parities.end(), odd_names.size(), Parity::odd);
  return make_space_with_parities(std::move(names), std::move(parities));
}

Vec::Vec(SpacePtr s, RatVec c) : space(std::move(s)), coords(std::move(c)) {
  if (!space) throw UsageError("vector without a space");
  if (coords.size() != space->dim())
    throw UsageError("vector coordinate length mismatch");
}

bool Vec::is_homogeneous() const {
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (qf::is_zero(coords[i])) continue;
    (space->parity(i) == Parity::even ? has_even : has_odd) = true;
  }
  return !(has_even && has_odd);
}

Parity Vec::parity() const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!qf::is_zero(coords[i]) && space->parity(i) == Parity::odd) {
      if (!is_homogeneous()) throw UsageError("parity of a mixed vector");
      return Parity::odd;
    }
  if (!is_homogeneous()) throw UsageError("parity of a mixed vector");
  return Parity::even;
}

Vec basis_vector(const SpacePtr& s, std::size_t i) {
  RatVec c(s->dim());
  c.at(i) = 1;
  return Vec(s, std::move(c));
}

}  // namespace qf
