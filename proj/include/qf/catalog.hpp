#ifndef QF_CATALOG_HPP
#define QF_CATALOG_HPP

#include <string>
#include <vector>

#include "qf/extensions.hpp"

namespace qf {

struct CatalogEntry {
  std::string name;
  LieSuperalgebra algebra;
  struct Expected {
    bool flat;
    bool nilpotent;
    bool non_abelian;
    Parity form_parity;
  } expected;
  std::string provenance;
};

/// Built-in algebras. Every expected flag is re-derived at load time; a
/// mismatch aborts with the entry name.
std::vector<CatalogEntry> load_catalog();

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& entries,
                                  const std::string& name);

struct MorphismClaim {
  LieSuperalgebra source;
  LieSuperalgebra target;
  /// Column j = coordinates of the image of source basis vector j in the
  /// target basis. Must be even and invertible.
  Matrix map;
  bool symplectic = false;  // also require ω_target(φu,φv) = ω_source(u,v)
};

std::vector<Violation> verify_morphism(const MorphismClaim& claim);

struct ClassificationRow {
  std::string family;
  std::string parameters;
  bool admissible = false;
  bool flat = false;
  bool nilpotent = false;
  bool abelian = false;
  std::string matched_form;  // normal-form name, "abelian", or "-"
  /// "ok" when the explicit change of basis verified, "skipped" when it is
  /// irrational at these parameters, "-" for abelian rows.
  std::string map_status;
};

struct ClassificationReport {
  int dimension = 0;
  std::vector<ClassificationRow> rows;
  bool all_ok() const;
};

/// Runs the admissible-pair families over a fixed rational parameter grid,
/// double-extends each, re-derives flatness/nilpotency and verifies the
/// explicit change of basis onto the claimed normal form whenever that map
/// is rational at the chosen parameters.
ClassificationReport verify_classification(int dimension);

/// Exact rational cube root if one exists.
std::optional<Rational> rational_cbrt(const Rational& q);

}  // namespace qf

#endif
