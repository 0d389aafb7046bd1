#ifndef QF_ALGEBRA_IO_HPP
#define QF_ALGEBRA_IO_HPP

#include <string>

#include "qf/lie_superalgebra.hpp"

namespace qf {

/// Hard parse failure; carries the 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct ParsedAlgebra {
  std::string name;
  LieSuperalgebra algebra;
};

/// Text format:
///
///   algebra <name>
///   basis e1:even e2:even f1:odd
///   bracket [e1,f1] = 1*f1 - 1/2*f2
///   form parity=odd
///   omega(e1,f1) = 1
///
/// Bracket lines carry only pairs with i <= j in basis order (odd-odd
/// diagonals allowed); the mirrored entry is filled by graded
/// anti-symmetry. Each omega pair appears in one orientation only. The
/// form section is optional. '#' starts a comment line.
ParsedAlgebra parse_algebra_text(const std::string& text);
ParsedAlgebra load_algebra_file(const std::string& path);

std::string serialize_algebra(const std::string& name, const LieSuperalgebra& g);
void write_algebra_file(const std::string& path, const std::string& name,
                        const LieSuperalgebra& g);

/// Matrix files: one row per line, whitespace-separated rationals; row i is
/// the image of basis vector i, so the operator matrix is the transpose of
/// the parsed rows.
Matrix parse_matrix_rows_text(const std::string& text);
Matrix load_operator_matrix(const std::string& path, std::size_t dim);

/// Comma-separated rationals.
RatVec parse_rational_list(const std::string& text);

/// Product tables in the same term grammar, one "bi*bj = ..." line per
/// nonzero product, rows in basis order.
std::string serialize_product_table(const ProductTable& p);
ProductTable parse_product_table_text(const std::string& text, const SpacePtr& s);

}  // namespace qf

#endif
