#ifndef QF_REFERENCE_HPP
#define QF_REFERENCE_HPP

#include "qf/products.hpp"

namespace qf::ref {

/// Plain serial re-implementations of the scan kernels, written directly
/// from the defining formulas. Kept as the comparison baseline for the
/// parallel kernels; the test suite requires identical output and the
/// benchmark times both.

std::vector<Violation> jacobi_violations(const LieSuperalgebra& g);
std::vector<Violation> closedness_violations(const LieSuperalgebra& g);
std::vector<Violation> left_symmetry_violations(const ProductTable& p);
std::vector<Violation> right_symmetry_violations(const ProductTable& p);
Curvature curvature(const LieSuperalgebra& g, const ProductTable& p);
ProductTable natural_symplectic_product(const LieSuperalgebra& g);

}  // namespace qf::ref

#endif
