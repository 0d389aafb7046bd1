// Times the OpenMP scan kernels against their serial references on
// orthogonal direct sums of catalog algebras. Exact rational arithmetic
// makes the triple scans genuinely compute-bound, so the comparison is
// meaningful well below "big data" sizes.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "qf/catalog.hpp"
#include "qf/parallel.hpp"
#include "qf/products.hpp"
#include "qf/reference.hpp"

using namespace qf;
using Clock = std::chrono::steady_clock;

namespace {

LieSuperalgebra direct_sum(const LieSuperalgebra& g1, const LieSuperalgebra& g2,
                           int tag) {
  const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < n1; ++i) {
    names.push_back(g1.space()->name(i));
    parities.push_back(g1.space()->parity(i));
  }
  for (std::size_t i = 0; i < n2; ++i) {
    names.push_back("c" + std::to_string(tag) + "." + g2.space()->name(i));
    parities.push_back(g2.space()->parity(i));
  }
  SpacePtr s = make_space_with_parities(names, parities);
  ProductTable bracket(s);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      RatVec c(n);
      RatVec src = g1.bracket().product(i, j);
      for (std::size_t k = 0; k < n1; ++k) c[k] = src[k];
      bracket.set_product(i, j, c);
    }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      RatVec c(n);
      RatVec src = g2.bracket().product(i, j);
      for (std::size_t k = 0; k < n2; ++k) c[n1 + k] = src[k];
      bracket.set_product(n1 + i, n1 + j, c);
    }
  Matrix vals(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) vals.at(i, j) = g1.form()->value(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      vals.at(n1 + i, n1 + j) = g2.form()->value(i, j);
  BilinearForm omega(s, Parity::even, std::move(vals));
  return LieSuperalgebra(s, std::move(bracket), std::move(omega));
}

LieSuperalgebra build_instance(int copies) {
  auto entries = load_catalog();
  LieSuperalgebra acc = catalog_entry(entries, "K+h3").algebra;
  for (int i = 1; i < copies; ++i)
    acc = direct_sum(acc, catalog_entry(entries, "g2-dim4").algebra, i);
  return acc;
}

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::vector<int> sizes = quick ? std::vector<int>{3} : std::vector<int>{3, 8};
  int reps = 1;

  std::printf("threads: %d\n", parallel_thread_count());
  std::printf("%-6s %-22s %12s %12s %8s\n", "dim", "kernel", "serial(ms)",
              "openmp(ms)", "speedup");
  for (int copies : sizes) {
    LieSuperalgebra g = build_instance(copies);
    ProductTable star = natural_symplectic_product(g, false);

    struct Row {
      const char* name;
      double serial, parallel;
    };
    Row rows[] = {
        {"jacobi-scan", time_ms([&] { ref::jacobi_violations(g); }, reps),
         time_ms([&] { jacobi_violations(g); }, reps)},
        {"closedness-scan", time_ms([&] { ref::closedness_violations(g); }, reps),
         time_ms([&] { closedness_violations(g); }, reps)},
        {"left-symmetry-scan",
         time_ms([&] { ref::left_symmetry_violations(star); }, reps),
         time_ms([&] { left_symmetry_violations(star); }, reps)},
        {"curvature", time_ms([&] { ref::curvature(g, star); }, reps),
         time_ms([&] { curvature(g, star); }, reps)},
        {"natural-product",
         time_ms([&] { ref::natural_symplectic_product(g); }, reps),
         time_ms([&] { natural_symplectic_product(g, false); }, reps)},
    };
    for (const auto& row : rows)
      std::printf("%-6zu %-22s %12.2f %12.2f %7.2fx\n", g.dim(), row.name,
                  row.serial, row.parallel,
                  row.parallel > 0 ? row.serial / row.parallel : 0.0);
  }
  return 0;
}
