#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qf/algebra_io.hpp"
#include "qf/catalog.hpp"
#include "qf/extensions.hpp"
#include "qf/products.hpp"

namespace {

using namespace qf;

std::string stem_of(const std::string& path) {
  std::size_t dot = path.rfind(".alg");
  return dot == std::string::npos ? path : path.substr(0, dot);
}

std::string format_vector(const SuperSpace& s, const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v[i]) + "*" + s.name(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_basis_list(const SuperSpace& s, const std::vector<RatVec>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(s, vs[i]);
  }
  return out + "}";
}

void print_matrix_rows_are_images(std::ostream& os, const Matrix& op_matrix) {
  Matrix rows = op_matrix.transposed();
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      if (j) os << " ";
      os << to_string(rows.at(i, j));
    }
    os << "\n";
  }
}

int run_validate(const std::string& path) {
  auto parsed = load_algebra_file(path);
  const auto& g = parsed.algebra;
  std::cout << "algebra " << parsed.name << " (dim " << g.dim() << ", form "
            << (g.form() ? parity_name(g.form()->parity()) : "absent") << ")\n";
  auto violations = validate(g);
  for (const auto& v : violations) std::cout << "violation: " << v.to_string() << "\n";
  std::cout << "result: " << (violations.empty() ? "VALID" : "INVALID") << "\n";
  return violations.empty() ? 0 : 1;
}

int run_product(const std::string& path, const std::string& kind) {
  auto parsed = load_algebra_file(path);
  const auto& g = parsed.algebra;
  ProductTable p(g.space());
  if (kind == "natural") {
    p = natural_symplectic_product(g);
  } else if (kind == "levi-civita") {
    p = levi_civita_product(g);
  } else if (kind == "opposite") {
    p = opposite_product(levi_civita_product(g));
  } else {
    throw UsageError("unknown product kind '" + kind + "'");
  }
  std::cout << "# product kind=" << kind << " algebra=" << parsed.name << "\n";
  std::cout << serialize_product_table(p);
  return 0;
}

int run_curvature(const std::string& path) {
  auto parsed = load_algebra_file(path);
  const auto& g = parsed.algebra;
  ProductTable star = natural_symplectic_product(g);
  Curvature r = curvature(g, star);
  const auto& s = *g.space();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (r.at(i, j).is_zero()) continue;
      std::cout << "R(" << s.name(i) << "," << s.name(j) << "):\n";
      print_matrix_rows_are_images(std::cout, r.at(i, j).matrix());
    }
  bool flat = r.is_zero();
  std::cout << (flat ? "FLAT" : "NOT FLAT") << "\n";
  return flat ? 0 : 1;
}

int run_analyze(const std::string& path) {
  auto parsed = load_algebra_file(path);
  const auto& g = parsed.algebra;
  auto bad = validate(g);
  if (!bad.empty()) {
    for (const auto& v : bad) std::cerr << "violation: " << v.to_string() << "\n";
    return 1;
  }
  const auto& s = *g.space();
  StructuralReport rep = series(g);
  std::cout << "algebra " << parsed.name << " (dim " << g.dim() << ")\n";
  std::cout << "center: " << format_basis_list(s, rep.center_basis) << "\n";
  std::cout << "derived: " << format_basis_list(s, rep.derived_basis) << "\n";
  std::cout << "lower-central dims:";
  for (auto d : rep.lcs_dims) std::cout << " " << d;
  std::cout << "\nderived-series dims:";
  for (auto d : rep.ds_dims) std::cout << " " << d;
  std::cout << "\nnilpotent: " << (rep.is_nilpotent ? "yes" : "no") << "\n";
  std::cout << "solvable: " << (rep.is_solvable ? "yes" : "no") << "\n";
  auto opt_str = [](const std::optional<bool>& b) {
    return !b ? "n/a" : (*b ? "yes" : "no");
  };
  std::cout << "center degenerate: " << opt_str(rep.center_degenerate) << "\n";
  std::cout << "derived degenerate: " << opt_str(rep.derived_degenerate) << "\n";

  if (!g.form()) {
    std::cout << "structural identities: skipped (no form)\n";
    return 0;
  }
  bool all_pass = true;
  auto report = [&](const char* name, bool pass) {
    std::cout << "identity " << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    if (!pass) all_pass = false;
  };
  const std::size_t n = g.dim();
  ProductTable lc = levi_civita_product(g);
  auto norm_lc = normalizers(g, lc);
  std::vector<RatVec> lc_range;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lc_range.push_back(lc.product(i, j));
  auto z = center(g);
  auto derived_perp = orthogonal_complement(derived_subalgebra(g), *g.form());
  auto lc_range_perp = orthogonal_complement(lc_range, *g.form());
  report("[g,g]perp = N_l(levi-civita)",
         subspace_equal(derived_perp, norm_lc.left, n));
  report("(g.g)perp subset [g,g]perp",
         subspace_contains_all(derived_perp, lc_range_perp, n));
  report("Z = (g.g)perp", subspace_equal(z, lc_range_perp, n));
  report("Z = N_l cap N_r (levi-civita)",
         subspace_equal(z, norm_lc.two_sided, n));

  ProductTable star = natural_symplectic_product(g);
  auto norm_star = normalizers(g, star);
  std::vector<RatVec> star_range;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) star_range.push_back(star.product(i, j));
  auto star_range_perp = orthogonal_complement(star_range, *g.form());
  report("Z = (g*g)perp (natural)", subspace_equal(z, star_range_perp, n));
  report("Z = N_r (natural)", subspace_equal(z, norm_star.right, n));
  report("Z = N_r cap N_l (natural)", subspace_equal(z, norm_star.two_sided, n));
  auto meet = subspace_intersection(norm_star.left, derived_perp, n);
  report("Z = N_l cap [g,g]perp (natural)", subspace_equal(z, meet, n));
  return all_pass ? 0 : 1;
}

int run_extend(const std::string& path, const std::string& variant_name,
               const std::string& xi_path, const std::string& b0_text,
               bool check_only, std::string out_path) {
  auto parsed = load_algebra_file(path);
  auto variant = parse_variant(variant_name);
  if (!variant) throw UsageError("unknown variant '" + variant_name + "'");
  const auto& s = parsed.algebra.space();
  LinearOperator xi = xi_path.empty()
                          ? LinearOperator::zero(s, variant_d_parity(*variant))
                          : LinearOperator(s, variant_d_parity(*variant),
                                           load_operator_matrix(xi_path, s->dim()));
  RatVec b0_coords(s->dim());
  if (!b0_text.empty()) {
    b0_coords = parse_rational_list(b0_text);
    if (b0_coords.size() != s->dim())
      throw UsageError("--b0 needs " + std::to_string(s->dim()) + " coordinates");
  }
  ExtensionSpec spec{parsed.algebra, std::move(xi), Vec(s, std::move(b0_coords)),
                     *variant};
  auto violations = check_admissible(spec);
  for (const auto& v : violations)
    std::cout << "violation: " << v.to_string() << "\n";
  std::cout << "admissible: " << (violations.empty() ? "yes" : "no") << "\n";
  if (!violations.empty()) return 1;
  if (check_only) return 0;
  DoubleExtension ext = double_extend(spec);
  std::cout << "flat: " << (is_flat(ext.algebra) ? "yes" : "no") << "\n";
  if (out_path.empty()) out_path = stem_of(path) + ".ext.alg";
  write_algebra_file(out_path, parsed.name + "-ext", ext.algebra);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_reduce(const std::string& path, const std::string& element_text,
               std::string out_path) {
  auto parsed = load_algebra_file(path);
  const auto& s = parsed.algebra.space();
  RatVec coords = parse_rational_list(element_text);
  if (coords.size() != s->dim())
    throw UsageError("--element needs " + std::to_string(s->dim()) + " coordinates");
  LieSuperalgebra quotient = reduce(parsed.algebra, Vec(s, std::move(coords)));
  if (out_path.empty()) out_path = stem_of(path) + ".red.alg";
  write_algebra_file(out_path, parsed.name + "-red", quotient);
  std::cout << "reduced dim: " << quotient.dim() << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_decompose(const std::string& path, std::string out_path) {
  auto parsed = load_algebra_file(path);
  Decomposition dec = decompose(parsed.algebra);
  const auto& seed = dec.spec.seed;
  std::cout << "variant: " << variant_name(dec.spec.variant) << "\n";
  std::cout << "seed dim: " << seed.dim() << "\n";
  std::cout << "adapted basis (d, seed..., e):\n";
  for (const auto& v : dec.adapted_basis)
    std::cout << "  " << format_vector(*parsed.algebra.space(), v) << "\n";
  std::cout << "xi (rows are images):\n";
  print_matrix_rows_are_images(std::cout, dec.spec.xi.matrix());
  std::cout << "b0: " << format_vector(*seed.space(), dec.spec.b0.coords) << "\n";
  if (out_path.empty()) out_path = stem_of(path) + ".seed.alg";
  write_algebra_file(out_path, parsed.name + "-seed", seed);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

void print_classification(const ClassificationReport& rep) {
  std::cout << "classification dim " << rep.dimension << "\n";
  for (const auto& r : rep.rows) {
    std::cout << "  " << r.family << " [" << r.parameters << "]"
              << " admissible=" << (r.admissible ? "yes" : "NO");
    if (r.admissible)
      std::cout << " flat=" << (r.flat ? "yes" : "NO")
                << " nilpotent=" << (r.nilpotent ? "yes" : "NO") << " -> "
                << (r.abelian ? "abelian" : r.matched_form)
                << " map=" << r.map_status;
    std::cout << "\n";
  }
  std::cout << "dim " << rep.dimension << " result: "
            << (rep.all_ok() ? "ALL OK" : "FAILURES") << "\n";
}

int run_catalog(bool verify) {
  auto entries = load_catalog();
  for (const auto& e : entries) {
    std::cout << e.name << " dim=" << e.algebra.dim()
              << " form=" << parity_name(e.expected.form_parity)
              << " flat=" << (e.expected.flat ? "yes" : "no")
              << " nilpotent=" << (e.expected.nilpotent ? "yes" : "no")
              << " abelian=" << (e.expected.non_abelian ? "no" : "yes") << "  # "
              << e.provenance << "\n";
  }
  if (!verify) return 0;
  ClassificationReport r4 = verify_classification(4);
  ClassificationReport r5 = verify_classification(5);
  print_classification(r4);
  print_classification(r5);
  return r4.all_ok() && r5.all_ok() ? 0 : 1;
}

int run_morphism(const std::string& src_path, const std::string& dst_path,
                 const std::string& map_path, bool symplectic) {
  auto src = load_algebra_file(src_path);
  auto dst = load_algebra_file(dst_path);
  if (src.algebra.dim() != dst.algebra.dim())
    throw UsageError("source and target dimensions differ");
  Matrix map = load_operator_matrix(map_path, src.algebra.dim());
  MorphismClaim claim{src.algebra, dst.algebra, std::move(map), symplectic};
  auto violations = verify_morphism(claim);
  for (const auto& v : violations)
    std::cout << "violation: " << v.to_string() << "\n";
  std::cout << "morphism: " << (violations.empty() ? "ok" : "rejected") << "\n";
  return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for quasi-Frobenius Lie superalgebras: "
      "validation, symplectic products, curvature, flat double extensions, "
      "and the low-dimensional catalog."};
  app.require_subcommand(1);

  std::string file, kind = "natural", variant, xi_path, b0_text, element_text;
  std::string out_path, src_path, dst_path, map_path;
  bool check_only = false, verify = false, symplectic = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check all axioms of an algebra file");
  validate_cmd->add_option("file", file, "algebra file")->required();

  auto* product_cmd = app.add_subcommand("product", "Print a product table");
  product_cmd->add_option("file", file, "algebra file")->required();
  product_cmd->add_option("--kind", kind, "natural | levi-civita | opposite")
      ->default_val("natural");

  auto* curvature_cmd =
      app.add_subcommand("curvature", "Curvature of the natural product");
  curvature_cmd->add_option("file", file, "algebra file")->required();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Structure report and subspace identities");
  analyze_cmd->add_option("file", file, "algebra file")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Flat double extension");
  extend_cmd->add_option("file", file, "seed algebra file")->required();
  extend_cmd->add_option("--variant", variant,
                         "even-orthosymplectic | odd-orthosymplectic | "
                         "even-periplectic | odd-periplectic")
      ->required();
  extend_cmd->add_option("--xi", xi_path,
                         "matrix file; row i = image of basis vector i "
                         "(default: zero map)");
  extend_cmd->add_option("--b0", b0_text,
                         "comma-separated coordinates (default: zero)");
  extend_cmd->add_flag("--check-only", check_only, "only report admissibility");
  extend_cmd->add_option("--out", out_path, "output file (default: <stem>.ext.alg)");

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Quotient by an isotropic central line");
  reduce_cmd->add_option("file", file, "algebra file")->required();
  reduce_cmd->add_option("--element", element_text, "comma-separated coordinates")
      ->required();
  reduce_cmd->add_option("--out", out_path, "output file (default: <stem>.red.alg)");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Recover (seed, xi, b0, variant)");
  decompose_cmd->add_option("file", file, "algebra file")->required();
  decompose_cmd->add_option("--out", out_path,
                            "seed output file (default: <stem>.seed.alg)");

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in algebras");
  catalog_cmd->add_flag("--verify", verify,
                        "run the dimension-4 and dimension-5 classification");

  auto* morphism_cmd = app.add_subcommand("morphism", "Verify an explicit morphism");
  morphism_cmd->add_option("src", src_path, "source algebra file")->required();
  morphism_cmd->add_option("dst", dst_path, "target algebra file")->required();
  morphism_cmd->add_option("--map", map_path,
                           "matrix file; row i = image of source basis vector i "
                           "in the target basis")
      ->required();
  morphism_cmd->add_flag("--symplectic", symplectic, "also require form preservation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) return run_validate(file);
    if (*product_cmd) return run_product(file, kind);
    if (*curvature_cmd) return run_curvature(file);
    if (*analyze_cmd) return run_analyze(file);
    if (*extend_cmd)
      return run_extend(file, variant, xi_path, b0_text, check_only, out_path);
    if (*reduce_cmd) return run_reduce(file, element_text, out_path);
    if (*decompose_cmd) return run_decompose(file, out_path);
    if (*catalog_cmd) return run_catalog(verify);
    if (*morphism_cmd) return run_morphism(src_path, dst_path, map_path, symplectic);
  } catch (const qf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qf::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
