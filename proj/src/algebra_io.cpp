#include "qf/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qf {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Rational parse_rat_or_throw(const std::string& tok, int line) {
  auto q = parse_rational(tok);
  if (!q) throw ParseError(line, "malformed rational '" + tok + "'");
  return *q;
}

// "1*f1 - 1/2*f2" -> coordinate vector. Terms are separated by ws +/- ws.
RatVec parse_terms(const std::string& rhs, const SuperSpace& space, int line) {
  RatVec out(space.dim());
  auto toks = split_ws(rhs);
  if (toks.empty()) throw ParseError(line, "empty right-hand side");
  int sign = 1;
  bool expect_term = true;
  for (const auto& tok : toks) {
    if (!expect_term) {
      if (tok == "+") sign = 1;
      else if (tok == "-") sign = -1;
      else throw ParseError(line, "expected '+' or '-' before '" + tok + "'");
      expect_term = true;
      continue;
    }
    std::string term = tok;
    Rational coeff = sign;
    std::size_t star = term.find('*');
    std::string name;
    if (star == std::string::npos) {
      if (starts_with(term, "-")) {
        coeff = -coeff;
        term = term.substr(1);
      }
      name = term;
    } else {
      coeff = coeff * parse_rat_or_throw(term.substr(0, star), line);
      name = term.substr(star + 1);
    }
    auto idx = space.index_of(name);
    if (!idx) throw ParseError(line, "unknown basis name '" + name + "'");
    out[*idx] += coeff;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError(line, "dangling '+'/'-'");
  return out;
}

std::string format_terms(const SuperSpace& space, const RatVec& coords) {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (is_zero(coords[k])) continue;
    Rational c = coords[k];
    if (out.empty()) {
      out = to_string(c) + "*" + space.name(k);
    } else if (sgn(c) < 0) {
      out += " - " + to_string(Rational(-c)) + "*" + space.name(k);
    } else {
      out += " + " + to_string(c) + "*" + space.name(k);
    }
  }
  return out;
}

}  // namespace

ParsedAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;

  std::string name;
  SpacePtr space;
  std::vector<BracketEntry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen_brackets;
  std::optional<Parity> form_parity;
  Matrix form_values;
  std::set<std::pair<std::size_t, std::size_t>> seen_omegas;

  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (starts_with(line, "algebra")) {
      if (!name.empty()) throw ParseError(lineno, "duplicate 'algebra' line");
      auto toks = split_ws(line);
      if (toks.size() != 2) throw ParseError(lineno, "expected 'algebra <name>'");
      name = toks[1];
    } else if (starts_with(line, "basis")) {
      if (space) throw ParseError(lineno, "duplicate 'basis' line");
      if (name.empty()) throw ParseError(lineno, "'basis' before 'algebra'");
      auto toks = split_ws(line);
      std::vector<std::string> names;
      std::vector<Parity> parities;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        std::size_t colon = toks[t].find(':');
        if (colon == std::string::npos)
          throw ParseError(lineno, "basis token '" + toks[t] + "' needs name:parity");
        std::string pname = toks[t].substr(colon + 1);
        if (pname != "even" && pname != "odd")
          throw ParseError(lineno, "parity must be 'even' or 'odd'");
        names.push_back(toks[t].substr(0, colon));
        parities.push_back(pname == "even" ? Parity::even : Parity::odd);
      }
      try {
        space = make_space_with_parities(std::move(names), std::move(parities));
      } catch (const UsageError& e) {
        throw ParseError(lineno, e.what());
      }
      form_values = Matrix(space->dim(), space->dim());
    } else if (starts_with(line, "bracket")) {
      if (!space) throw ParseError(lineno, "'bracket' before 'basis'");
      if (form_parity) throw ParseError(lineno, "'bracket' after 'form'");
      std::size_t lb = line.find('['), comma = line.find(','), rb = line.find(']');
      std::size_t eq = line.find('=');
      if (lb == std::string::npos || comma == std::string::npos ||
          rb == std::string::npos || eq == std::string::npos || comma < lb ||
          rb < comma || eq < rb)
        throw ParseError(lineno, "expected 'bracket [bi,bj] = terms'");
      std::string an = trim(line.substr(lb + 1, comma - lb - 1));
      std::string bn = trim(line.substr(comma + 1, rb - comma - 1));
      auto ia = space->index_of(an), ib = space->index_of(bn);
      if (!ia) throw ParseError(lineno, "unknown basis name '" + an + "'");
      if (!ib) throw ParseError(lineno, "unknown basis name '" + bn + "'");
      if (*ia > *ib)
        throw ParseError(lineno, "bracket pairs must be given with i <= j");
      if (*ia == *ib && space->parity(*ia) == Parity::even)
        throw ParseError(lineno, "[" + an + "," + an + "] vanishes for an even vector");
      if (!seen_brackets.insert({*ia, *ib}).second)
        throw ParseError(lineno, "duplicate bracket pair [" + an + "," + bn + "]");
      RatVec coords = parse_terms(trim(line.substr(eq + 1)), *space, lineno);
      for (std::size_t k = 0; k < space->dim(); ++k)
        if (!is_zero(coords[k]) &&
            space->parity(k) != space->parity(*ia) + space->parity(*ib))
          throw ParseError(lineno, "term '" + space->name(k) +
                                       "' violates the parity grading");
      entries.push_back({*ia, *ib, std::move(coords)});
    } else if (starts_with(line, "form")) {
      if (!space) throw ParseError(lineno, "'form' before 'basis'");
      if (form_parity) throw ParseError(lineno, "duplicate 'form' line");
      auto toks = split_ws(line);
      if (toks.size() != 2 || !starts_with(toks[1], "parity="))
        throw ParseError(lineno, "expected 'form parity=even|odd'");
      std::string p = toks[1].substr(7);
      if (p != "even" && p != "odd")
        throw ParseError(lineno, "parity must be 'even' or 'odd'");
      form_parity = p == "even" ? Parity::even : Parity::odd;
    } else if (starts_with(line, "omega")) {
      if (!form_parity) throw ParseError(lineno, "'omega' before 'form'");
      std::size_t lp = line.find('('), comma = line.find(','), rp = line.find(')');
      std::size_t eq = line.find('=');
      if (lp == std::string::npos || comma == std::string::npos ||
          rp == std::string::npos || eq == std::string::npos)
        throw ParseError(lineno, "expected 'omega(bi,bj) = value'");
      std::string an = trim(line.substr(lp + 1, comma - lp - 1));
      std::string bn = trim(line.substr(comma + 1, rp - comma - 1));
      auto ia = space->index_of(an), ib = space->index_of(bn);
      if (!ia) throw ParseError(lineno, "unknown basis name '" + an + "'");
      if (!ib) throw ParseError(lineno, "unknown basis name '" + bn + "'");
      if (space->parity(*ia) + space->parity(*ib) != *form_parity)
        throw ParseError(lineno, "omega(" + an + "," + bn +
                                     ") violates the declared form parity");
      auto key = std::minmax(*ia, *ib);
      if (!seen_omegas.insert({key.first, key.second}).second)
        throw ParseError(lineno, "duplicate omega pair (" + an + "," + bn + ")");
      Rational v = parse_rat_or_throw(trim(line.substr(eq + 1)), lineno);
      if (*ia == *ib) {
        if (space->parity(*ia) == Parity::even && !is_zero(v))
          throw ParseError(lineno, "omega(" + an + "," + an +
                                       ") must vanish for an even vector");
        form_values.at(*ia, *ia) = v;
      } else {
        form_values.at(*ia, *ib) = v;
        int s = sign_of(space->parity(*ia), space->parity(*ib));
        form_values.at(*ib, *ia) = Rational(-s) * v;
      }
    } else {
      throw ParseError(lineno, "unrecognized line '" + line + "'");
    }
  }
  if (name.empty()) throw ParseError(lineno, "missing 'algebra' line");
  if (!space) throw ParseError(lineno, "missing 'basis' line");

  ProductTable bracket(space);
  try {
    bracket = make_bracket(space, entries);
  } catch (const UsageError& e) {
    throw ParseError(lineno, e.what());
  }
  std::optional<BilinearForm> form;
  if (form_parity) form = BilinearForm(space, *form_parity, std::move(form_values));
  return ParsedAlgebra{name, LieSuperalgebra(space, std::move(bracket), std::move(form))};
}

ParsedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string serialize_algebra(const std::string& name, const LieSuperalgebra& g) {
  const auto& s = *g.space();
  std::ostringstream os;
  os << "algebra " << name << "\n";
  os << "basis";
  for (std::size_t i = 0; i < s.dim(); ++i)
    os << " " << s.name(i) << ":" << parity_name(s.parity(i));
  os << "\n";
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      RatVec c = g.bracket().product(i, j);
      if (rat_vec_is_zero(c)) continue;
      os << "bracket [" << s.name(i) << "," << s.name(j)
         << "] = " << format_terms(s, c) << "\n";
    }
  if (g.form()) {
    os << "form parity=" << parity_name(g.form()->parity()) << "\n";
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = i; j < s.dim(); ++j) {
        const Rational& v = g.form()->value(i, j);
        if (is_zero(v)) continue;
        os << "omega(" << s.name(i) << "," << s.name(j) << ") = " << to_string(v)
           << "\n";
      }
  }
  return os.str();
}

void write_algebra_file(const std::string& path, const std::string& name,
                        const LieSuperalgebra& g) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << serialize_algebra(name, g);
}

Matrix parse_matrix_rows_text(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  std::vector<RatVec> rows;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    RatVec row;
    for (const auto& tok : split_ws(line)) row.push_back(parse_rat_or_throw(tok, lineno));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(lineno, "ragged matrix row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Matrix load_operator_matrix(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Matrix rows = parse_matrix_rows_text(buf.str());
  if (rows.rows() != dim || rows.cols() != dim)
    throw UsageError("matrix in '" + path + "' is not " + std::to_string(dim) + "x" +
                     std::to_string(dim));
  return rows.transposed();  // rows are images; operator wants columns
}

RatVec parse_rational_list(const std::string& text) {
  RatVec out;
  if (trim(text).empty()) return out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    auto q = parse_rational(trim(cur));
    if (!q) throw UsageError("malformed rational '" + trim(cur) + "'");
    out.push_back(*q);
  }
  return out;
}

std::string serialize_product_table(const ProductTable& p) {
  const auto& s = *p.space();
  std::ostringstream os;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      RatVec c = p.product(i, j);
      if (rat_vec_is_zero(c)) continue;
      os << s.name(i) << "*" << s.name(j) << " = " << format_terms(s, c) << "\n";
    }
  return os.str();
}

ProductTable parse_product_table_text(const std::string& text, const SpacePtr& s) {
  ProductTable out(s);
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t star = line.find('*'), eq = line.find('=');
    if (star == std::string::npos || eq == std::string::npos || eq < star)
      throw ParseError(lineno, "expected 'bi*bj = terms'");
    std::string an = trim(line.substr(0, star));
    std::string bn = trim(line.substr(star + 1, eq - star - 1));
    auto ia = s->index_of(an), ib = s->index_of(bn);
    if (!ia || !ib) throw ParseError(lineno, "unknown basis name");
    out.set_product(*ia, *ib, parse_terms(trim(line.substr(eq + 1)), *s, lineno));
  }
  return out;
}

}  // namespace qf
