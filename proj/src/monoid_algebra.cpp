#include "coxkit/monoid_algebra.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coxkit/bruhat.hpp"
#include "coxkit/linalg.hpp"
#include "coxkit/parabolic.hpp"

namespace coxkit {

Element demazure(const Element& u, const Element& v) {
  const CoxeterSystem& sys = u.system();
  sys.require_same(v);
  Element x = u;
  for (Generator s : v.word())
    if (!sys.is_descent(x, s, Side::Right)) x = sys.multiply_right(x, s);
  return x;
}

Element apply_generator_projection(Generator s, const Element& w) {
  const CoxeterSystem& sys = w.system();
  return sys.is_descent(w, s, Side::Right) ? sys.multiply_right(w, s) : w;
}

Element apply_P_word(const Word& word, const Element& w) {
  Element x = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply_generator_projection(*it, x);
  return x;
}

Element apply_P(const Element& u, const Element& w) {
  u.system().require_same(w);
  return apply_P_word(u.word(), w);
}

IntAlgElement bar_expand(const Element& v) {
  IntAlgElement out;
  for (const Element& u : interval(v.system().identity(), v).elements)
    out.add(u, u.length() % 2 == 0 ? 1 : -1);
  return out;
}

IntAlgElement bar(const IntAlgElement& a) {
  IntAlgElement out;
  for (const auto& [u, c] : a.terms()) out += c * bar_expand(u);
  return out;
}

std::optional<GeneratorSet> idempotent_type(const Element& u) {
  if (demazure(u, u) != u) return std::nullopt;
  const CoxeterSystem& sys = u.system();
  const GeneratorSet J = sys.support(u);
  if (!sys.parabolic_is_finite(J) || sys.longest_element(J) != u) return std::nullopt;
  return J;
}

IntAlgElement proj_as_monoid(const CoxeterSystem& system, GeneratorSet J) {
  return basis_element<std::int64_t>(system.longest_element(J));
}

bool is_lower_ideal(const std::vector<Element>& basis) {
  if (basis.empty()) return true;
  const CoxeterSystem& sys = basis.front().system();
  std::unordered_set<Element, ElementHash> members(basis.begin(), basis.end());
  for (const Element& b : basis) {
    sys.require_same(b);
    if (b.is_identity()) continue;
    // Every coatom of b is its canonical word with one letter deleted.
    for (std::size_t i = 0; i < b.length(); ++i) {
      Word w = b.word();
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      const Element c = sys.normal_form(w);
      if (c.length() + 1 == b.length() && !members.contains(c)) return false;
    }
  }
  return true;
}

template <class R>
IdealMatrix<R> matrix_realization(const MonoidAlgElement<R>& a, std::vector<Element> basis) {
  if (!is_lower_ideal(basis)) throw InvalidArgument("basis is not a Bruhat lower ideal");
  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  IdealMatrix<R> m{std::move(basis), {}};
  const std::size_t n = m.basis.size();
  m.entries.assign(n * n, R(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [u, c] : a.terms()) {
      const std::size_t row = index.at(apply_P(u, m.basis[j]));
      m.at(row, j) += c;
    }
  }
  return m;
}

template IdealMatrix<std::int64_t> matrix_realization(const IntAlgElement&, std::vector<Element>);
template IdealMatrix<LaurentPoly> matrix_realization(const LaurentAlgElement&, std::vector<Element>);

std::string matrix_csv(const IdealMatrix<std::int64_t>& m) {
  std::ostringstream out;
  for (std::size_t j = 0; j < m.dimension(); ++j) {
    if (j) out << ',';
    out << m.basis[j].system().format(m.basis[j]);
  }
  out << '\n';
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) out << ',';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

bool independence_check(const std::vector<Element>& ws, const std::vector<Element>& basis) {
  std::unordered_set<Element, ElementHash> members(basis.begin(), basis.end());
  IntMatrix rows;
  for (const Element& w : ws) {
    if (!members.contains(w)) throw InvalidArgument("independence_check: element outside the basis ideal");
    const auto m = matrix_realization(basis_element<std::int64_t>(w), basis);
    rows.emplace_back(m.entries.begin(), m.entries.end());
  }
  return rational_rank(std::move(rows)) == ws.size();
}

SubmoduleDecomposition submodule_VJv(GeneratorSet J, const Element& v) {
  const CoxeterSystem& sys = v.system();
  const Element top = proj(v, J, Side::Left);
  SubmoduleDecomposition out;
  for (const Element& z : interval(sys.identity(), top).elements)
    if ((sys.descents(z, Side::Left) & J).empty()) out.basis_in.push_back(z);
  for (const Element& u : interval(sys.identity(), v).elements)
    if (!(sys.descents(u, Side::Left) & J).empty()) out.basis_out.emplace_back(u, proj(u, J, Side::Left));
  return out;
}

IntAlgElement parse_alg_element(const CoxeterSystem& system, const std::string& text) {
  if (text.find("P[") == std::string::npos) return basis_element<std::int64_t>(system.parse_element(text));
  IntAlgElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    std::int64_t coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      coeff = std::stoll(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    if (text.compare(i, 2, "P[") != 0) throw ParseError("expected 'P[' in '" + text + "'");
    i += 2;
    const std::size_t close = text.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated 'P[' in '" + text + "'");
    out.add(system.parse_element(text.substr(i, close - i)), sign * coeff);
    i = close + 1;
  }
  return out;
}

}  // namespace coxkit
