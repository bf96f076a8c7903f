#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/coxeter.hpp"
#include "coxkit/free_module.hpp"

namespace coxkit {

/// Product in the Coxeter monoid W^M: fold the letters of v into u, x*s = xs if
/// l(xs) > l(x), else x.
Element demazure(const Element& u, const Element& v);

/// P^{s}(w): w s if s is a right descent of w, else w.
Element apply_generator_projection(Generator s, const Element& w);

/// P^u(w) = P^{s1} ... P^{sk}(w) over the canonical reduced word of u.
Element apply_P(const Element& u, const Element& w);

/// Same composition over an explicit word (used to check independence of the word).
Element apply_P_word(const Word& word, const Element& w);

/// P^u in the monoid algebra.
template <class R>
MonoidAlgElement<R> basis_element(const Element& u, R coefficient = R(1)) {
  return MonoidAlgElement<R>(u, std::move(coefficient));
}

template <class R>
MonoidAlgElement<R> identity_element(const CoxeterSystem& system) {
  return MonoidAlgElement<R>(system.identity(), R(1));
}

/// Bilinear extension of P^u P^v = P^{u * v} (Demazure product).
template <class R>
MonoidAlgElement<R> alg_mul(const MonoidAlgElement<R>& a, const MonoidAlgElement<R>& b) {
  MonoidAlgElement<R> out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add(demazure(u, v), cu * cv);
  return out;
}

template <class R>
MonoidAlgElement<R> operator*(const MonoidAlgElement<R>& a, const MonoidAlgElement<R>& b) {
  return alg_mul(a, b);
}

/// a^n for n >= 0.
template <class R>
MonoidAlgElement<R> alg_pow(const MonoidAlgElement<R>& a, unsigned n, const CoxeterSystem& system) {
  MonoidAlgElement<R> out = identity_element<R>(system);
  for (unsigned k = 0; k < n; ++k) out = alg_mul(out, a);
  return out;
}

/// Action of an algebra element on a vector of R ⊗ span(W).
template <class R>
ModuleVector<R> act(const MonoidAlgElement<R>& a, const ModuleVector<R>& v) {
  ModuleVector<R> out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [w, cw] : v.terms()) out.add(apply_P(u, w), cu * cw);
  return out;
}

/// \bar P^v = sum_{u <= v} (-1)^{l(u)} P^u.
IntAlgElement bar_expand(const Element& v);

/// The linear map P^u -> \bar P^u.
IntAlgElement bar(const IntAlgElement& a);

/// J when P^u is idempotent (u = w0(J)), none otherwise.
std::optional<GeneratorSet> idempotent_type(const Element& u);

/// P^{w0(J)}, which acts as the projection P^J. Throws InfiniteParabolic.
IntAlgElement proj_as_monoid(const CoxeterSystem& system, GeneratorSet J);

/// Dense matrix of an operator on a Bruhat lower ideal; column j is the image of basis[j].
template <class R>
struct IdealMatrix {
  std::vector<Element> basis;
  std::vector<R> entries;  // row-major

  std::size_t dimension() const { return basis.size(); }
  const R& at(std::size_t row, std::size_t col) const { return entries[row * basis.size() + col]; }
  R& at(std::size_t row, std::size_t col) { return entries[row * basis.size() + col]; }
};

/// Whether the list is downward closed in Bruhat order (checked via cover relations).
bool is_lower_ideal(const std::vector<Element>& basis);

template <class R>
IdealMatrix<R> matrix_realization(const MonoidAlgElement<R>& a, std::vector<Element> basis);

extern template IdealMatrix<std::int64_t> matrix_realization(const IntAlgElement&, std::vector<Element>);
extern template IdealMatrix<LaurentPoly> matrix_realization(const LaurentAlgElement&, std::vector<Element>);

/// Image index <= source index for every nonzero entry (the images of an operator
/// built from projections never leave the lower set of a basis element).
template <class R>
bool is_triangular(const IdealMatrix<R>& m) {
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!is_zero(m.at(i, j))) return false;
  return true;
}

/// Header line of basis words, then one CSV line per row.
std::string matrix_csv(const IdealMatrix<std::int64_t>& m);

/// Whether the matrices of {P^w : w in ws} on the ideal are linearly independent over Q.
bool independence_check(const std::vector<Element>& ws, const std::vector<Element>& basis);

/// V^{J,v} = span{z in ^J W : z <= Q^J v} and its complement span{u - Q^J u}.
struct SubmoduleDecomposition {
  std::vector<Element> basis_in;
  std::vector<std::pair<Element, Element>> basis_out;  // (u, Q^J u), meaning the vector u - Q^J u
};

SubmoduleDecomposition submodule_VJv(GeneratorSet J, const Element& v);

/// Parse "2*P[s t] - P[e]" (or a bare word meaning P^w) into an integer algebra element.
IntAlgElement parse_alg_element(const CoxeterSystem& system, const std::string& text);

}  // namespace coxkit
