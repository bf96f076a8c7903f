#pragma once

#include <functional>
#include <map>
#include <string>

#include "coxkit/coxeter.hpp"
#include "coxkit/laurent.hpp"

namespace coxkit {

/// A finitely supported map Element -> R. The tag fixes which basis the keys
/// index ({P^u}, {T_w}, or the group elements themselves), so elements of
/// different modules cannot be mixed by accident.
///
/// Invariant: no stored zero coefficients; all keys belong to one system.
template <class R, class Tag>
class FreeModule {
 public:
  using Ring = R;
  using Map = std::map<Element, R>;

  FreeModule() = default;
  /// coefficient * basis(key)
  explicit FreeModule(const Element& key, R coefficient = R(1)) { add(key, std::move(coefficient)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(const Element& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add(const Element& key, const R& coefficient) {
    if (::coxkit::is_zero(coefficient)) return;
    if (!terms_.empty() && &terms_.begin()->first.system() != &key.system()) throw MixedSystems();
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (::coxkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  FreeModule& operator+=(const FreeModule& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  FreeModule& operator-=(const FreeModule& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  FreeModule operator-() const {
    FreeModule out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }
  friend FreeModule operator+(FreeModule a, const FreeModule& b) { return a += b; }
  friend FreeModule operator-(FreeModule a, const FreeModule& b) { return a -= b; }
  friend FreeModule operator*(const R& scalar, const FreeModule& a) {
    FreeModule out;
    for (const auto& [k, c] : a.terms_) out.add(k, scalar * c);
    return out;
  }
  friend bool operator==(const FreeModule&, const FreeModule&) = default;

  /// Apply f to every coefficient (e.g. bar, specialization); zeros are dropped.
  template <class S, class F>
  FreeModule<S, Tag> map_coefficients(F&& f) const {
    FreeModule<S, Tag> out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

 private:
  Map terms_;
};

struct PBasisTag {};
struct GroupBasisTag {};
struct TBasisTag {};

/// Element of R[W^M] written in the basis {P^u}.
template <class R>
using MonoidAlgElement = FreeModule<R, PBasisTag>;

/// Vector of the free module R ⊗ span(W), basis = group elements.
template <class R>
using ModuleVector = FreeModule<R, GroupBasisTag>;

using IntAlgElement = MonoidAlgElement<std::int64_t>;
using LaurentAlgElement = MonoidAlgElement<LaurentPoly>;
using RationalAlgElement = MonoidAlgElement<Rational>;

inline std::string coefficient_text(std::int64_t c) { return std::to_string(c); }
inline std::string coefficient_text(const LaurentPoly& c) { return c.to_string(); }
inline std::string coefficient_text(const Rational& c) { return c.str(); }

/// Terms as "(c)*X[word]" joined with " + "; "0" for the zero element.
template <class R, class Tag>
std::string format_terms(const FreeModule<R, Tag>& a, const std::string& symbol) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coefficient_text(c) + ")*" + symbol + "[" + k.system().format(k) + "]";
  }
  return out;
}

}  // namespace coxkit
