#pragma once

#include "coxkit/coxeter.hpp"
#include "coxkit/free_module.hpp"

namespace coxkit {

/// Element of the Hecke algebra over Z[q, q^-1], written in the basis {T_w}.
using HeckeElement = FreeModule<LaurentPoly, TBasisTag>;

inline HeckeElement T(const Element& w, LaurentPoly coefficient = 1) { return HeckeElement(w, std::move(coefficient)); }

/// T_w T_s = T_{ws} if s is not a right descent of w, q T_{ws} + (q-1) T_w otherwise;
/// extended bilinearly by folding the letters of each T_v on the right.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/// a T_s
HeckeElement hecke_mul_generator(const HeckeElement& a, Generator s);

/// T_w^{-1} as the product of T_s^{-1} = (q^-1 - 1) T_e + q^-1 T_s in reverse order.
HeckeElement hecke_inv_T(const Element& w);

/// q -> q^-1 on coefficients, T_w -> T_{w^-1}^{-1}.
HeckeElement iota(const HeckeElement& a);

/// Parse "(q - 1)*T[s t] + T[e]" or a bare word meaning T_w.
HeckeElement parse_hecke(const CoxeterSystem& system, const std::string& text);

}  // namespace coxkit
