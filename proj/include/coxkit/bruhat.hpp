#pragma once

#include <vector>

#include "coxkit/coxeter.hpp"

namespace coxkit {

/// Bruhat order u <= v.
bool bruhat_leq(const Element& u, const Element& v);

/// The closed interval [lo, hi].
struct Interval {
  Element lo;
  Element hi;
  std::vector<Element> elements;  // canonical order
};

/// Throws NotComparable unless u <= v.
Interval interval(const Element& u, const Element& v);

/// Moebius function of Bruhat order, (-1)^(l(v) - l(u)). Throws NotComparable unless u <= v.
int mobius(const Element& u, const Element& v);

}  // namespace coxkit
