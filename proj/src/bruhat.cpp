#include "coxkit/bruhat.hpp"

#include <algorithm>

namespace coxkit {

bool bruhat_leq(const Element& u, const Element& v) {
  const CoxeterSystem& sys = u.system();
  sys.require_same(v);
  Element x = u;
  Element y = v;
  // If s is a right descent of y: x <= y iff xs <= ys (s descent of x), else x <= ys.
  while (!y.is_identity()) {
    if (x.length() > y.length()) return false;
    if (x == y) return true;
    const Generator s = y.word().back();
    if (sys.is_descent(x, s, Side::Right)) x = sys.multiply_right(x, s);
    y = sys.multiply_right(y, s);
  }
  return x.is_identity();
}

Interval interval(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v)) throw NotComparable("interval requires u <= v");
  Interval out{u, v, {}};
  for (const Element& z : v.system().bruhat_ball(v.length()))
    if (z.length() >= u.length() && bruhat_leq(u, z) && bruhat_leq(z, v)) out.elements.push_back(z);
  return out;
}

int mobius(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v)) throw NotComparable("mobius requires u <= v");
  return (v.length() - u.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace coxkit
