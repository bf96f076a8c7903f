#include "coxkit/parabolic.hpp"

#include <algorithm>

namespace coxkit {

namespace {

ParabolicFactorization factor_right(const Element& w, GeneratorSet J) {
  const CoxeterSystem& sys = w.system();
  Element quotient = w;
  Word stripped;
  for (;;) {
    const GeneratorSet hits = sys.descents(quotient, Side::Right) & J;
    if (hits.empty()) break;
    const Generator s = hits.members().front();
    quotient = sys.multiply_right(quotient, s);
    stripped.push_back(s);
  }
  std::reverse(stripped.begin(), stripped.end());
  return {quotient, sys.normal_form(stripped)};
}

}  // namespace

ParabolicFactorization factor(const Element& w, GeneratorSet J, Side side) {
  if (side == Side::Right) return factor_right(w, J);
  const CoxeterSystem& sys = w.system();
  auto f = factor_right(sys.inverse(w), J);
  return {sys.inverse(f.quotient_part), sys.inverse(f.subgroup_part)};
}

Element proj(const Element& w, GeneratorSet J, Side side) { return factor(w, J, side).quotient_part; }

bool sets_commute(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J) {
  for (Generator s : I.members())
    for (Generator t : J.members())
      if (!system.matrix().commute(s, t)) return false;
  return true;
}

bool commute_exact(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J) {
  const auto comps_i = system.connected_components(I);
  const auto comps_j = system.connected_components(J);
  for (GeneratorSet a : comps_i) {
    for (GeneratorSet b : comps_j) {
      if (sets_commute(system, a, b)) continue;
      const GeneratorSet meet = a & b;
      if (meet == a || meet == b) continue;
      return false;
    }
  }
  return true;
}

std::vector<Element> quotient_enumerate(const CoxeterSystem& system, GeneratorSet J, std::size_t max_length,
                                        Side side) {
  std::vector<Element> out;
  for (const Element& w : system.bruhat_ball(max_length))
    if ((system.descents(w, side) & J).empty()) out.push_back(w);
  return out;
}

std::optional<Element> find_noncommuting_witness(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J,
                                                 std::size_t cutoff) {
  auto differs = [&](const Element& w) {
    return proj(proj(w, J), I) != proj(proj(w, I), J);
  };
  for (const Element& w : system.parabolic_ball(I | J, cutoff))
    if (differs(w)) return w;
  for (const Element& w : system.bruhat_ball(cutoff))
    if (differs(w)) return w;
  return std::nullopt;
}

}  // namespace coxkit
