#pragma once

#include <optional>
#include <vector>

#include "coxkit/coxeter.hpp"

namespace coxkit {

/// w = quotient_part * subgroup_part (right side) or subgroup_part * quotient_part (left side),
/// lengths adding up, with the quotient part minimal in its coset.
struct ParabolicFactorization {
  Element quotient_part;
  Element subgroup_part;
};

ParabolicFactorization factor(const Element& w, GeneratorSet J, Side side);

/// P^J(w) for the right side, Q^J(w) for the left side.
Element proj(const Element& w, GeneratorSet J, Side side = Side::Right);

/// Whether the projections P^I and P^J commute as operators on all of W.
///
/// Decided combinatorially: split I and J into maximal connected components; every
/// pair of components (A, B) must either have all cross entries m in {1,2} or be
/// nested (A ∩ B is A or B).
bool commute_exact(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J);

/// True iff m(s,t) is 1 or 2 for all s in I, t in J.
bool sets_commute(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J);

/// Elements of W^J (right) or ^J W (left) with length <= max_length, canonical order.
std::vector<Element> quotient_enumerate(const CoxeterSystem& system, GeneratorSet J, std::size_t max_length,
                                        Side side = Side::Right);

/// Searches for w with P^I P^J w != P^J P^I w: first in W_{I∪J} by length, then in
/// the ball of radius `cutoff`.
std::optional<Element> find_noncommuting_witness(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J,
                                                 std::size_t cutoff);

}  // namespace coxkit
