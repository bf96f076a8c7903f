#pragma once

#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"

namespace coxkit {

SystemPtr make_system(std::vector<std::string> names, const std::vector<std::vector<int>>& matrix,
                      Limits limits = {});

/// Symmetric group S_{n+1}: generators s1..sn, m(s_i,s_{i+1}) = 3.
SystemPtr type_a(std::size_t n);
/// Hyperoctahedral group: generators s0..s{n-1}, m(s0,s1) = 4, then a type-A chain.
SystemPtr type_b(std::size_t n);
/// Dihedral system on {s,t} with m(s,t) = m (0 = infinity).
SystemPtr dihedral(int m);
/// Right-angled path a - b - c: m(a,b) = m(b,c) = infinity, m(a,c) = 2.
SystemPtr right_angled_path3();
/// Right-angled system with m(a,b) = 2 and m(a,c) = m(b,c) = infinity.
SystemPtr right_angled_commuting_pair();
/// Free Coxeter group of the given rank (all off-diagonal entries infinity).
SystemPtr free_coxeter(std::size_t rank);

}  // namespace coxkit
