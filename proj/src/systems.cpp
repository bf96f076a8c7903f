#include "coxkit/systems.hpp"

namespace coxkit {

SystemPtr make_system(std::vector<std::string> names, const std::vector<std::vector<int>>& matrix,
                      Limits limits) {
  return std::make_shared<const CoxeterSystem>(std::move(names), CoxeterMatrix(matrix), limits);
}

namespace {

std::vector<std::vector<int>> commuting_matrix(std::size_t rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SystemPtr type_a(std::size_t n) {
  auto m = commuting_matrix(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("s" + std::to_string(i + 1));
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return make_system(std::move(names), m);
}

SystemPtr type_b(std::size_t n) {
  auto m = commuting_matrix(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("s" + std::to_string(i));
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = (i == 0 ? 4 : 3);
  }
  return make_system(std::move(names), m);
}

SystemPtr dihedral(int m) { return make_system({"s", "t"}, {{1, m}, {m, 1}}); }

SystemPtr right_angled_path3() { return make_system({"a", "b", "c"}, {{1, 0, 2}, {0, 1, 0}, {2, 0, 1}}); }

SystemPtr right_angled_commuting_pair() {
  return make_system({"a", "b", "c"}, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
}

SystemPtr free_coxeter(std::size_t rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    m[i][i] = 1;
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return make_system(std::move(names), m);
}

}  // namespace coxkit
