#include "coxkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace coxkit {

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(const std::vector<std::vector<int>>& entries) : rank_(entries.size()) {
  if (rank_ == 0) throw ParseError("Coxeter matrix must have at least one row");
  if (rank_ > kMaxRank) throw ParseError("rank exceeds the supported maximum of 32");
  entries_.resize(rank_ * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (entries[i].size() != rank_) throw ParseError("Coxeter matrix is not square");
    for (std::size_t j = 0; j < rank_; ++j) entries_[i * rank_ + j] = entries[i][j];
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if (entries_[i * rank_ + i] != 1)
      throw ParseError("diagonal entry m(" + std::to_string(i) + "," + std::to_string(i) + ") must be 1");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (i == j) continue;
      const int m = entries_[i * rank_ + j];
      if (m != entries_[j * rank_ + i]) throw ParseError("Coxeter matrix is not symmetric");
      if (m != kInfinity && m < 2)
        throw ParseError("off-diagonal entries must be >= 2 (or 0 for infinity)");
    }
  }
}

std::vector<std::vector<int>> CoxeterMatrix::rows() const {
  std::vector<std::vector<int>> out(rank_, std::vector<int>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) out[i][j] = entries_[i * rank_ + j];
  return out;
}

// ---------------------------------------------------------------------------
// Caches

struct CoxeterSystem::NodeInfo {
  GeneratorSet right_descents;
  GeneratorSet left_descents;
  GeneratorSet support;
  // For each right descent s, a reduced word of the element ending in s.
  std::vector<Word> descent_witness;
};

namespace detail {

struct SystemCache {
  std::shared_mutex node_mutex;
  std::unordered_map<Word, std::unique_ptr<CoxeterSystem::NodeInfo>, WordHash> nodes;

  std::shared_mutex canon_mutex;
  std::unordered_map<Word, Word, WordHash> canonical;

  std::shared_mutex product_mutex;
  std::vector<std::unordered_map<Word, Word, WordHash>> right_products;

  std::shared_mutex parabolic_mutex;
  std::map<std::uint32_t, std::optional<Word>> longest;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(std::vector<std::string> generator_names, CoxeterMatrix matrix, Limits limits)
    : names_(std::move(generator_names)),
      matrix_(std::move(matrix)),
      limits_(limits),
      cache_(std::make_unique<detail::SystemCache>()) {
  if (names_.size() != matrix_.rank())
    throw ParseError("size mismatch: " + std::to_string(names_.size()) + " generators but a " +
                     std::to_string(matrix_.rank()) + "x" + std::to_string(matrix_.rank()) + " matrix");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || n == "e") throw ParseError("invalid generator name '" + n + "'");
    for (char c : n)
      if (c == ' ' || c == ',' || c == '^' || c == '{' || c == '}' || c == '[' || c == ']' || c == '"')
        throw ParseError("generator name '" + n + "' contains a reserved character");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw ParseError("duplicate generator name '" + n + "'");
  }
  right_angled_ = true;
  for (Generator s = 0; s < rank(); ++s)
    for (Generator t = 0; t < rank(); ++t)
      if (s != t && matrix_(s, t) != 2 && matrix_(s, t) != CoxeterMatrix::kInfinity) right_angled_ = false;
  cache_->right_products.resize(rank());
}

CoxeterSystem::~CoxeterSystem() = default;

std::optional<Generator> CoxeterSystem::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Generator>(i);
  return std::nullopt;
}

Element CoxeterSystem::generator(Generator s) const {
  if (s >= rank()) throw InvalidArgument("generator index out of range");
  return Element(this, Word{s});
}

std::vector<Word> CoxeterSystem::braid_class(const Word& reduced) const {
  std::unordered_set<Word, WordHash> seen{reduced};
  std::vector<Word> frontier{reduced};
  const std::size_t n = reduced.size();
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const Generator a = w[i];
        const Generator b = w[i + 1];
        if (a == b) continue;
        const int m = matrix_(a, b);
        if (m == CoxeterMatrix::kInfinity || i + static_cast<std::size_t>(m) > n) continue;
        bool alternating = true;
        for (int k = 2; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 == 0 ? a : b);
        if (!alternating) continue;
        Word moved = w;
        for (int k = 0; k < m; ++k) moved[i + k] = (k % 2 == 0 ? b : a);
        if (seen.insert(moved).second) {
          if (seen.size() > limits_.braid_class_cap)
            throw ResourceLimit("braid class exceeds cap of " + std::to_string(limits_.braid_class_cap) +
                                " words");
          next.push_back(std::move(moved));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

const CoxeterSystem::NodeInfo& CoxeterSystem::node(const Word& canonical) const {
  auto& c = *cache_;
  {
    std::shared_lock lock(c.node_mutex);
    if (auto it = c.nodes.find(canonical); it != c.nodes.end()) return *it->second;
  }
  auto info = std::make_unique<NodeInfo>();
  info->descent_witness.resize(rank());
  for (Generator g : canonical) info->support.insert(g);
  for (const Word& w : braid_class(canonical)) {
    if (w.empty()) break;
    info->left_descents.insert(w.front());
    if (!info->right_descents.contains(w.back())) {
      info->right_descents.insert(w.back());
      info->descent_witness[w.back()] = w;
    }
  }
  std::unique_lock lock(c.node_mutex);
  auto [it, inserted] = c.nodes.try_emplace(canonical, std::move(info));
  return *it->second;
}

Word CoxeterSystem::canonicalize_reduced(const Word& reduced) const {
  auto& c = *cache_;
  {
    std::shared_lock lock(c.canon_mutex);
    if (auto it = c.canonical.find(reduced); it != c.canonical.end()) return it->second;
  }
  const auto cls = braid_class(reduced);
  Word result = cls.front();
  std::unique_lock lock(c.canon_mutex);
  for (const Word& w : cls) c.canonical.try_emplace(w, result);
  return result;
}

Element CoxeterSystem::multiply_right(const Element& x, Generator s) const {
  require_same(x);
  if (s >= rank()) throw InvalidArgument("generator index out of range");
  auto& c = *cache_;
  {
    std::shared_lock lock(c.product_mutex);
    auto& table = c.right_products[s];
    if (auto it = table.find(x.word()); it != table.end()) return Element(this, it->second);
  }
  const NodeInfo& info = node(x.word());
  Word result;
  if (info.right_descents.contains(s)) {
    Word prefix = info.descent_witness[s];
    prefix.pop_back();
    result = canonicalize_reduced(prefix);
  } else {
    Word longer = x.word();
    longer.push_back(s);
    result = canonicalize_reduced(longer);
  }
  std::unique_lock lock(c.product_mutex);
  c.right_products[s].try_emplace(x.word(), result);
  return Element(this, std::move(result));
}

Element CoxeterSystem::multiply_left(Generator s, const Element& x) const {
  return inverse(multiply_right(inverse(x), s));
}

Element CoxeterSystem::normal_form(const Word& word) const {
  Element x = identity();
  for (Generator s : word) {
    if (s >= rank()) throw InvalidArgument("word letter out of range");
    x = multiply_right(x, s);
  }
  return x;
}

Element CoxeterSystem::multiply(const Element& x, const Element& y) const {
  require_same(x);
  require_same(y);
  Element z = x;
  for (Generator s : y.word()) z = multiply_right(z, s);
  return z;
}

Element Element::operator*(const Element& other) const { return system_->multiply(*this, other); }

Element CoxeterSystem::inverse(const Element& x) const {
  require_same(x);
  Word reversed(x.word().rbegin(), x.word().rend());
  return Element(this, canonicalize_reduced(reversed));
}

GeneratorSet CoxeterSystem::descents(const Element& x, Side side) const {
  require_same(x);
  const NodeInfo& info = node(x.word());
  return side == Side::Right ? info.right_descents : info.left_descents;
}

GeneratorSet CoxeterSystem::support(const Element& x) const {
  require_same(x);
  GeneratorSet out;
  for (Generator g : x.word()) out.insert(g);
  return out;
}

std::vector<Word> CoxeterSystem::reduced_words(const Element& x) const {
  require_same(x);
  return braid_class(x.word());
}

std::vector<Element> CoxeterSystem::closure(GeneratorSet J, std::size_t max_length, bool throw_on_cap) const {
  std::vector<Element> all{identity()};
  std::vector<Element> level{identity()};
  const auto gens = J.members();
  for (std::size_t len = 0; len < max_length && !level.empty(); ++len) {
    std::unordered_set<Element, ElementHash> next_set;
    for (const Element& x : level) {
      const GeneratorSet desc = descents(x, Side::Right);
      for (Generator s : gens)
        if (!desc.contains(s)) next_set.insert(multiply_right(x, s));
    }
    std::vector<Element> next(next_set.begin(), next_set.end());
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    if (all.size() > limits_.ball_cap) {
      if (throw_on_cap)
        throw ResourceLimit("enumeration exceeds ball cap of " + std::to_string(limits_.ball_cap) + " elements");
      return {};
    }
    level = std::move(next);
  }
  return all;
}

std::vector<Element> CoxeterSystem::bruhat_ball(std::size_t max_length) const {
  return closure(all_generators(), max_length, true);
}

std::vector<Element> CoxeterSystem::parabolic_ball(GeneratorSet J, std::size_t max_length) const {
  return closure(J, max_length, true);
}

namespace {

/// Whether a connected Coxeter graph is one of A_n, B_n, D_n, E_6..8, F_4, H_3, H_4, I_2(m).
bool finite_type(const CoxeterMatrix& m, GeneratorSet component) {
  const std::vector<Generator> v = component.members();
  const std::size_t n = v.size();
  if (n <= 1) return true;
  if (n == 2) return !m.is_infinite(v[0], v[1]);
  std::map<Generator, std::vector<Generator>> adj;
  std::vector<int> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int mij = m(v[i], v[j]);
      if (mij == 2) continue;
      if (mij == CoxeterMatrix::kInfinity || mij > 5) return false;
      adj[v[i]].push_back(v[j]);
      adj[v[j]].push_back(v[i]);
      labels.push_back(mij);
    }
  if (labels.size() != n - 1) return false;  // connected, so a tree iff n - 1 edges
  const auto big = std::count_if(labels.begin(), labels.end(), [](int x) { return x > 3; });
  std::vector<Generator> branch, leaves;
  for (Generator s : v) {
    if (adj[s].size() > 3) return false;
    if (adj[s].size() == 3) branch.push_back(s);
    if (adj[s].size() == 1) leaves.push_back(s);
  }
  if (big > 1 || branch.size() > 1) return false;
  if (big == 1) {
    if (!branch.empty()) return false;
    // Path; find the position of the heavy edge.
    std::vector<Generator> path{leaves[0]};
    while (path.size() < n) {
      for (Generator t : adj[path.back()])
        if (path.size() < 2 || t != path[path.size() - 2]) {
          path.push_back(t);
          break;
        }
    }
    std::size_t pos = 0;
    int label = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (m(path[i], path[i + 1]) > 3) {
        pos = i;
        label = m(path[i], path[i + 1]);
      }
    const bool at_end = pos == 0 || pos == n - 2;
    if (label == 4) return at_end || (n == 4 && pos == 1);
    return at_end && n <= 4;  // H_3, H_4
  }
  if (branch.empty()) return true;  // A_n
  // One branch point with three arms of lengths p <= q <= r.
  std::vector<std::size_t> arms;
  for (Generator first : adj[branch[0]]) {
    std::size_t len = 1;
    Generator prev = branch[0], cur = first;
    while (adj[cur].size() == 2) {
      const Generator next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return false;
  if (arms[1] == 1) return true;  // D_n
  return arms[1] == 2 && arms[2] <= 4;  // E_6, E_7, E_8
}

}  // namespace

bool CoxeterSystem::parabolic_is_finite(GeneratorSet J) const {
  auto& c = *cache_;
  {
    std::shared_lock lock(c.parabolic_mutex);
    if (auto it = c.longest.find(J.bits()); it != c.longest.end()) return it->second.has_value();
  }
  std::optional<Word> longest;
  bool finite = true;
  for (GeneratorSet component : connected_components(J))
    if (!finite_type(matrix_, component)) finite = false;
  if (finite) {
    // In a finite group every element lies below w0, so climbing by ascents ends there.
    Element x = identity();
    for (bool grew = true; grew;) {
      grew = false;
      for (Generator s : J.members())
        if (!is_descent(x, s, Side::Right)) {
          x = multiply_right(x, s);
          grew = true;
          break;
        }
    }
    longest = x.word();
  }
  std::unique_lock lock(c.parabolic_mutex);
  c.longest.try_emplace(J.bits(), longest);
  return longest.has_value();
}

Element CoxeterSystem::longest_element(GeneratorSet J) const {
  if (!parabolic_is_finite(J))
    throw InfiniteParabolic("parabolic subgroup generated by {" + format_set(J) + "} is infinite");
  std::shared_lock lock(cache_->parabolic_mutex);
  return Element(this, *cache_->longest.at(J.bits()));
}

std::vector<Element> CoxeterSystem::parabolic_elements(GeneratorSet J) const {
  const Element top = longest_element(J);
  return closure(J, top.length(), true);
}

std::vector<GeneratorSet> CoxeterSystem::connected_components(GeneratorSet J) const {
  std::vector<GeneratorSet> out;
  GeneratorSet remaining = J;
  while (!remaining.empty()) {
    const Generator start = remaining.members().front();
    GeneratorSet component = GeneratorSet::single(start);
    std::vector<Generator> stack{start};
    while (!stack.empty()) {
      const Generator s = stack.back();
      stack.pop_back();
      for (Generator t : remaining.members()) {
        if (component.contains(t) || matrix_.commute(s, t)) continue;
        component.insert(t);
        stack.push_back(t);
      }
    }
    out.push_back(component);
    remaining = remaining - component;
  }
  return out;
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    auto g = find_generator(token);
    if (!g) throw ParseError("unknown generator '" + token + "'");
    out.push_back(*g);
  }
  return out;
}

std::string CoxeterSystem::format(const Word& word) const {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += names_[word[i]];
  }
  return out;
}

std::string CoxeterSystem::format_set(GeneratorSet J) const {
  std::string out;
  for (Generator s : J.members()) {
    if (!out.empty()) out += ',';
    out += names_[s];
  }
  return out;
}

GeneratorSet CoxeterSystem::parse_set(std::string_view text) const {
  GeneratorSet out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto g = find_generator(token);
    if (!g) throw ParseError("unknown generator '" + token + "'");
    out.insert(*g);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

}  // namespace coxkit
