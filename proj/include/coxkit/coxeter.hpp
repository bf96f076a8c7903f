#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/errors.hpp"
#include "coxkit/generators.hpp"

namespace coxkit {

/// A sequence of generator indices, not necessarily reduced.
using Word = std::vector<Generator>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Generator g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    h ^= w.size();
    return static_cast<std::size_t>(h);
  }
};

enum class Side { Left, Right };

/// Symmetric matrix of relation orders m(s,t). The value 0 encodes infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  /// Validates: square, symmetric, unit diagonal, off-diagonal >= 2 or infinity.
  explicit CoxeterMatrix(const std::vector<std::vector<int>>& entries);

  std::size_t rank() const { return rank_; }
  int operator()(Generator s, Generator t) const { return entries_[s * rank_ + t]; }
  bool is_infinite(Generator s, Generator t) const { return (*this)(s, t) == kInfinity; }
  /// True when s and t commute (m(s,t) is 1 or 2).
  bool commute(Generator s, Generator t) const {
    const int m = (*this)(s, t);
    return m == 1 || m == 2;
  }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<int> entries_;
};

/// Resource caps that make enumeration over infinite groups fail loudly.
struct Limits {
  std::size_t ball_cap = 100000;         // elements in a ball or parabolic closure
  std::size_t braid_class_cap = 200000;  // reduced words in one braid class
};

class CoxeterSystem;

/// A group element, stored as its ShortLex-least reduced word.
///
/// Elements refer to their system by address; the system must outlive them.
class Element {
 public:
  const CoxeterSystem& system() const { return *system_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  /// Group product.
  Element operator*(const Element& other) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.system_ == b.system_ && a.word_ == b.word_;
  }
  /// The canonical linear extension of Bruhat order: length, then lex on canonical words.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  friend class CoxeterSystem;
  Element(const CoxeterSystem* system, Word word) : system_(system), word_(std::move(word)) {}

  const CoxeterSystem* system_;
  Word word_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return WordHash{}(e.word()); }
};

namespace detail {
struct SystemCache;
}

/// A Coxeter system (W,S): generator names plus Coxeter matrix.
///
/// All operations are const and thread-safe; results of the word problem,
/// descents, products and Bruhat comparisons are memoized internally.
class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> generator_names, CoxeterMatrix matrix, Limits limits = {});
  ~CoxeterSystem();
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  std::size_t rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& name(Generator s) const { return names_[s]; }
  std::optional<Generator> find_generator(std::string_view name) const;
  GeneratorSet all_generators() const { return GeneratorSet::all(rank()); }
  bool right_angled() const { return right_angled_; }
  const Limits& limits() const { return limits_; }

  Element identity() const { return Element(this, {}); }
  Element generator(Generator s) const;

  /// Canonical element represented by an arbitrary word (Tits' word problem).
  Element normal_form(const Word& word) const;
  Element multiply(const Element& x, const Element& y) const;
  Element multiply_right(const Element& x, Generator s) const;
  Element multiply_left(Generator s, const Element& x) const;
  Element inverse(const Element& x) const;
  GeneratorSet descents(const Element& x, Side side) const;
  bool is_descent(const Element& x, Generator s, Side side) const {
    return descents(x, side).contains(s);
  }
  /// Generators occurring in (any, equivalently every) reduced word of x.
  GeneratorSet support(const Element& x) const;

  /// Every reduced word of x, sorted lexicographically.
  std::vector<Word> reduced_words(const Element& x) const;

  /// w0(J); throws InfiniteParabolic when W_J does not close within the cap.
  Element longest_element(GeneratorSet J) const;
  bool parabolic_is_finite(GeneratorSet J) const;
  bool is_finite() const { return parabolic_is_finite(all_generators()); }
  /// All of W_J in canonical order; throws InfiniteParabolic if W_J is infinite.
  std::vector<Element> parabolic_elements(GeneratorSet J) const;
  /// Elements of W_J with length <= max_length, canonical order.
  std::vector<Element> parabolic_ball(GeneratorSet J, std::size_t max_length) const;
  /// Elements of W with length <= max_length, canonical order.
  std::vector<Element> bruhat_ball(std::size_t max_length) const;
  /// All of W (finite systems only).
  std::vector<Element> elements() const { return parabolic_elements(all_generators()); }

  /// Partition of J into maximal connected subsets of the Coxeter graph (edges m >= 3).
  std::vector<GeneratorSet> connected_components(GeneratorSet J) const;

  /// Check that an element belongs to this system.
  void require_same(const Element& x) const {
    if (&x.system() != this) throw MixedSystems();
  }

  /// Parse space-separated generator names; "" and "e" denote the identity.
  Word parse_word(std::string_view text) const;
  Element parse_element(std::string_view text) const { return normal_form(parse_word(text)); }
  std::string format(const Word& word) const;
  std::string format(const Element& x) const { return format(x.word()); }
  /// Comma-separated names, e.g. "s,t"; used in flags and graph vertices.
  std::string format_set(GeneratorSet J) const;
  GeneratorSet parse_set(std::string_view text) const;

 private:
  friend struct detail::SystemCache;
  struct NodeInfo;
  const NodeInfo& node(const Word& canonical) const;
  Word canonicalize_reduced(const Word& reduced) const;
  std::vector<Word> braid_class(const Word& reduced) const;
  std::vector<Element> closure(GeneratorSet J, std::size_t max_length, bool throw_on_cap) const;

  std::vector<std::string> names_;
  CoxeterMatrix matrix_;
  Limits limits_;
  bool right_angled_ = false;
  std::unique_ptr<detail::SystemCache> cache_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

}  // namespace coxkit
