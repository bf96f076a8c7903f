#pragma once

#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"
#include "coxkit/free_module.hpp"
#include "coxkit/hecke.hpp"

namespace coxkit {

/// Which of the two generator images defines the representation:
/// Q:        s -> q P^e - (q+1) P^s
/// MinusOne: s -> -P^e + (q+1) P^s
enum class SigmaParam { Q, MinusOne };

SigmaParam parse_sigma_param(const std::string& text);  // "q" or "-1"
std::string to_string(SigmaParam x);

struct Syllable {
  Generator generator = 0;
  int exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of the right-angled Artin group, as a sequence of syllables s^h.
struct ArtinWord {
  std::vector<Syllable> syllables;

  bool empty() const { return syllables.empty(); }
  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

/// "a^2 b^-1 c" (exponent 1 when omitted); "" or "e" is the empty word.
ArtinWord parse_artin(const CoxeterSystem& system, const std::string& text);
std::string format_artin(const CoxeterSystem& system, const ArtinWord& w);

/// Canonical form: merge syllables of one generator separated only by commuting
/// syllables, drop zero exponents, then take the lexicographically least ordering
/// (generator index, then exponent) reachable by swapping adjacent commuting syllables.
/// Throws NotRightAngled.
ArtinWord raag_normal_form(const CoxeterSystem& system, const ArtinWord& w);

/// f^x(s) in the monoid algebra with Laurent coefficients.
LaurentAlgElement sigma_generator(const CoxeterSystem& system, SigmaParam x, Generator s);

/// Image of a Hecke element under the representation, expanding each T_w over its
/// canonical reduced word. Throws NotRightAngled.
LaurentAlgElement rep_sigma(SigmaParam x, const HeckeElement& a);

/// f^x(s)^n for any integer n:
///   x = q:  q^n P^e - (q^n - (-1)^n) P^s
///   x = -1: (-1)^n P^e + (q^n - (-1)^n) P^s
LaurentAlgElement power_closed_form(const CoxeterSystem& system, SigmaParam x, Generator s, int n);

struct ArtinImage {
  LaurentAlgElement image;
  Element leading;  // s1...sk from the syllable generators
  LaurentPoly leading_coefficient;
};

/// Image of a normal-form word: the product of the syllable power forms. Throws NotRightAngled.
ArtinImage artin_image(const CoxeterSystem& system, const ArtinWord& w, SigmaParam x);

/// ±prod_i (q^{h_i} - (-1)^{h_i}), sign (-1)^k for x = q.
LaurentPoly leading_coefficient_formula(const ArtinWord& w, SigmaParam x);

/// Evaluate every coefficient at q = t. Throws InvalidArgument for t = 0.
RationalAlgElement specialize(const LaurentAlgElement& a, const Rational& t);

struct ScanFailure {
  ArtinWord word;
  std::string reason;
};

struct ScanReport {
  std::size_t max_syllables = 0;
  int max_abs_exp = 0;
  Rational t;
  SigmaParam x = SigmaParam::Q;
  std::size_t words = 0;       // normal-form words enumerated, identity included
  std::size_t nontrivial = 0;  // words checked
  std::size_t passed = 0;
  std::vector<ScanFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Normal-form words with at most max_syllables syllables and 1 <= |h| <= max_abs_exp,
/// in enumeration order (by syllable count, then lexicographic).
std::vector<ArtinWord> enumerate_normal_forms(const CoxeterSystem& system, std::size_t max_syllables,
                                              int max_abs_exp);

/// For every nontrivial enumerated word: the symbolic image and its specialization at
/// q = t differ from P^e, and the leading coefficient matches the closed formula and
/// does not vanish at t. Throws InvalidArgument for t in {-1, 0, 1}, NotRightAngled.
ScanReport injectivity_scan(const CoxeterSystem& system, std::size_t max_syllables, int max_abs_exp,
                            const Rational& t, SigmaParam x, unsigned threads = 1);

std::string scan_report_json(const CoxeterSystem& system, const ScanReport& report);
std::string scan_report_text(const CoxeterSystem& system, const ScanReport& report);

/// Parse "3", "-2", "1/2".
Rational parse_rational(const std::string& text);

}  // namespace coxkit
