#include "coxkit/artin.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coxkit/io.hpp"
#include "coxkit/monoid_algebra.hpp"

namespace coxkit {

SigmaParam parse_sigma_param(const std::string& text) {
  if (text == "q") return SigmaParam::Q;
  if (text == "-1") return SigmaParam::MinusOne;
  throw InvalidArgument("x must be 'q' or '-1', got '" + text + "'");
}

std::string to_string(SigmaParam x) { return x == SigmaParam::Q ? "q" : "-1"; }

namespace {

void require_right_angled(const CoxeterSystem& system) {
  if (!system.right_angled()) throw NotRightAngled("the Coxeter system is not right-angled");
}

bool commuting(const CoxeterSystem& system, Generator a, Generator b) {
  return a != b && system.matrix()(a, b) == 2;
}

}  // namespace

ArtinWord parse_artin(const CoxeterSystem& system, const std::string& text) {
  ArtinWord w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    const std::size_t caret = token.find('^');
    const std::string name = token.substr(0, caret);
    const auto s = system.find_generator(name);
    if (!s) throw ParseError("unknown generator '" + name + "'");
    int exponent = 1;
    if (caret != std::string::npos) {
      const std::string exp = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        exponent = std::stoi(exp, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != exp.size()) throw ParseError("bad exponent in '" + token + "'");
    }
    w.syllables.push_back({*s, exponent});
  }
  return w;
}

std::string format_artin(const CoxeterSystem& system, const ArtinWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& y : w.syllables) {
    if (!out.empty()) out += ' ';
    out += system.name(y.generator);
    if (y.exponent != 1) out += "^" + std::to_string(y.exponent);
  }
  return out;
}

ArtinWord raag_normal_form(const CoxeterSystem& system, const ArtinWord& w) {
  require_right_angled(system);
  std::vector<Syllable> reduced;
  for (const Syllable& y : w.syllables) {
    if (y.generator >= system.rank()) throw InvalidArgument("generator out of range");
    if (y.exponent == 0) continue;
    bool merged = false;
    for (std::size_t p = reduced.size(); p-- > 0;) {
      if (reduced[p].generator == y.generator) {
        reduced[p].exponent += y.exponent;
        if (reduced[p].exponent == 0) reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(p));
        merged = true;
        break;
      }
      if (!commuting(system, reduced[p].generator, y.generator)) break;
    }
    if (!merged) reduced.push_back(y);
  }

  ArtinWord out;
  std::vector<bool> used(reduced.size(), false);
  for (std::size_t step = 0; step < reduced.size(); ++step) {
    std::size_t best = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (used[i]) continue;
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j)
        if (!used[j] && !commuting(system, reduced[j].generator, reduced[i].generator)) available = false;
      if (available && (best == reduced.size() || reduced[i] < reduced[best])) best = i;
    }
    used[best] = true;
    out.syllables.push_back(reduced[best]);
  }
  return out;
}

LaurentAlgElement sigma_generator(const CoxeterSystem& system, SigmaParam x, Generator s) {
  const LaurentPoly q = LaurentPoly::q();
  LaurentAlgElement out;
  if (x == SigmaParam::Q) {
    out.add(system.identity(), q);
    out.add(system.generator(s), -(q + 1));
  } else {
    out.add(system.identity(), -1);
    out.add(system.generator(s), q + 1);
  }
  return out;
}

LaurentAlgElement rep_sigma(SigmaParam x, const HeckeElement& a) {
  LaurentAlgElement out;
  for (const auto& [w, c] : a.terms()) {
    const CoxeterSystem& sys = w.system();
    require_right_angled(sys);
    LaurentAlgElement term = identity_element<LaurentPoly>(sys);
    for (Generator s : w.word()) term = term * sigma_generator(sys, x, s);
    out += c * term;
  }
  return out;
}

LaurentAlgElement power_closed_form(const CoxeterSystem& system, SigmaParam x, Generator s, int n) {
  const LaurentPoly diff = q_power_minus_sign(n);
  LaurentAlgElement out;
  if (x == SigmaParam::Q) {
    out.add(system.identity(), LaurentPoly::monomial(n));
    out.add(system.generator(s), -diff);
  } else {
    out.add(system.identity(), n % 2 == 0 ? 1 : -1);
    out.add(system.generator(s), diff);
  }
  return out;
}

LaurentPoly leading_coefficient_formula(const ArtinWord& w, SigmaParam x) {
  LaurentPoly out = 1;
  for (const Syllable& y : w.syllables) {
    out *= q_power_minus_sign(y.exponent);
    if (x == SigmaParam::Q) out = -out;
  }
  return out;
}

ArtinImage artin_image(const CoxeterSystem& system, const ArtinWord& w, SigmaParam x) {
  require_right_angled(system);
  LaurentAlgElement image = identity_element<LaurentPoly>(system);
  Element leading = system.identity();
  for (const Syllable& y : w.syllables) {
    image = image * power_closed_form(system, x, y.generator, y.exponent);
    leading = demazure(leading, system.generator(y.generator));
  }
  LaurentPoly coefficient = image.coefficient(leading);
  return {std::move(image), leading, std::move(coefficient)};
}

RationalAlgElement specialize(const LaurentAlgElement& a, const Rational& t) {
  if (t == 0) throw InvalidArgument("cannot specialize at q = 0");
  return a.map_coefficients<Rational>([&](const LaurentPoly& c) { return c.evaluate(t); });
}

std::vector<ArtinWord> enumerate_normal_forms(const CoxeterSystem& system, std::size_t max_syllables,
                                              int max_abs_exp) {
  require_right_angled(system);
  if (max_abs_exp < 0) throw InvalidArgument("max_abs_exp must be nonnegative");
  std::vector<int> exponents;
  for (int h = -max_abs_exp; h <= max_abs_exp; ++h)
    if (h != 0) exponents.push_back(h);

  std::vector<ArtinWord> out{ArtinWord{}};
  std::vector<ArtinWord> frontier{ArtinWord{}};
  for (std::size_t len = 1; len <= max_syllables && !exponents.empty(); ++len) {
    std::vector<ArtinWord> next;
    for (const ArtinWord& w : frontier) {
      for (Generator s = 0; s < system.rank(); ++s) {
        if (!w.empty() && w.syllables.back().generator == s) continue;
        for (int h : exponents) {
          ArtinWord candidate = w;
          candidate.syllables.push_back({s, h});
          // Prefixes of normal forms are normal forms, so extending the frontier suffices.
          if (raag_normal_form(system, candidate) == candidate) next.push_back(std::move(candidate));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

namespace {

std::optional<std::string> check_word(const CoxeterSystem& system, const ArtinWord& w, const Rational& t,
                                      SigmaParam x) {
  const ArtinImage img = artin_image(system, w, x);
  const LaurentAlgElement one = identity_element<LaurentPoly>(system);
  if (img.image == one) return "symbolic image is the identity";
  const RationalAlgElement one_q = RationalAlgElement(system.identity(), Rational(1));
  if (specialize(img.image, t) == one_q) return "specialized image is the identity";
  const LaurentPoly expected = leading_coefficient_formula(w, x);
  if (img.leading_coefficient != expected)
    return "leading coefficient " + img.leading_coefficient.to_string() + " differs from " + expected.to_string();
  if (img.leading.length() != w.syllables.size()) return "leading element is not reduced";
  if (expected.evaluate(t) == 0) return "leading coefficient vanishes at t";
  return std::nullopt;
}

}  // namespace

ScanReport injectivity_scan(const CoxeterSystem& system, std::size_t max_syllables, int max_abs_exp,
                            const Rational& t, SigmaParam x, unsigned threads) {
  if (t == 0 || t == 1 || t == -1) throw InvalidArgument("t must not be -1, 0 or 1");
  require_right_angled(system);
  ScanReport report;
  report.max_syllables = max_syllables;
  report.max_abs_exp = max_abs_exp;
  report.t = t;
  report.x = x;
  const std::vector<ArtinWord> words = enumerate_normal_forms(system, max_syllables, max_abs_exp);
  report.words = words.size();

  std::vector<std::optional<std::string>> results(words.size());
  const unsigned n = std::max(1u, threads);
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < words.size(); i += n)
      if (!words[i].empty()) results[i] = check_word(system, words[i], t, x);
  };
  if (n == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n);
    for (unsigned k = 0; k < n; ++k)
      pool.emplace_back([&, k] {
        try {
          work(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) continue;
    ++report.nontrivial;
    if (results[i])
      report.failures.push_back({words[i], *results[i]});
    else
      ++report.passed;
  }
  return report;
}

std::string scan_report_json(const CoxeterSystem& system, const ScanReport& report) {
  nlohmann::ordered_json doc;
  doc["system"] = nlohmann::ordered_json::parse(system_to_json(system));
  doc["x"] = to_string(report.x);
  doc["t"] = report.t.str();
  doc["max_syllables"] = report.max_syllables;
  doc["max_abs_exp"] = report.max_abs_exp;
  doc["words"] = report.words;
  doc["nontrivial"] = report.nontrivial;
  doc["passed"] = report.passed;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const ScanFailure& f : report.failures)
    doc["failures"].push_back({{"word", format_artin(system, f.word)}, {"reason", f.reason}});
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

std::string scan_report_text(const CoxeterSystem& system, const ScanReport& report) {
  std::ostringstream out;
  out << "x=" << to_string(report.x) << " t=" << report.t.str() << " max_syllables=" << report.max_syllables
      << " max_abs_exp=" << report.max_abs_exp << "\n";
  out << "words " << report.words << ", nontrivial " << report.nontrivial << ", passed " << report.passed
      << ", failed " << report.failures.size() << "\n";
  for (const ScanFailure& f : report.failures) out << "FAIL " << format_artin(system, f.word) << ": " << f.reason << "\n";
  return out.str();
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::string trimmed = text.substr(pos);
    if (trimmed.empty()) throw std::invalid_argument("empty");
    const std::size_t slash = trimmed.find('/');
    auto integer = [](const std::string& s) {
      std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) throw std::invalid_argument("bad integer");
      for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad integer");
      return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(integer(trimmed));
    const BigInt den = integer(trimmed.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(integer(trimmed.substr(0, slash)), den);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

}  // namespace coxkit
