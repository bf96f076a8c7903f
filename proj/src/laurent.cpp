#include "coxkit/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_[exponent] = coefficient;
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1 || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
      throw InvalidArgument("negative power of a non-unit Laurent polynomial");
    const auto [e, c] = *terms_.begin();
    return monomial(-e * -n, (-n) % 2 == 0 ? 1 : c);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

Rational LaurentPoly::evaluate(const Rational& t) const {
  Rational sum = 0;
  for (auto [e, c] : terms_) {
    if (e < 0 && t == 0) throw InvalidArgument("cannot evaluate a negative power at q = 0");
    Rational power = 1;
    const Rational base = e >= 0 ? t : Rational(1) / t;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_[e] = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : rhs.terms_) out.add_term(e1 + e2, checked_mul(c1, c2));
  *this = std::move(out);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const bool negative = c < 0;
    const std::uint64_t magnitude = negative ? 0ull - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly q_power_minus_sign(int n) {
  return LaurentPoly::monomial(n) - LaurentPoly(n % 2 == 0 ? 1 : -1);
}

LaurentPoly parse_laurent(const std::string& text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::int64_t {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected integer in Laurent polynomial '" + text + "'");
    return std::stoll(text.substr(start, i - start));
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (i < text.size()) {
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in Laurent polynomial '" + text + "'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool have_digits = i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    if (have_digits) coeff = read_int();
    int exponent = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        exponent = static_cast<int>(read_int());
      }
    } else if (!have_digits) {
      throw ParseError("malformed term in Laurent polynomial '" + text + "'");
    }
    out += LaurentPoly::monomial(exponent, sign * coeff);
    skip();
  }
  return out;
}

}  // namespace coxkit
