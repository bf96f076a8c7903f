#include "coxkit/hecke.hpp"

#include <cctype>

namespace coxkit {

HeckeElement hecke_mul_generator(const HeckeElement& a, Generator s) {
  const LaurentPoly q = LaurentPoly::q();
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) {
    const CoxeterSystem& sys = w.system();
    const Element ws = sys.multiply_right(w, s);
    if (sys.is_descent(w, s, Side::Right)) {
      out.add(ws, q * c);
      out.add(w, (q - 1) * c);
    } else {
      out.add(ws, c);
    }
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [v, cv] : b.terms()) {
    HeckeElement partial = a;
    for (Generator s : v.word()) partial = hecke_mul_generator(partial, s);
    out += cv * partial;
  }
  return out;
}

HeckeElement hecke_inv_T(const Element& w) {
  const CoxeterSystem& sys = w.system();
  const LaurentPoly qinv = LaurentPoly::monomial(-1);
  HeckeElement out = T(sys.identity());
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    // out * T_s^{-1} = (q^-1 - 1) out + q^-1 out T_s
    out = (qinv - 1) * out + qinv * hecke_mul_generator(out, *it);
  }
  return out;
}

HeckeElement iota(const HeckeElement& a) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) out += c.bar() * hecke_inv_T(w.system().inverse(w));
  return out;
}

HeckeElement parse_hecke(const CoxeterSystem& system, const std::string& text) {
  if (text.find("T[") == std::string::npos) return T(system.parse_element(text));
  HeckeElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    LaurentPoly sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    LaurentPoly coeff = 1;
    if (i < text.size() && text[i] == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + text + "'");
      coeff = parse_laurent(text.substr(i + 1, close - i - 1));
      i = close + 1;
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    if (text.compare(i, 2, "T[") != 0) throw ParseError("expected 'T[' in '" + text + "'");
    i += 2;
    const std::size_t close = text.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated 'T[' in '" + text + "'");
    out.add(system.parse_element(text.substr(i, close - i)), sign * coeff);
    i = close + 1;
  }
  return out;
}

}  // namespace coxkit
