#include "coxkit/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "coxkit/artin.hpp"
#include "coxkit/bruhat.hpp"
#include "coxkit/commgraph.hpp"
#include "coxkit/hecke.hpp"
#include "coxkit/linalg.hpp"
#include "coxkit/monoid_algebra.hpp"
#include "coxkit/parabolic.hpp"

namespace coxkit {

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (!c.skipped && c.pass);
  return n;
}

std::size_t VerificationReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (!c.skipped && !c.pass);
  return n;
}

std::size_t VerificationReport::skipped() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.skipped;
  return n;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 200;

class Suite {
 public:
  Suite(const CoxeterSystem& system, const VerifyOptions& options, std::vector<CheckRecord>& out)
      : sys_(system), opt_(options), out_(out) {}

  const CoxeterSystem& sys() const { return sys_; }
  const VerifyOptions& opt() const { return opt_; }

  /// Whole group when small and finite, otherwise the ball of the configured radius.
  const std::vector<Element>& domain() {
    if (!domain_) {
      if (sys_.is_finite() && sys_.elements().size() <= kExhaustiveLimit) {
        domain_ = sys_.elements();
        domain_desc_ = "W";
      } else {
        domain_ = sys_.bruhat_ball(opt_.radius);
        domain_desc_ = "ball(" + std::to_string(opt_.radius) + ")";
      }
    }
    return *domain_;
  }
  const std::string& domain_desc() {
    domain();
    return domain_desc_;
  }

  CheckRecord& begin(const std::string& name, const std::string& params) {
    out_.push_back(CheckRecord{name, opt_.label, params, true, false, "", 0});
    return out_.back();
  }

  void skip(const std::string& name, const std::string& reason) {
    CheckRecord& r = begin(name, "");
    r.skipped = true;
    r.witness = reason;
  }

  std::string fmt(const Element& w) const { return sys_.format(w); }
  std::string set(GeneratorSet J) const { return "{" + sys_.format_set(J) + "}"; }

 private:
  const CoxeterSystem& sys_;
  const VerifyOptions& opt_;
  std::vector<CheckRecord>& out_;
  std::optional<std::vector<Element>> domain_;
  std::string domain_desc_;
};

void expect(CheckRecord& r, bool ok, const std::function<std::string()>& witness) {
  ++r.cases;
  if (!ok && r.pass) {
    r.pass = false;
    r.witness = witness();
  }
}

std::vector<GeneratorSet> proper_subsets(const CoxeterSystem& sys) {
  std::vector<GeneratorSet> out;
  for (GeneratorSet J : all_subsets(sys.rank()))
    if (!J.empty() && J != sys.all_generators()) out.push_back(J);
  return out;
}

std::optional<Element> commutator_witness(const std::vector<Element>& domain, GeneratorSet I, GeneratorSet J) {
  for (const Element& w : domain)
    if (proj(proj(w, J), I) != proj(proj(w, I), J)) return w;
  return std::nullopt;
}

void suite_prefascio(Suite& s) {
  const auto& dom = s.domain();
  CheckRecord& r = s.begin("nested projections absorb", "I ⊆ J, w in " + s.domain_desc());
  for (GeneratorSet J : all_subsets(s.sys().rank()))
    for (GeneratorSet I : all_subsets(s.sys().rank())) {
      if (!I.is_subset_of(J)) continue;
      for (const Element& w : dom) {
        expect(r, proj(proj(w, I), J) == proj(w, J),
               [&] { return "P side, I=" + s.set(I) + " J=" + s.set(J) + " w=" + s.fmt(w); });
        expect(r, proj(proj(w, I, Side::Left), J, Side::Left) == proj(w, J, Side::Left),
               [&] { return "Q side, I=" + s.set(I) + " J=" + s.set(J) + " w=" + s.fmt(w); });
      }
    }
}

void suite_commutano(Suite& s) {
  const auto& dom = s.domain();
  CheckRecord& r = s.begin("left and right projections commute", "all I, J, w in " + s.domain_desc());
  for (GeneratorSet I : all_subsets(s.sys().rank()))
    for (GeneratorSet J : all_subsets(s.sys().rank()))
      for (const Element& w : dom)
        expect(r, proj(proj(w, I, Side::Left), J) == proj(proj(w, J), I, Side::Left),
               [&] { return "I=" + s.set(I) + " J=" + s.set(J) + " w=" + s.fmt(w); });
}

void suite_pprodotto(Suite& s) {
  const auto& dom = s.domain();
  CheckRecord& r = s.begin("projection factors over connected components", "all I, w in " + s.domain_desc());
  for (GeneratorSet I : all_subsets(s.sys().rank())) {
    const auto parts = s.sys().connected_components(I);
    for (const Element& w : dom) {
      Element x = w;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) x = proj(x, *it);
      expect(r, x == proj(w, I), [&] { return "I=" + s.set(I) + " w=" + s.fmt(w); });
    }
  }
}

void suite_pcommutanti(Suite& s) {
  const auto& dom = s.domain();
  const bool whole = s.sys().is_finite() && s.domain_desc() == "W";
  CheckRecord& r = s.begin("combinatorial criterion matches operator comparison",
                           whole ? "proper subsets, exhaustive over W"
                                 : "proper subsets, witness radius " + std::to_string(s.opt().cutoff));
  const auto subsets = proper_subsets(s.sys());
  for (GeneratorSet I : subsets)
    for (GeneratorSet J : subsets) {
      const bool criterion = commute_exact(s.sys(), I, J);
      std::optional<Element> w = commutator_witness(dom, I, J);
      if (!w && !criterion && !whole) w = find_noncommuting_witness(s.sys(), I, J, s.opt().cutoff);
      expect(r, criterion == !w.has_value(), [&] {
        return "I=" + s.set(I) + " J=" + s.set(J) + (w ? " w=" + s.fmt(*w) : std::string(" no witness"));
      });
    }
}

void suite_teorema_comm(Suite& s) {
  if (!s.sys().is_finite() || s.sys().elements().size() > kExhaustiveLimit) {
    s.skip("three commutation conditions agree", "requires a finite group with at most " +
                                                     std::to_string(kExhaustiveLimit) + " elements");
    return;
  }
  const auto& dom = s.domain();
  const Element w0 = s.sys().longest_element(s.sys().all_generators());
  CheckRecord& r = s.begin("three commutation conditions agree", "all I, J, exhaustive over W");
  for (GeneratorSet I : all_subsets(s.sys().rank()))
    for (GeneratorSet J : all_subsets(s.sys().rank())) {
      auto kills = [&](const Element& w) { return proj(proj(w, J), I) == proj(proj(w, I), J); };
      const bool a = kills(s.sys().longest_element(I | J));
      const bool b = kills(w0);
      const bool c = !commutator_witness(dom, I, J).has_value();
      expect(r, a == b && b == c, [&] {
        return "I=" + s.set(I) + " J=" + s.set(J) + " conditions " + std::to_string(a) + std::to_string(b) +
               std::to_string(c);
      });
    }
}

void suite_lemma_pu(Suite& s) {
  const auto& dom = s.domain();
  CheckRecord& r = s.begin("P^v u = e iff u <= v", "u, v in " + s.domain_desc());
  for (const Element& u : dom)
    for (const Element& v : dom)
      expect(r, apply_P(v, u).is_identity() == bruhat_leq(u, v),
             [&] { return "u=" + s.fmt(u) + " v=" + s.fmt(v); });
}

void suite_isomorfismi(Suite& s) {
  constexpr std::size_t kRankLimit = 64;
  std::vector<Element> basis;
  std::string params;
  if (s.sys().is_finite() && s.sys().elements().size() <= kRankLimit) {
    basis = s.sys().elements();
    params = "all of W on all of W";
  } else {
    const std::size_t radius = std::min<std::size_t>(s.opt().radius, 3);
    basis = s.sys().bruhat_ball(radius);
    params = "ball(" + std::to_string(radius) + ") on ball(" + std::to_string(radius) + ")";
  }
  CheckRecord& r = s.begin("monoid basis acts independently", params);
  expect(r, independence_check(basis, basis), [&] { return std::to_string(basis.size()) + " matrices dependent"; });
}

void suite_pmoebius(Suite& s) {
  std::vector<Element> dom;
  for (const Element& v : s.domain())
    if (v.length() <= 6) dom.push_back(v);
  CheckRecord& r = s.begin("bar expansion and inversion", "v in " + s.domain_desc() + ", length <= 6");
  for (const Element& v : dom) {
    const IntAlgElement pv = basis_element<std::int64_t>(v);
    expect(r, bar(bar_expand(v)) == pv, [&] { return "inversion fails at v=" + s.fmt(v); });
    IntAlgElement product = identity_element<std::int64_t>(s.sys());
    for (Generator g : v.word())
      product = product * (identity_element<std::int64_t>(s.sys()) - basis_element<std::int64_t>(s.sys().generator(g)));
    expect(r, product == bar_expand(v), [&] { return "product form differs at v=" + s.fmt(v); });
  }
}

void suite_ordered_monoid(Suite& s) {
  std::vector<Element> dom = s.domain();
  if (dom.size() > 48) dom = s.sys().bruhat_ball(std::min<std::size_t>(s.opt().radius, 3));
  std::vector<std::pair<Element, Element>> comparable;
  for (const Element& x : dom)
    for (const Element& y : dom)
      if (bruhat_leq(x, y)) comparable.emplace_back(x, y);
  CheckRecord& r = s.begin("Demazure product is monotone", std::to_string(dom.size()) + " elements");
  for (const auto& [x1, y1] : comparable)
    for (const auto& [x2, y2] : comparable)
      expect(r, bruhat_leq(demazure(x1, x2), demazure(y1, y2)), [&] {
        return s.fmt(x1) + " <= " + s.fmt(y1) + ", " + s.fmt(x2) + " <= " + s.fmt(y2);
      });
}

void suite_hecke(Suite& s) {
  const CoxeterSystem& sys = s.sys();
  const LaurentPoly q = LaurentPoly::q();
  {
    CheckRecord& r = s.begin("quadratic relation", "every generator");
    for (Generator g = 0; g < sys.rank(); ++g) {
      const Element e = sys.identity();
      const Element t = sys.generator(g);
      expect(r, hecke_mul(T(t), T(t)) == T(e, q) + T(t, q - 1), [&] { return "s=" + sys.name(g); });
    }
  }
  const std::vector<Element> ball = sys.bruhat_ball(std::min<std::size_t>(s.opt().radius, 4));
  {
    CheckRecord& r = s.begin("inverse round trip", "w in ball(" + std::to_string(std::min<std::size_t>(s.opt().radius, 4)) + ")");
    for (const Element& w : ball) {
      const HeckeElement inv = hecke_inv_T(w);
      expect(r, hecke_mul(T(w), inv) == T(sys.identity()) && hecke_mul(inv, T(w)) == T(sys.identity()),
             [&] { return "w=" + s.fmt(w); });
    }
  }
  {
    CheckRecord& r = s.begin("iota is a multiplicative involution",
                             std::to_string(s.opt().random_pairs) + " random pairs, seed " + std::to_string(s.opt().seed));
    std::mt19937_64 rng(s.opt().seed);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (std::size_t n = 0; n < s.opt().random_pairs; ++n) {
      const Element& a = ball[pick(rng)];
      const Element& b = ball[pick(rng)];
      expect(r, iota(iota(T(a))) == T(a), [&] { return "involution fails at " + s.fmt(a); });
      expect(r, iota(hecke_mul(T(a), T(b))) == hecke_mul(iota(T(a)), iota(T(b))),
             [&] { return "a=" + s.fmt(a) + " b=" + s.fmt(b); });
    }
  }
}

LaurentAlgElement operator_power(const LaurentAlgElement& a, unsigned n, const CoxeterSystem& sys) {
  return alg_pow(a, n, sys);
}

void suite_sigma(Suite& s) {
  const CoxeterSystem& sys = s.sys();
  const LaurentPoly q = LaurentPoly::q();
  const LaurentAlgElement one = identity_element<LaurentPoly>(sys);
  const SigmaParam params[] = {SigmaParam::Q, SigmaParam::MinusOne};
  {
    CheckRecord& r = s.begin("quadratic identity", "both x, every generator");
    for (SigmaParam x : params)
      for (Generator g = 0; g < sys.rank(); ++g) {
        const LaurentAlgElement f = sigma_generator(sys, x, g);
        expect(r, f * f == q * one + (q - 1) * f, [&] { return "x=" + to_string(x) + " s=" + sys.name(g); });
      }
  }
  {
    CheckRecord& r = s.begin("power closed form", "both x, every generator, n in [-3, 5]");
    for (SigmaParam x : params)
      for (Generator g = 0; g < sys.rank(); ++g) {
        const LaurentAlgElement f = sigma_generator(sys, x, g);
        const LaurentAlgElement finv = q.pow(-1) * (f - (q - 1) * one);
        for (int n = -3; n <= 5; ++n) {
          const LaurentAlgElement direct =
              n >= 0 ? operator_power(f, static_cast<unsigned>(n), sys) : operator_power(finv, static_cast<unsigned>(-n), sys);
          expect(r, direct == power_closed_form(sys, x, g, n),
                 [&] { return "x=" + to_string(x) + " s=" + sys.name(g) + " n=" + std::to_string(n); });
        }
      }
  }
  bool braid_pair = false;
  for (Generator a = 0; a < sys.rank(); ++a)
    for (Generator b = 0; b < sys.rank(); ++b)
      if (a != b && (sys.matrix().is_infinite(a, b) || sys.matrix()(a, b) > 2)) braid_pair = true;
  if (!braid_pair) {
    s.skip("braid relation fails", "no pair with m > 2");
  } else {
    CheckRecord& r = s.begin("braid relation fails", "pairs with m > 2, powers 1..5, applied to v = ts");
    for (Generator a = 0; a < sys.rank(); ++a)
      for (Generator b = 0; b < sys.rank(); ++b) {
        const int m = sys.matrix()(a, b);
        if (a == b || (m != CoxeterMatrix::kInfinity && m <= 2)) continue;
        const Element v = sys.multiply(sys.generator(b), sys.generator(a));
        const Element vs = sys.generator(b);
        for (SigmaParam x : params) {
          const LaurentAlgElement pair = sigma_generator(sys, x, a) * sigma_generator(sys, x, b);
          LaurentAlgElement power = one;
          for (int k = 1; k <= 5; ++k) {
            power = power * pair;
            ModuleVector<LaurentPoly> image = act(power, ModuleVector<LaurentPoly>(v, 1));
            image.add(sys.identity(), -image.coefficient(sys.identity()));
            ModuleVector<LaurentPoly> expected;
            const LaurentPoly mq = -q;
            if (x == SigmaParam::Q) {
              const LaurentPoly c = mq.pow(k - 1);
              expected.add(v, c * -q);
              expected.add(vs, c * LaurentPoly(k) * (q + 1));
            } else {
              const LaurentPoly c = mq.pow(k);
              expected.add(v, c);
              expected.add(vs, c * LaurentPoly(-k) * (q + 1));
            }
            expect(r, image == expected && power != one, [&] {
              return "x=" + to_string(x) + " s=" + sys.name(a) + " t=" + sys.name(b) + " m=" + std::to_string(k);
            });
          }
        }
      }
  }
  if (!sys.right_angled()) {
    s.skip("generator images commute", "system is not right-angled");
    s.skip("leading coefficient (q+1)^l(w)", "system is not right-angled");
    return;
  }
  {
    CheckRecord& r = s.begin("generator images commute", "pairs with m = 2, both x");
    for (SigmaParam x : params)
      for (Generator a = 0; a < sys.rank(); ++a)
        for (Generator b = a + 1; b < sys.rank(); ++b) {
          if (sys.matrix()(a, b) != 2) continue;
          const auto fa = sigma_generator(sys, x, a);
          const auto fb = sigma_generator(sys, x, b);
          expect(r, fa * fb == fb * fa, [&] { return "x=" + to_string(x) + " " + sys.name(a) + "," + sys.name(b); });
        }
  }
  {
    const std::size_t radius = std::min<std::size_t>(s.opt().radius, 4);
    CheckRecord& r = s.begin("leading coefficient (q+1)^l(w)", "w in ball(" + std::to_string(radius) + "), both x");
    for (const Element& w : sys.bruhat_ball(radius))
      for (SigmaParam x : params) {
        const LaurentPoly base = x == SigmaParam::Q ? -(q + 1) : q + 1;
        expect(r, rep_sigma(x, T(w)).coefficient(w) == base.pow(static_cast<int>(w.length())),
               [&] { return "x=" + to_string(x) + " w=" + s.fmt(w); });
      }
  }
}

void suite_artin(Suite& s) {
  if (!s.sys().right_angled()) {
    s.skip("injectivity scan", "system is not right-angled");
    return;
  }
  const Rational t = parse_rational(s.opt().t);
  for (SigmaParam x : {SigmaParam::Q, SigmaParam::MinusOne}) {
    const ScanReport rep =
        injectivity_scan(s.sys(), s.opt().max_syllables, s.opt().max_abs_exp, t, x, s.opt().threads);
    CheckRecord& r = s.begin("injectivity scan", "x=" + to_string(x) + " t=" + t.str() + " max_syllables=" +
                                                     std::to_string(s.opt().max_syllables) + " max_abs_exp=" +
                                                     std::to_string(s.opt().max_abs_exp));
    r.cases = rep.nontrivial;
    if (!rep.ok()) {
      r.pass = false;
      r.witness = format_artin(s.sys(), rep.failures.front().word) + ": " + rep.failures.front().reason;
    }
  }
}

void suite_lemma_st(Suite& s) {
  const CoxeterSystem& sys = s.sys();
  GraphOptions go;
  go.cutoff = s.opt().cutoff;
  CheckRecord& r = s.begin("singleton edges follow k < m", "k in [2, " + std::to_string(s.opt().kmax) + "]");
  for (Generator a = 0; a < sys.rank(); ++a)
    for (Generator b = a + 1; b < sys.rank(); ++b) {
      const int m = sys.matrix()(a, b);
      const GeneratorSet I = GeneratorSet::single(a);
      const GeneratorSet J = GeneratorSet::single(b);
      for (unsigned k = 2; k <= s.opt().kmax; ++k) {
        const bool infinite = m == CoxeterMatrix::kInfinity;
        if (!infinite && static_cast<int>(k) > m) break;
        const PairRecord p = decide_pair(sys, I, J, k, go);
        const bool want_edge = infinite || static_cast<int>(k) < m;
        const bool ok = want_edge ? (p.status == EdgeStatus::Witnessed && p.witness &&
                               alternating_words_differ(*p.witness, I, J, k))
                            : p.status == EdgeStatus::NoEdgeProven;
        expect(r, ok, [&] {
          return sys.name(a) + "," + sys.name(b) + " m=" + (infinite ? std::string("inf") : std::to_string(m)) +
                 " k=" + std::to_string(k);
        });
      }
    }
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"proiezioniprefascio", suite_prefascio},
      {"proiezionicommutano", suite_commutano},
      {"corol-pprodotto", suite_pprodotto},
      {"pcommutanti", suite_pcommutanti},
      {"teorema-comm", suite_teorema_comm},
      {"lemma-pu", suite_lemma_pu},
      {"isomorfismi", suite_isomorfismi},
      {"pmoebius", suite_pmoebius},
      {"ordered-monoid", suite_ordered_monoid},
      {"hecke", suite_hecke},
      {"sigma", suite_sigma},
      {"artin", suite_artin},
      {"lemma-st", suite_lemma_st},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const CoxeterSystem& system, const std::string& suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  Suite ctx(system, options, report.checks);
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    const std::size_t before = report.checks.size();
    fn(ctx);
    for (std::size_t i = before; i < report.checks.size(); ++i) report.checks[i].name = name + ": " + report.checks[i].name;
  }
  if (!found) throw InvalidArgument("unknown suite '" + suite + "'");
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckRecord& c : report.checks) {
    out << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.params.empty()) out << " [" << c.params << "]";
    if (!c.skipped) out << " (" << c.cases << " cases)";
    if (!c.witness.empty()) out << (c.skipped ? ": " : " witness: ") << c.witness;
    out << "\n";
  }
  out << report.suite << ": " << report.passed() << " passed, " << report.failed() << " failed, " << report.skipped()
      << " skipped\n";
  return out.str();
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["system"] = c.system;
    j["params"] = c.params;
    j["status"] = c.skipped ? "skipped" : c.pass ? "pass" : "fail";
    j["cases"] = c.cases;
    j["witness"] = c.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.witness);
    doc["checks"].push_back(std::move(j));
  }
  doc["passed"] = report.passed();
  doc["failed"] = report.failed();
  doc["skipped"] = report.skipped();
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

}  // namespace coxkit
