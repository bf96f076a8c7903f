#include "coxkit/commgraph.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coxkit/io.hpp"
#include "coxkit/parabolic.hpp"

namespace coxkit {

std::string vertex_name(const CoxeterSystem& system, GeneratorSet J) { return "{" + system.format_set(J) + "}"; }

std::vector<GeneratorSet> graph_vertices(const CoxeterSystem& system) {
  const GeneratorSet full = system.all_generators();
  std::vector<std::pair<std::vector<std::string>, GeneratorSet>> keyed;
  for (GeneratorSet J : all_subsets(system.rank())) {
    if (J.empty() || J == full) continue;
    std::vector<std::string> names;
    for (Generator s : J.members()) names.push_back(system.name(s));
    std::sort(names.begin(), names.end());
    keyed.emplace_back(std::move(names), J);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<GeneratorSet> out;
  for (auto& [names, J] : keyed) out.push_back(J);
  return out;
}

const PairRecord& CommGraph::pair(GeneratorSet a, GeneratorSet b) const {
  std::size_t i = vertex_index(a);
  std::size_t j = vertex_index(b);
  if (i > j) std::swap(i, j);
  for (const PairRecord& p : pairs)
    if (p.u == i && p.v == j) return p;
  throw InvalidArgument("no such vertex pair");
}

std::vector<PairRecord> CommGraph::edges() const {
  std::vector<PairRecord> out;
  for (const PairRecord& p : pairs)
    if (p.is_edge()) out.push_back(p);
  return out;
}

std::size_t CommGraph::vertex_index(GeneratorSet a) const {
  auto it = std::find(vertices.begin(), vertices.end(), a);
  if (it == vertices.end()) throw InvalidArgument("not a vertex of the graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

Element alternate(Element w, GeneratorSet first, GeneratorSet second, unsigned k) {
  for (unsigned i = 0; i < k; ++i) w = proj(w, i % 2 == 0 ? first : second);
  return w;
}

std::optional<Element> search(const std::vector<Element>& candidates, GeneratorSet I, GeneratorSet J, unsigned k) {
  for (const Element& w : candidates)
    if (alternating_words_differ(w, I, J, k)) return w;
  return std::nullopt;
}

std::optional<bool> singleton_rule(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J, unsigned k) {
  if (I.size() != 1 || J.size() != 1 || I == J) return std::nullopt;
  const int m = system.matrix()(I.members().front(), J.members().front());
  if (m == CoxeterMatrix::kInfinity) return true;
  return static_cast<int>(k) < m;
}

}  // namespace

bool alternating_words_differ(const Element& w, GeneratorSet I, GeneratorSet J, unsigned k) {
  return alternate(w, J, I, k) != alternate(w, I, J, k);
}

PairRecord decide_pair(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J, unsigned k,
                       const GraphOptions& options) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  PairRecord rec;
  const GeneratorSet K = I | J;
  // Non-edges of G_2 are non-edges of every G_k.
  if (commute_exact(system, I, J)) {
    rec.status = EdgeStatus::NoEdgeProven;
    return rec;
  }
  // The operator words act on x*y (x in W^K, y in W_K) as x * (action on y), so W_K decides.
  if (system.parabolic_is_finite(K)) {
    const auto domain = system.is_finite() ? system.elements() : system.parabolic_elements(K);
    rec.witness = search(domain, I, J, k);
    rec.status = rec.witness ? EdgeStatus::Witnessed : EdgeStatus::NoEdgeProven;
    return rec;
  }
  if (k == 2) {
    // A separating element exists inside W_K within length |K| + 1.
    const std::size_t radius = std::max(options.cutoff, K.size() + 1);
    rec.witness = search(system.parabolic_ball(K, radius), I, J, k);
    if (!rec.witness) throw Error("internal: no witness for a non-commuting pair");
    rec.status = EdgeStatus::Witnessed;
    return rec;
  }
  const auto rule = singleton_rule(system, I, J, k);
  if (rule && !*rule) {
    rec.status = EdgeStatus::NoEdgeProven;
    return rec;
  }
  const std::size_t radius = rule ? std::max<std::size_t>(options.cutoff, k + 1) : options.cutoff;
  rec.witness = search(system.parabolic_ball(K, radius), I, J, k);
  if (!rec.witness) rec.witness = search(system.bruhat_ball(options.cutoff), I, J, k);
  if (rec.witness) {
    rec.status = EdgeStatus::Witnessed;
  } else {
    rec.status = EdgeStatus::UnknownAtCutoff;
    rec.radius = radius;
  }
  return rec;
}

namespace {

template <class Decide>
CommGraph build(const CoxeterSystem& system, const GraphOptions& options, Decide decide) {
  CommGraph g;
  g.system = &system;
  g.vertices = graph_vertices(system);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      PairRecord p;
      p.u = i;
      p.v = j;
      g.pairs.push_back(std::move(p));
    }

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, g.pairs.size()));
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t n = begin; n < g.pairs.size(); n += step) {
      PairRecord& p = g.pairs[n];
      PairRecord decided = decide(g.vertices[p.u], g.vertices[p.v]);
      decided.u = p.u;
      decided.v = p.v;
      p = std::move(decided);
    }
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return g;
}

}  // namespace

CommGraph graph_g2(const CoxeterSystem& system, const GraphOptions& options) {
  return graph_gk(system, 2, options);
}

CommGraph graph_gk(const CoxeterSystem& system, unsigned k, const GraphOptions& options) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  CommGraph g = build(system, options, [&](GeneratorSet I, GeneratorSet J) {
    return decide_pair(system, I, J, k, options);
  });
  g.k = k;
  return g;
}

CommGraph labeled_graph(const CoxeterSystem& system, const GraphOptions& options) {
  if (options.kmax < 3) throw InvalidArgument("kmax must be at least 3");
  CommGraph g = build(system, options, [&](GeneratorSet I, GeneratorSet J) {
    PairRecord rec = decide_pair(system, I, J, 2, options);
    if (rec.status != EdgeStatus::Witnessed) return rec;
    // With W_{I∪J} finite the alternating words always stabilise, so the search ends.
    const bool exact = system.parabolic_is_finite(I | J);
    for (unsigned k = 3; exact || k <= options.kmax; ++k) {
      const PairRecord at_k = decide_pair(system, I, J, k, options);
      if (at_k.status == EdgeStatus::NoEdgeProven) {
        rec.label = k == 3 ? EdgeLabel{EdgeLabel::Kind::Unlabeled, 0} : EdgeLabel{EdgeLabel::Kind::Finite, static_cast<int>(k)};
        return rec;
      }
      if (at_k.status == EdgeStatus::UnknownAtCutoff) {
        rec.status = EdgeStatus::UnknownAtCutoff;
        rec.radius = at_k.radius;
        return rec;
      }
    }
    rec.status = EdgeStatus::UnknownAtCutoff;
    rec.radius = options.kmax;
    rec.label = EdgeLabel{EdgeLabel::Kind::Infinity, 0};
    return rec;
  });
  g.labeled = true;
  g.k = 2;
  g.kmax = options.kmax;
  return g;
}

namespace {

const char* status_name(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Witnessed: return "witnessed";
    case EdgeStatus::NoEdgeProven: return "no-edge";
    case EdgeStatus::UnknownAtCutoff: return "unknown";
  }
  return "";
}

EdgeStatus parse_status(const std::string& s) {
  if (s == "witnessed") return EdgeStatus::Witnessed;
  if (s == "no-edge") return EdgeStatus::NoEdgeProven;
  if (s == "unknown") return EdgeStatus::UnknownAtCutoff;
  throw ParseError("unknown edge status '" + s + "'");
}

std::string label_text(const EdgeLabel& l) {
  switch (l.kind) {
    case EdgeLabel::Kind::Unlabeled: return "unlabeled";
    case EdgeLabel::Kind::Finite: return std::to_string(l.value);
    case EdgeLabel::Kind::Infinity: return "inf";
  }
  return "";
}

EdgeLabel parse_label(const std::string& s) {
  if (s == "unlabeled") return {EdgeLabel::Kind::Unlabeled, 0};
  if (s == "inf") return {EdgeLabel::Kind::Infinity, 0};
  try {
    return {EdgeLabel::Kind::Finite, std::stoi(s)};
  } catch (const std::exception&) {
    throw ParseError("bad edge label '" + s + "'");
  }
}

}  // namespace

std::string emit(const CommGraph& graph, GraphFormat format) {
  const CoxeterSystem& sys = *graph.system;
  if (format == GraphFormat::Dot) {
    std::ostringstream out;
    out << "graph " << (graph.labeled ? std::string("G") : "G" + std::to_string(graph.k)) << " {\n";
    for (GeneratorSet v : graph.vertices) out << "  \"" << vertex_name(sys, v) << "\";\n";
    for (const PairRecord& p : graph.pairs) {
      if (!p.is_edge() && p.status != EdgeStatus::UnknownAtCutoff) continue;
      out << "  \"" << vertex_name(sys, graph.vertices[p.u]) << "\" -- \"" << vertex_name(sys, graph.vertices[p.v])
          << "\"";
      std::vector<std::string> attrs;
      if (p.label && p.label->kind != EdgeLabel::Kind::Unlabeled) attrs.push_back("label=\"" + label_text(*p.label) + "\"");
      if (p.status == EdgeStatus::UnknownAtCutoff) attrs.push_back("style=dashed");
      if (!attrs.empty()) {
        out << " [";
        for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
        out << "]";
      }
      out << ";\n";
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["system"] = nlohmann::ordered_json::parse(system_to_json(sys));
  doc["labeled"] = graph.labeled;
  doc["k"] = graph.k;
  doc["kmax"] = graph.kmax;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (GeneratorSet v : graph.vertices) doc["vertices"].push_back(vertex_name(sys, v));
  doc["pairs"] = nlohmann::ordered_json::array();
  for (const PairRecord& p : graph.pairs) {
    nlohmann::ordered_json r;
    r["u"] = p.u;
    r["v"] = p.v;
    r["status"] = status_name(p.status);
    r["witness"] = p.witness ? nlohmann::ordered_json(sys.format(*p.witness)) : nlohmann::ordered_json();
    r["radius"] = p.radius;
    r["label"] = p.label ? nlohmann::ordered_json(label_text(*p.label)) : nlohmann::ordered_json();
    doc["pairs"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

CommGraph parse_graph(const std::string& json_text, const CoxeterSystem& system) {
  CommGraph g;
  g.system = &system;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    g.labeled = doc.at("labeled").get<bool>();
    g.k = doc.at("k").get<unsigned>();
    g.kmax = doc.at("kmax").get<unsigned>();
    for (const auto& v : doc.at("vertices")) g.vertices.push_back(system.parse_set(v.get<std::string>()));
    for (const auto& r : doc.at("pairs")) {
      PairRecord p;
      p.u = r.at("u").get<std::size_t>();
      p.v = r.at("v").get<std::size_t>();
      if (p.u >= g.vertices.size() || p.v >= g.vertices.size()) throw ParseError("pair index out of range");
      p.status = parse_status(r.at("status").get<std::string>());
      if (!r.at("witness").is_null()) p.witness = system.parse_element(r.at("witness").get<std::string>());
      p.radius = r.at("radius").get<std::size_t>();
      if (!r.at("label").is_null()) p.label = parse_label(r.at("label").get<std::string>());
      g.pairs.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
  return g;
}

}  // namespace coxkit
