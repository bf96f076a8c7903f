#include <doctest.h>

#include "coxkit/commgraph.hpp"
#include "coxkit/systems.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

std::size_t edge_count(const CommGraph& g) { return g.edges().size(); }

}  // namespace

TEST_CASE("vertices") {
  const auto sys = type_a(3);
  const auto v = graph_vertices(*sys);
  REQUIRE(v.size() == 6);
  CHECK(vertex_name(*sys, v[0]) == "{s1}");
  CHECK(vertex_name(*sys, v[3]) == "{s1,s2}");
  CHECK(vertex_name(*sys, v[5]) == "{s2,s3}");
}

TEST_CASE("G_2 and G_3 of S4 against exhaustive comparison") {
  const auto sys = type_a(3);
  const auto all = sys->elements();
  for (unsigned k : {2u, 3u}) {
    const CommGraph g = graph_gk(*sys, k);
    for (const PairRecord& p : g.pairs) {
      const bool edge = oracle::edge_on(all, g.vertices[p.u], g.vertices[p.v], k);
      CHECK(p.status != EdgeStatus::UnknownAtCutoff);
      CHECK((p.status == EdgeStatus::Witnessed) == edge);
    }
  }
  CHECK(edge_count(graph_g2(*sys)) > 0);
}

TEST_CASE("G_k of S4 is edgeless for k >= 4") {
  const auto sys = type_a(3);
  for (unsigned k = 4; k <= 8; ++k) {
    const CommGraph g = graph_gk(*sys, k);
    CHECK(g.vertices.size() == 6);
    CHECK(edge_count(g) == 0);
  }
}

TEST_CASE("singleton pairs in dihedral systems") {
  for (int m = 2; m <= 6; ++m) {
    const auto sys = dihedral(m);
    for (unsigned k = 2; k <= 7; ++k) {
      const PairRecord p = graph_gk(*sys, k).pair(sys->parse_set("s"), sys->parse_set("t"));
      CHECK((p.status == EdgeStatus::Witnessed) == (static_cast<int>(k) < m));
      CHECK(p.status != EdgeStatus::UnknownAtCutoff);
    }
  }
  const auto inf = dihedral(0);
  for (unsigned k = 2; k <= 7; ++k)
    CHECK(graph_gk(*inf, k).pair(inf->parse_set("s"), inf->parse_set("t")).status == EdgeStatus::Witnessed);
}

TEST_CASE("witnesses separate the operator words") {
  for (const auto& sys : {type_b(3), free_coxeter(3), right_angled_path3()}) {
    for (unsigned k : {2u, 3u, 4u}) {
      const CommGraph g = graph_gk(*sys, k, GraphOptions{5, 8, 1});
      for (const PairRecord& p : g.pairs) {
        if (p.status != EdgeStatus::Witnessed) continue;
        REQUIRE(p.witness.has_value());
        CHECK(oracle::edge_on({*p.witness}, g.vertices[p.u], g.vertices[p.v], k));
      }
    }
  }
}

TEST_CASE("non-edges claimed for finite systems hold on the whole group") {
  const auto sys = type_b(3);
  const auto all = sys->elements();
  for (unsigned k = 2; k <= 5; ++k) {
    const CommGraph g = graph_gk(*sys, k);
    for (const PairRecord& p : g.pairs)
      if (p.status == EdgeStatus::NoEdgeProven) CHECK_FALSE(oracle::edge_on(all, g.vertices[p.u], g.vertices[p.v], k));
  }
}

TEST_CASE("G_k is monotone in k") {
  const auto sys = type_b(3);
  CommGraph prev = graph_gk(*sys, 2);
  for (unsigned k = 3; k <= 6; ++k) {
    const CommGraph g = graph_gk(*sys, k);
    for (std::size_t i = 0; i < g.pairs.size(); ++i)
      if (g.pairs[i].is_edge()) CHECK(prev.pairs[i].is_edge());
    prev = g;
  }
}

TEST_CASE("labeled graph of S4") {
  const auto sys = type_a(3);
  const CommGraph g = labeled_graph(*sys);
  const CommGraph g2 = graph_g2(*sys);
  CHECK(g.edges().size() == g2.edges().size());
  const auto all = sys->elements();
  for (const PairRecord& p : g.edges()) {
    REQUIRE(p.label.has_value());
    const int label = p.label->kind == EdgeLabel::Kind::Unlabeled ? 3 : p.label->value;
    REQUIRE(p.label->kind != EdgeLabel::Kind::Infinity);
    // the label is the first k leaving E_k
    CHECK_FALSE(oracle::edge_on(all, g.vertices[p.u], g.vertices[p.v], static_cast<unsigned>(label)));
    for (int k = 2; k < label; ++k) CHECK(oracle::edge_on(all, g.vertices[p.u], g.vertices[p.v], static_cast<unsigned>(k)));
  }
  const PairRecord& st = g.pair(sys->parse_set("s1"), sys->parse_set("s2"));
  CHECK(st.label->kind == EdgeLabel::Kind::Unlabeled);
}

TEST_CASE("labeled graph of a dihedral group carries m") {
  const auto sys = dihedral(5);
  const PairRecord& p = labeled_graph(*sys).pair(sys->parse_set("s"), sys->parse_set("t"));
  REQUIRE(p.label.has_value());
  CHECK(p.label->kind == EdgeLabel::Kind::Finite);
  CHECK(p.label->value == 5);
}

TEST_CASE("infinite labels are reported as unresolved") {
  const auto sys = free_coxeter(2);
  GraphOptions opt;
  opt.kmax = 5;
  const PairRecord& p = labeled_graph(*sys, opt).pair(sys->parse_set("a"), sys->parse_set("b"));
  REQUIRE(p.label.has_value());
  CHECK(p.label->kind == EdgeLabel::Kind::Infinity);
  CHECK(p.status == EdgeStatus::UnknownAtCutoff);
  CHECK(p.radius == 5);
}

TEST_CASE("threads do not change the result") {
  const auto sys = right_angled_path3();
  GraphOptions one{5, 6, 1}, four{5, 6, 4};
  for (unsigned k : {2u, 3u, 5u}) CHECK(graph_gk(*sys, k, one) == graph_gk(*sys, k, four));
  CHECK(emit(labeled_graph(*sys, one), GraphFormat::Json) == emit(labeled_graph(*sys, four), GraphFormat::Json));
}

TEST_CASE("emitters") {
  const auto sys = type_a(3);
  const std::string dot = emit(graph_gk(*sys, 4), GraphFormat::Dot);
  CHECK(dot.find("--") == std::string::npos);
  CHECK(dot.find("\"{s1,s3}\";") != std::string::npos);
  for (const CommGraph& g : {graph_g2(*sys), labeled_graph(*sys)}) {
    const std::string json = emit(g, GraphFormat::Json);
    const CommGraph back = parse_graph(json, *sys);
    CHECK(back == g);
    CHECK(emit(back, GraphFormat::Json) == json);
  }
  const auto inf = free_coxeter(3);
  const CommGraph gi = graph_gk(*inf, 3, GraphOptions{4, 8, 1});
  CHECK(parse_graph(emit(gi, GraphFormat::Json), *inf) == gi);
  CHECK_THROWS_AS(parse_graph("{}", *sys), ParseError);
}
