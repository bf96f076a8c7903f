// coxkit: command-line front end to the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error, 3 resource limit.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxkit/artin.hpp"
#include "coxkit/bruhat.hpp"
#include "coxkit/commgraph.hpp"
#include "coxkit/hecke.hpp"
#include "coxkit/io.hpp"
#include "coxkit/monoid_algebra.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/verify.hpp"

using namespace coxkit;

namespace {

struct Globals {
  std::size_t cutoff = 8;
  std::size_t cap = Limits{}.ball_cap;
  std::string format = "text";
  unsigned threads = 1;
};

Side parse_side(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw InvalidArgument("side must be 'left' or 'right'");
}

std::vector<std::string> matrix_lines(const IdealMatrix<std::int64_t>& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) line += ' ';
      line += std::to_string(m.at(i, j));
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxkit: Coxeter groups, projections, Coxeter monoid algebras and Hecke representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--cutoff", g.cutoff, "Witness search radius for infinite groups")->capture_default_str();
  app.add_option("--cap", g.cap, "Maximum number of elements in any enumeration")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::string system_path;
  std::vector<std::string> words;
  std::function<int(const CoxeterSystem&)> action;

  auto with_system = [&](CLI::App* cmd) {
    cmd->add_option("system", system_path, "System JSON file")->required();
    return cmd;
  };

  auto* show = with_system(app.add_subcommand("show", "Describe a Coxeter system"));
  show->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      if (g.format == "json") {
        std::cout << system_to_json(sys);
        return 0;
      }
      std::cout << "generators: " << sys.format_set(sys.all_generators()) << "\n";
      std::cout << "matrix:\n";
      for (const auto& row : sys.matrix().rows()) {
        std::string line;
        for (int m : row) line += (line.empty() ? "" : " ") + (m == CoxeterMatrix::kInfinity ? std::string("inf") : std::to_string(m));
        std::cout << "  " << line << "\n";
      }
      std::cout << "right-angled: " << (sys.right_angled() ? "yes" : "no") << "\n";
      if (sys.is_finite()) {
        std::cout << "order: " << sys.elements().size() << "\n";
        std::cout << "longest element: " << sys.format(sys.longest_element(sys.all_generators())) << "\n";
      } else {
        std::cout << "order: infinite\n";
      }
      return 0;
    };
  });

  auto* mult = with_system(app.add_subcommand("mult", "Product of two elements"));
  mult->add_option("words", words, "Two words")->required()->expected(2);
  mult->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << sys.format(sys.multiply(sys.parse_element(words[0]), sys.parse_element(words[1]))) << "\n";
      return 0;
    };
  });

  auto* inv = with_system(app.add_subcommand("inv", "Inverse of an element"));
  inv->add_option("word", words, "Word")->required()->expected(1);
  inv->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << sys.format(sys.inverse(sys.parse_element(words[0]))) << "\n";
      return 0;
    };
  });

  auto* bruhat = with_system(app.add_subcommand("bruhat", "Bruhat comparison u <= v"));
  bruhat->add_option("words", words, "u and v")->required()->expected(2);
  bruhat->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << (bruhat_leq(sys.parse_element(words[0]), sys.parse_element(words[1])) ? "true" : "false") << "\n";
      return 0;
    };
  });

  auto* interval_cmd = with_system(app.add_subcommand("interval", "Elements of the Bruhat interval [u, v]"));
  interval_cmd->add_option("words", words, "u and v")->required()->expected(2);
  interval_cmd->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      const Interval iv = interval(sys.parse_element(words[0]), sys.parse_element(words[1]));
      if (g.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < iv.elements.size(); ++i)
          std::cout << (i ? ", " : "") << '"' << sys.format(iv.elements[i]) << '"';
        std::cout << "]\n";
      } else {
        for (const Element& x : iv.elements) std::cout << sys.format(x) << "\n";
      }
      return 0;
    };
  });

  std::string set_j, set_i, side = "right";
  auto* proj_cmd = with_system(app.add_subcommand("proj", "Parabolic projection P^J (right) or Q^J (left)"));
  proj_cmd->add_option("word", words, "Word")->required()->expected(1);
  proj_cmd->add_option("--J", set_j, "Generator subset")->required();
  proj_cmd->add_option("--side", side, "left or right")->capture_default_str();
  proj_cmd->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << sys.format(proj(sys.parse_element(words[0]), sys.parse_set(set_j), parse_side(side))) << "\n";
      return 0;
    };
  });

  auto* commute = with_system(app.add_subcommand("commute", "Whether P^I and P^J commute"));
  commute->add_option("--I", set_i, "First subset")->required();
  commute->add_option("--J", set_j, "Second subset")->required();
  commute->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      const GeneratorSet I = sys.parse_set(set_i);
      const GeneratorSet J = sys.parse_set(set_j);
      if (commute_exact(sys, I, J)) {
        std::cout << "true\n";
        return 0;
      }
      std::cout << "false\n";
      if (auto w = find_noncommuting_witness(sys, I, J, g.cutoff)) std::cout << "witness: " << sys.format(*w) << "\n";
      return 0;
    };
  });

  auto* monoid = app.add_subcommand("monoid", "Coxeter monoid algebra");
  monoid->require_subcommand(1);
  auto* monoid_mul = with_system(monoid->add_subcommand("mul", "Product of two algebra elements"));
  monoid_mul->add_option("exprs", words, "Two expressions such as '2*P[s t] - P[e]'")->required()->expected(2);
  monoid_mul->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << format_terms(parse_alg_element(sys, words[0]) * parse_alg_element(sys, words[1]), "P") << "\n";
      return 0;
    };
  });

  std::string op_word, op_expr;
  std::size_t ball_radius = 0;
  auto* monoid_matrix = with_system(monoid->add_subcommand("matrix", "Matrix of an operator on a Bruhat ideal"));
  auto* opt_j = monoid_matrix->add_option("--J", set_j, "Projection P^J");
  auto* opt_w = monoid_matrix->add_option("--word", op_word, "Operator P^w");
  auto* opt_e = monoid_matrix->add_option("--expr", op_expr, "Operator given as an algebra expression");
  opt_j->excludes(opt_w)->excludes(opt_e);
  opt_w->excludes(opt_e);
  monoid_matrix->add_option("--ball", ball_radius, "Use ball(r) as the basis (default: whole finite group)");
  monoid_matrix->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      IntAlgElement op;
      if (!set_j.empty())
        op = proj_as_monoid(sys, sys.parse_set(set_j));
      else if (!op_word.empty())
        op = basis_element<std::int64_t>(sys.parse_element(op_word));
      else if (!op_expr.empty())
        op = parse_alg_element(sys, op_expr);
      else
        throw InvalidArgument("one of --J, --word, --expr is required");
      std::vector<Element> basis;
      if (ball_radius > 0)
        basis = sys.bruhat_ball(ball_radius);
      else if (sys.is_finite())
        basis = sys.elements();
      else
        throw InvalidArgument("infinite group: pass --ball");
      const auto m = matrix_realization(op, basis);
      if (g.format == "csv") {
        std::cout << matrix_csv(m);
      } else if (g.format == "json") {
        std::cout << "{\"basis\": [";
        for (std::size_t i = 0; i < basis.size(); ++i) std::cout << (i ? ", " : "") << '"' << sys.format(m.basis[i]) << '"';
        std::cout << "], \"rows\": [";
        for (std::size_t i = 0; i < m.dimension(); ++i) {
          std::cout << (i ? ", " : "") << "[";
          for (std::size_t j = 0; j < m.dimension(); ++j) std::cout << (j ? ", " : "") << m.at(i, j);
          std::cout << "]";
        }
        std::cout << "]}\n";
      } else {
        std::cout << "basis:";
        for (std::size_t i = 0; i < m.basis.size(); ++i) std::cout << (i ? ", " : " ") << sys.format(m.basis[i]);
        std::cout << "\n";
        for (const auto& line : matrix_lines(m)) std::cout << line << "\n";
      }
      return 0;
    };
  });

  unsigned k = 2, kmax = 8;
  auto graph_format = [&] {
    if (g.format == "json") return GraphFormat::Json;
    if (g.format == "dot" || g.format == "text") return GraphFormat::Dot;
    throw InvalidArgument("graphs are emitted as dot or json");
  };
  auto* graph = with_system(app.add_subcommand("graph", "The graph G_k on proper nonempty subsets"));
  graph->add_option("--k", k, "Length of the alternating products")->check(CLI::Range(2u, 1000u))->capture_default_str();
  graph->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      GraphOptions opt{g.cutoff, kmax, g.threads};
      std::cout << emit(graph_gk(sys, k, opt), graph_format());
      return 0;
    };
  });

  auto* lgraph = with_system(app.add_subcommand("labeled-graph", "The labeled graph G"));
  lgraph->add_option("--kmax", kmax, "Largest k tried for infinite parabolics")
      ->check(CLI::Range(3u, 1000u))
      ->capture_default_str();
  lgraph->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      GraphOptions opt{g.cutoff, kmax, g.threads};
      std::cout << emit(labeled_graph(sys, opt), graph_format());
      return 0;
    };
  });

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra");
  hecke->require_subcommand(1);
  auto* hecke_mul_cmd = with_system(hecke->add_subcommand("mul", "Product in the T-basis"));
  hecke_mul_cmd->add_option("exprs", words, "Two elements such as 'T[s t]' or a bare word")->required()->expected(2);
  hecke_mul_cmd->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << format_terms(hecke_mul(parse_hecke(sys, words[0]), parse_hecke(sys, words[1])), "T") << "\n";
      return 0;
    };
  });

  std::string x_text = "q", t_text;
  auto* hecke_image = with_system(hecke->add_subcommand("image", "Image of an Artin word in the monoid algebra"));
  hecke_image->add_option("word", words, "Artin word such as 'a^2 b^-1'")->required()->expected(1);
  hecke_image->add_option("--x", x_text, "q or -1")->capture_default_str();
  hecke_image->add_option("--t", t_text, "Also specialize at q = t");
  hecke_image->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      const SigmaParam x = parse_sigma_param(x_text);
      const ArtinWord w = raag_normal_form(sys, parse_artin(sys, words[0]));
      const ArtinImage img = artin_image(sys, w, x);
      std::cout << format_terms(img.image, "P") << "\n";
      if (!t_text.empty()) std::cout << format_terms(specialize(img.image, parse_rational(t_text)), "P") << "\n";
      return 0;
    };
  });

  auto* artin = app.add_subcommand("artin", "Right-angled Artin groups");
  artin->require_subcommand(1);
  auto* artin_nf = with_system(artin->add_subcommand("nf", "Normal form of an Artin word"));
  artin_nf->add_option("word", words, "Artin word")->required()->expected(1);
  artin_nf->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      std::cout << format_artin(sys, raag_normal_form(sys, parse_artin(sys, words[0]))) << "\n";
      return 0;
    };
  });

  std::size_t max_syllables = 3;
  int max_exp = 2;
  std::string report_format;
  t_text = "";
  auto* artin_scan = with_system(artin->add_subcommand("scan", "Injectivity scan over normal-form words"));
  artin_scan->add_option("--max-syllables", max_syllables)->capture_default_str();
  artin_scan->add_option("--max-exp", max_exp)->check(CLI::Range(0, 1000))->capture_default_str();
  artin_scan->add_option("--t", t_text, "Specialization point (not -1, 0, 1)")->required();
  artin_scan->add_option("--x", x_text, "q or -1")->capture_default_str();
  artin_scan->add_option("--report", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  artin_scan->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      const ScanReport rep =
          injectivity_scan(sys, max_syllables, max_exp, parse_rational(t_text), parse_sigma_param(x_text), g.threads);
      const std::string fmt = report_format.empty() ? g.format : report_format;
      std::cout << (fmt == "json" ? scan_report_json(sys, rep) : scan_report_text(sys, rep));
      return rep.ok() ? 0 : 1;
    };
  });

  std::string suite = "all";
  VerifyOptions vopt;
  auto* verify = with_system(app.add_subcommand("verify", "Run verification suites"));
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--radius", vopt.radius, "Ball radius used for infinite groups")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Seed for randomized checks")->capture_default_str();
  verify->callback([&] {
    action = [&](const CoxeterSystem& sys) {
      vopt.label = system_path;
      vopt.cutoff = g.cutoff;
      vopt.threads = g.threads;
      const VerificationReport rep = run_suite(sys, suite, vopt);
      std::cout << (g.format == "json" ? report_json(rep) : report_text(rep));
      std::cerr << "wall time: " << rep.wall_seconds << " s\n";
      return rep.ok() ? 0 : 1;
    };
  });

  std::ostringstream suites_help;
  for (const auto& n : suite_names()) suites_help << " " << n;
  verify->footer("Suites:" + suites_help.str() + " all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits limits;
    limits.ball_cap = g.cap;
    const SystemPtr sys = load_system(system_path, limits);
    return action(*sys);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 3;
  }
}
