#include "qgm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgm/decompose.hpp"
#include "qgm/io.hpp"
#include "qgm/lemmas.hpp"
#include "qgm/oracle.hpp"

namespace qgm {

namespace {

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

const char* tag_name(CircuitTag tag) {
  switch (tag) {
    case CircuitTag::kBalancedCycle:
      return "balanced-cycle";
    case CircuitTag::kConnectedThetaLike:
      return "connected-theta-like";
    case CircuitTag::kDisjointUnbalancedCycles:
      return "disjoint-unbalanced-cycles";
  }
  return "?";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"quasi-graphic matroid framework toolkit"};
  app.require_subcommand(1);

  std::string graph_path, matroid_path, biased_path, matrix_path;
  std::string out_path, out_graph, out_matroid, out_prefix, manifest_path;
  std::vector<std::string> deletions, contractions;
  bool weak_only = false;
  int max_vertices = 4;
  int max_edges = 7;
  std::uint64_t seed = CorpusOptions{}.seed;

  CLI::App* verify = app.add_subcommand("verify", "check framework conditions");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--matroid", matroid_path)->required();
  verify->add_flag("--weak", weak_only, "check conditions (1)-(3) only");

  CLI::App* certify = app.add_subcommand(
      "certify", "certificate check for a 3-connected matroid");
  certify->add_option("--graph", graph_path)->required();
  certify->add_option("--matroid", matroid_path)->required();

  CLI::App* classify = app.add_subcommand(
      "classify-circuits", "classify every circuit of the matroid");
  classify->add_option("--graph", graph_path)->required();
  classify->add_option("--matroid", matroid_path)->required();

  CLI::App* cfm = app.add_subcommand("construct-fm",
                                     "frame matroid of a biased graph");
  cfm->add_option("--biased", biased_path)->required();
  cfm->add_option("--out", out_path);

  CLI::App* clm = app.add_subcommand("construct-lm",
                                     "lift matroid of a biased graph");
  clm->add_option("--biased", biased_path)->required();
  clm->add_option("--out", out_path);

  CLI::App* minor_cmd = app.add_subcommand(
      "minor", "delete/contract framework pair elements");
  minor_cmd->add_option("--graph", graph_path)->required();
  minor_cmd->add_option("--matroid", matroid_path)->required();
  minor_cmd->add_option("--delete", deletions, "edge to delete");
  minor_cmd->add_option("--contract", contractions, "edge to contract");
  minor_cmd->add_option("--out-graph", out_graph);
  minor_cmd->add_option("--out-matroid", out_matroid);

  CLI::App* decomp = app.add_subcommand(
      "decompose", "frame-or-lift decomposition of a matrix with a strong "
                   "framework");
  decomp->add_option("--matrix", matrix_path)->required();
  decomp->add_option("--graph", graph_path)->required();
  decomp->add_option("--out", out_path);

  CLI::App* search = app.add_subcommand("search-framework",
                                        "exhaustive framework search");
  search->add_option("--matroid", matroid_path)->required();
  search->add_option("--max-vertices", max_vertices)->required();
  search->add_option("--out-prefix", out_prefix);

  CLI::App* lemmas_cmd = app.add_subcommand(
      "check-lemmas", "run the structural lemma suite over the corpus");
  lemmas_cmd->add_option("--max-vertices", max_vertices);
  lemmas_cmd->add_option("--max-edges", max_edges);
  lemmas_cmd->add_option("--seed", seed);
  lemmas_cmd->add_option("--manifest", manifest_path,
                         "write the corpus manifest here");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      MultiGraph g = parse_graph_file(graph_path);
      MatroidPtr m = parse_matroid_file(matroid_path);
      VerifyReport rep =
          weak_only ? is_weak_framework(g, *m) : is_framework(g, *m);
      if (rep.ok)
        out << "OK " << (weak_only ? "weak-framework" : "framework") << "\n";
      else
        out << rep.to_string() << "\n";
      return rep.ok ? 0 : 1;
    }

    if (certify->parsed()) {
      MultiGraph g = parse_graph_file(graph_path);
      MatroidPtr m = parse_matroid_file(matroid_path);
      VerifyReport rep = certify_quasi_graphic(g, *m);
      if (rep.ok)
        out << "OK certified quasi-graphic\n";
      else
        out << rep.to_string() << "\n";
      return rep.ok ? 0 : 1;
    }

    if (classify->parsed()) {
      MultiGraph g = parse_graph_file(graph_path);
      MatroidPtr m = parse_matroid_file(matroid_path);
      FrameworkPair p{g, m};
      for (Mask c : circuits(*m)) {
        CircuitClass cls = classify_circuit(p, m->labels_of(c));
        out << tag_name(cls.tag);
        for (const std::string& e : m->labels_of(c)) out << " " << e;
        out << "\n";
      }
      return 0;
    }

    if (cfm->parsed() || clm->parsed()) {
      BiasedGraph bg = parse_biased_file(biased_path);
      MatroidPtr m = cfm->parsed() ? fm_matroid(bg) : lm_matroid(bg);
      write_text(out_path, print_matroid_explicit(*m), out);
      return 0;
    }

    if (minor_cmd->parsed()) {
      FrameworkPair p{parse_graph_file(graph_path),
                      parse_matroid_file(matroid_path)};
      VerifyReport pre = is_framework(p.graph, *p.matroid);
      if (!pre.ok) {
        out << pre.to_string() << "\n";
        return 1;
      }
      for (const std::string& e : deletions)
        p = framework_minor(p, MinorOp::kDelete, e);
      for (const std::string& e : contractions)
        p = framework_minor(p, MinorOp::kContract, e);
      write_text(out_graph, print_graph(p.graph), out);
      write_text(out_matroid, print_matroid_explicit(*p.matroid), out);
      out << "OK framework\n";
      return 0;
    }

    if (decomp->parsed()) {
      PrimeFieldMatrix a = parse_matrix_file(matrix_path);
      MultiGraph g = parse_graph_file(graph_path);
      Decomposition d = frame_or_lift_decomposition(a, g);
      out << (d.tag == DecompositionTag::kFrame ? "FRAME" : "LIFT") << "\n";
      write_text(out_path, print_matrix(d.witness), out);
      return 0;
    }

    if (search->parsed()) {
      MatroidPtr m = parse_matroid_file(matroid_path);
      std::vector<MultiGraph> found = find_frameworks(*m, max_vertices);
      out << "found " << found.size() << " framework(s)\n";
      for (size_t i = 0; i < found.size(); ++i) {
        if (out_prefix.empty()) {
          out << "--\n" << print_graph(found[i]);
        } else {
          std::string path = out_prefix + std::to_string(i + 1) + ".g";
          write_text(path, print_graph(found[i]), out);
          out << path << "\n";
        }
      }
      return found.empty() ? 1 : 0;
    }

    if (lemmas_cmd->parsed()) {
      CorpusOptions opt;
      opt.max_vertices = max_vertices;
      opt.max_edges = max_edges;
      opt.seed = seed;
      std::vector<CorpusPair> frameworks = framework_corpus(opt);
      std::vector<CorpusPair> weak = weak_only_corpus(opt);
      weak.insert(weak.end(), frameworks.begin(), frameworks.end());
      if (!manifest_path.empty()) {
        std::ostringstream manifest;
        manifest << "seed " << opt.seed << " max-vertices " << opt.max_vertices
                 << " max-edges " << opt.max_edges << "\n";
        for (const CorpusPair& cp : weak) manifest << "pair " << cp.origin
                                                   << "\n";
        write_text(manifest_path, manifest.str(), out);
      }
      out << "corpus: " << weak.size() << " weak-framework pairs, "
          << frameworks.size() << " framework pairs (seed " << opt.seed
          << ")\n";
      LemmaSuite suite = check_lemmas(weak, frameworks);
      for (const LemmaResult& r : suite.results) out << r.to_string() << "\n";
      return suite.all_ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace qgm
