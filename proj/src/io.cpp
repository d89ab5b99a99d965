#include "qgm/io.hpp"

#include <fstream>
#include <sstream>

namespace qgm {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

MultiGraph graph_from_lines(const std::vector<Line>& lines, size_t from,
                            size_t to) {
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  for (size_t i = from; i < to; ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "v") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected 'v <label>'");
      verts.push_back(line.tokens[1]);
    } else if (line.tokens[0] == "e") {
      if (line.tokens.size() != 4)
        throw ParseError(line.number, "expected 'e <label> <u> <w>'");
      edges.push_back({line.tokens[1], line.tokens[2], line.tokens[3]});
    } else {
      throw ParseError(line.number,
                       "unexpected '" + line.tokens[0] + "' in graph block");
    }
  }
  try {
    return MultiGraph::build(std::move(verts), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(lines.empty() ? 0 : lines[from].number, e.what());
  }
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
}

int parse_keyed_int(const Line& line, const std::string& tok,
                    const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError(line.number, "expected '" + key + "=<int>'");
  return parse_int(line, tok.substr(key.size() + 1));
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  return graph_from_lines(lines, 0, lines.size());
}

std::string print_graph(const MultiGraph& g) {
  std::ostringstream out;
  for (const std::string& v : g.vertices()) out << "v " << v << "\n";
  for (const Edge& e : g.edges())
    out << "e " << e.label << " " << e.u << " " << e.v << "\n";
  return out.str();
}

MatroidPtr parse_matroid(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty matroid file");
  const Line& head = lines[0];
  const std::string& kind = head.tokens[0];

  if (kind == "uniform") {
    if (head.tokens.size() != 3)
      throw ParseError(head.number, "expected 'uniform <r> <n>'");
    int r = parse_int(head, head.tokens[1]);
    int n = parse_int(head, head.tokens[2]);
    if (lines.size() != 1)
      throw ParseError(lines[1].number, "unexpected content after 'uniform'");
    return std::make_shared<UniformMatroid>(r, n);
  }

  if (kind == "graphic") {
    if (head.tokens.size() != 1)
      throw ParseError(head.number, "expected bare 'graphic' header");
    return std::make_shared<GraphicMatroid>(
        graph_from_lines(lines, 1, lines.size()));
  }

  if (kind == "explicit") {
    if (head.tokens.size() != 2)
      throw ParseError(head.number, "expected 'explicit <n>'");
    int n = parse_int(head, head.tokens[1]);
    std::set<std::string> ground;
    bool ground_given = false;
    std::vector<std::set<std::string>> bases;
    for (size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      if (line.tokens[0] == "ground") {
        ground_given = true;
        ground.insert(line.tokens.begin() + 1, line.tokens.end());
      } else if (line.tokens[0] == "basis") {
        bases.emplace_back(line.tokens.begin() + 1, line.tokens.end());
      } else {
        throw ParseError(line.number, "expected 'ground' or 'basis' line");
      }
    }
    if (!ground_given)
      for (const std::set<std::string>& b : bases)
        ground.insert(b.begin(), b.end());
    if (static_cast<int>(ground.size()) != n)
      throw ParseError(head.number,
                       "ground set has " + std::to_string(ground.size()) +
                           " elements, header says " + std::to_string(n));
    try {
      return ExplicitMatroid::from_bases({ground.begin(), ground.end()},
                                         bases);
    } catch (const Error& e) {
      throw ParseError(head.number, e.what());
    }
  }

  if (kind == "linear") {
    // Delegate to parse_matrix on the same text.
    std::ostringstream text;
    text << "linear";
    for (size_t t = 1; t < head.tokens.size(); ++t) text << " " << head.tokens[t];
    text << "\n";
    for (size_t i = 1; i < lines.size(); ++i) {
      for (size_t t = 0; t < lines[i].tokens.size(); ++t)
        text << (t ? " " : "") << lines[i].tokens[t];
      text << "\n";
    }
    std::istringstream again(text.str());
    return std::make_shared<LinearMatroid>(parse_matrix(again));
  }

  throw ParseError(head.number, "unknown matroid header '" + kind + "'");
}

std::string print_matroid_explicit(const Matroid& m) {
  require_enumerable(m, "print_matroid_explicit");
  int r = m.rank();
  std::ostringstream out;
  out << "explicit " << m.size() << "\n";
  out << "ground";
  for (const std::string& e : m.elements()) out << " " << e;
  out << "\n";
  Mask full = m.full_mask();
  for (Mask x = 0;; ++x) {
    if (popcount(x) == r && m.independent(x)) {
      out << "basis";
      for (const std::string& e : m.labels_of(x)) out << " " << e;
      out << "\n";
    }
    if (x == full) break;
  }
  return out.str();
}

PrimeFieldMatrix parse_matrix(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty matrix file");
  const Line& head = lines[0];
  if (head.tokens[0] != "linear" || head.tokens.size() != 3)
    throw ParseError(head.number, "expected 'linear p=<p> rows=<r>'");
  int p = parse_keyed_int(head, head.tokens[1], "p");
  int rows = parse_keyed_int(head, head.tokens[2], "rows");
  if (rows < 0) throw ParseError(head.number, "negative row count");

  std::vector<std::string> col_labels;
  std::vector<std::vector<std::uint8_t>> cols;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "col")
      throw ParseError(line.number, "expected 'col <label> <values...>'");
    if (static_cast<int>(line.tokens.size()) != rows + 2)
      throw ParseError(line.number,
                       "expected " + std::to_string(rows) + " values");
    col_labels.push_back(line.tokens[1]);
    std::vector<std::uint8_t> col;
    for (int r = 0; r < rows; ++r) {
      int v = parse_int(line, line.tokens[2 + r]);
      if (v < 0 || v >= p)
        throw ParseError(line.number, "entry out of range for GF(p)");
      col.push_back(static_cast<std::uint8_t>(v));
    }
    cols.push_back(std::move(col));
  }

  std::vector<std::string> row_labels;
  for (int r = 1; r <= rows; ++r) row_labels.push_back("r" + std::to_string(r));
  std::vector<std::uint8_t> entries(rows * cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) entries[r * cols.size() + c] = cols[c][r];
  try {
    return PrimeFieldMatrix::build(p, std::move(row_labels),
                                   std::move(col_labels), std::move(entries));
  } catch (const Error& e) {
    throw ParseError(head.number, e.what());
  }
}

std::string print_matrix(const PrimeFieldMatrix& a) {
  std::ostringstream out;
  out << "linear p=" << a.p() << " rows=" << a.rows() << "\n";
  for (int c = 0; c < a.cols(); ++c) {
    out << "col " << a.col_labels()[c];
    for (int r = 0; r < a.rows(); ++r) out << " " << int(a.at(r, c));
    out << "\n";
  }
  return out.str();
}

BiasedGraph parse_biased(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  std::vector<Line> graph_lines;
  std::vector<std::set<std::string>> balanced;
  for (const Line& line : lines) {
    if (line.tokens[0] == "balanced")
      balanced.emplace_back(line.tokens.begin() + 1, line.tokens.end());
    else
      graph_lines.push_back(line);
  }
  MultiGraph g = graph_from_lines(graph_lines, 0, graph_lines.size());
  try {
    return BiasedGraph::build(std::move(g), std::move(balanced));
  } catch (const Error& e) {
    throw ParseError(lines.empty() ? 0 : lines.back().number, e.what());
  }
}

std::string print_biased(const BiasedGraph& bg) {
  std::ostringstream out;
  out << print_graph(bg.graph());
  for (const std::set<std::string>& c : bg.balanced()) {
    out << "balanced";
    for (const std::string& e : c) out << " " << e;
    out << "\n";
  }
  return out.str();
}

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

MultiGraph parse_graph_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_graph(in);
}

MatroidPtr parse_matroid_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_matroid(in);
}

PrimeFieldMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_matrix(in);
}

BiasedGraph parse_biased_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_biased(in);
}

}  // namespace qgm
