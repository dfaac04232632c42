#include "synq/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace synq {

ParseError::ParseError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Splits into lines, stripping '#' comments and trailing whitespace;
// returns (line number, content) for non-empty lines.
std::vector<std::pair<int, std::string>> logical_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    line.erase(end + 1);
    out.push_back({no, line});
  }
  return out;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  auto head = tokens_of(lines[0].second);
  if (head.size() != 2)
    throw ParseError(lines[0].first, "expected header 'n m'");
  int n = parse_int(head[0], lines[0].first);
  int m = parse_int(head[1], lines[0].first);
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError(lines[0].first,
                     "header announces " + std::to_string(m) + " edges, file has " +
                         std::to_string(lines.size() - 1));
  Graph g;
  try {
    g = make_graph(n, {});
  } catch (const Error& e) {
    throw ParseError(lines[0].first, e.what());
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].second);
    if (toks.size() != 2)
      throw ParseError(lines[i].first, "expected an edge 'u v'");
    int u = parse_int(toks[0], lines[i].first);
    int v = parse_int(toks[1], lines[i].first);
    edges.push_back({u, v});
    try {
      g = make_graph(n, edges);
    } catch (const Error& e) {
      throw ParseError(lines[i].first, e.what());
    }
  }
  return g;
}

std::string render_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n << " " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) os << u << " " << v << "\n";
  return os.str();
}

GameSpec parse_game(const std::string& text) {
  int inputs = -1, outputs = -1;
  std::vector<RuleTuple> forbidden;
  for (auto& [no, line] : logical_lines(text)) {
    auto toks = tokens_of(line);
    if (toks[0] == "inputs" && toks.size() == 2) {
      inputs = parse_int(toks[1], no);
      if (inputs < 1) throw ParseError(no, "inputs must be positive");
    } else if (toks[0] == "outputs" && toks.size() == 2) {
      outputs = parse_int(toks[1], no);
      if (outputs < 1) throw ParseError(no, "outputs must be positive");
    } else if (toks[0] == "forbid" && toks.size() == 5) {
      if (inputs < 0 || outputs < 0)
        throw ParseError(no, "inputs/outputs must precede forbid lines");
      RuleTuple t{parse_int(toks[1], no), parse_int(toks[2], no),
                  parse_int(toks[3], no), parse_int(toks[4], no)};
      if (t[0] < 0 || t[1] < 0 || t[0] >= outputs || t[1] >= outputs ||
          t[2] < 0 || t[3] < 0 || t[2] >= inputs || t[3] >= inputs)
        throw ParseError(no, "forbidden tuple index out of range");
      if (t[0] == t[1] && t[2] == t[3])
        throw ParseError(
            no, "forbidding (" + std::to_string(t[0]) + "," +
                    std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
                    std::to_string(t[3]) +
                    ") violates synchronicity (lambda(a,a,x,x) = 1)");
      forbidden.push_back(t);
    } else {
      throw ParseError(no, "unrecognized game line: '" + line + "'");
    }
  }
  if (inputs < 0) throw ParseError(1, "missing 'inputs N'");
  if (outputs < 0) throw ParseError(1, "missing 'outputs M'");
  return make_game_spec(inputs, outputs, forbidden);
}

std::string render_game(const GameSpec& spec) {
  std::ostringstream os;
  os << "inputs " << spec.inputs << "\n";
  os << "outputs " << spec.outputs << "\n";
  for (const RuleTuple& t : spec.forbidden)
    os << "forbid " << t[0] << " " << t[1] << " " << t[2] << " " << t[3]
       << "\n";
  return os.str();
}

MatrixModel parse_model(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "empty model file");
  auto head = tokens_of(lines[0].second);
  if (head.size() != 2 || head[0] != "dim")
    throw ParseError(lines[0].first, "expected header 'dim d'");
  int dim = parse_int(head[1], lines[0].first);
  if (dim < 1) throw ParseError(lines[0].first, "dim must be positive");

  std::map<std::pair<int, int>, CMatrix> blocks;
  size_t i = 1;
  int max_x = -1, max_a = -1;
  while (i < lines.size()) {
    auto toks = tokens_of(lines[i].second);
    if (toks.size() != 3 || toks[0] != "gen")
      throw ParseError(lines[i].first, "expected 'gen x a'");
    int x = parse_int(toks[1], lines[i].first);
    int a = parse_int(toks[2], lines[i].first);
    if (x < 0 || a < 0)
      throw ParseError(lines[i].first, "generator indices must be >= 0");
    if (blocks.count({x, a}))
      throw ParseError(lines[i].first, "duplicate generator block");
    ++i;
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r, ++i) {
      if (i >= lines.size())
        throw ParseError(lines.back().first, "truncated generator block");
      auto row = tokens_of(lines[i].second);
      if (static_cast<int>(row.size()) != dim)
        throw ParseError(lines[i].first,
                         "expected " + std::to_string(dim) + " entries");
      for (int ccol = 0; ccol < dim; ++ccol) {
        const std::string& cell = row[static_cast<size_t>(ccol)];
        size_t comma = cell.find(',');
        if (comma == std::string::npos)
          throw ParseError(lines[i].first, "entry must be 're,im'");
        try {
          m(r, ccol) = std::complex<double>(std::stod(cell.substr(0, comma)),
                                            std::stod(cell.substr(comma + 1)));
        } catch (const std::exception&) {
          throw ParseError(lines[i].first, "bad complex entry '" + cell + "'");
        }
      }
    }
    blocks[{x, a}] = std::move(m);
    max_x = std::max(max_x, x);
    max_a = std::max(max_a, a);
  }
  if (blocks.empty()) throw ParseError(1, "model has no generator blocks");
  MatrixModel model = MatrixModel::zeros(max_x + 1, max_a + 1, dim);
  for (int x = 0; x <= max_x; ++x)
    for (int a = 0; a <= max_a; ++a) {
      auto it = blocks.find({x, a});
      if (it == blocks.end())
        throw ParseError(lines.back().first,
                         "missing generator block for (" + std::to_string(x) +
                             "," + std::to_string(a) + ")");
      model.at(x, a) = it->second;
    }
  return model;
}

std::string render_model(const MatrixModel& m) {
  std::ostringstream os;
  os << "dim " << m.dim << "\n";
  for (int x = 0; x < m.inputs; ++x)
    for (int a = 0; a < m.outputs; ++a) {
      os << "gen " << x << " " << a << "\n";
      const CMatrix& q = m.at(x, a);
      for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
          if (c) os << " ";
          os << format_double(q(r, c).real()) << ","
             << format_double(q(r, c).imag());
        }
        os << "\n";
      }
    }
  return os.str();
}

Presentation parse_presentation(const std::string& text) {
  int inputs = -1, outputs = -1;
  std::optional<Variant> variant;
  std::vector<RuleTuple> orth;
  std::vector<std::pair<std::string, std::string>> relation_lines;
  for (auto& [no, line] : logical_lines(text)) {
    auto toks = tokens_of(line);
    const std::string& key = toks[0];
    if (key == "inputs" && toks.size() == 2) {
      inputs = parse_int(toks[1], no);
    } else if (key == "outputs" && toks.size() == 2) {
      outputs = parse_int(toks[1], no);
    } else if (key == "variant" && toks.size() == 2) {
      if (toks[1] == "game")
        variant = Variant::game;
      else if (toks[1] == "bistochastic")
        variant = Variant::bistochastic;
      else
        throw ParseError(no, "variant must be 'game' or 'bistochastic'");
    } else if (key == "PROJ" || key == "STAR" || key == "ROWSUM" ||
               key == "COLSUM") {
      if (toks.size() < 2) throw ParseError(no, key + " line has no element");
      std::string payload = line.substr(line.find(' ') + 1);
      try {
        parse_element(payload);
      } catch (const Error& e) {
        throw ParseError(no, e.what());
      }
      relation_lines.push_back({key, payload});
    } else if (key == "ORTH") {
      if (toks.size() < 6)
        throw ParseError(no, "ORTH needs 'a b x y <element>'");
      RuleTuple t{parse_int(toks[1], no), parse_int(toks[2], no),
                  parse_int(toks[3], no), parse_int(toks[4], no)};
      orth.push_back(t);
    } else {
      throw ParseError(no, "unrecognized presentation line: '" + line + "'");
    }
  }
  if (inputs < 0 || outputs < 0 || !variant)
    throw ParseError(1, "presentation header incomplete");
  Presentation p;
  p.inputs = inputs;
  p.outputs = outputs;
  p.variant = *variant;
  p.orthogonality = std::move(orth);
  const size_t gens = static_cast<size_t>(p.inputs) * p.outputs;
  size_t proj = 0, star = 0, rowsum = 0, colsum = 0;
  for (auto& [key, payload] : relation_lines) {
    if (key == "PROJ") ++proj;
    if (key == "STAR") ++star;
    if (key == "ROWSUM") ++rowsum;
    if (key == "COLSUM") ++colsum;
  }
  size_t want_colsum =
      p.variant == Variant::bistochastic ? static_cast<size_t>(p.outputs) : 0;
  if (proj != gens || star != gens ||
      rowsum != static_cast<size_t>(p.inputs) || colsum != want_colsum)
    throw ParseError(1, "presentation relation families are incomplete");
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "inputs " << p.inputs << "\n";
  os << "outputs " << p.outputs << "\n";
  os << "variant "
     << (p.variant == Variant::bistochastic ? "bistochastic" : "game") << "\n";
  for (const NCElement& e : p.projection_relations())
    os << "PROJ " << render_element(e) << "\n";
  for (const Generator& g : p.self_adjoint_family())
    os << "STAR " << render_element(NCElement::generator(g)) << "\n";
  for (const NCElement& e : p.row_sum_relations())
    os << "ROWSUM " << render_element(e) << "\n";
  for (const NCElement& e : p.column_sum_relations())
    os << "COLSUM " << render_element(e) << "\n";
  for (size_t i = 0; i < p.orthogonality.size(); ++i) {
    const RuleTuple& t = p.orthogonality[i];
    os << "ORTH " << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << " "
       << render_element(p.orthogonality_relations()[i]) << "\n";
  }
  return os.str();
}

std::string render_points(const std::vector<ClassicalPoint>& points) {
  std::ostringstream os;
  for (const ClassicalPoint& p : points) os << render_point(p) << "\n";
  return os.str();
}

std::string render_cayley_csv(const CayleyReport& report) {
  std::ostringstream os;
  for (const auto& row : report.table) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j];
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write file: " + path);
  os << content;
  if (!os) throw Error("write failed: " + path);
}

}  // namespace synq
