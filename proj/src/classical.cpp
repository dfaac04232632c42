#include "synq/classical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace synq {

bool satisfies_rules(const GameSpec& spec, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != spec.inputs) return false;
  for (int x = 0; x < spec.inputs; ++x) {
    if (f[static_cast<size_t>(x)] < 0 ||
        f[static_cast<size_t>(x)] >= spec.outputs)
      return false;
    for (int y = 0; y < spec.inputs; ++y)
      if (!spec.allows(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)],
                       x, y))
        return false;
  }
  return true;
}

namespace {

void backtrack(const GameSpec& spec, bool invertible, std::vector<int>& f,
               std::vector<bool>& used, std::vector<ClassicalPoint>& out) {
  const int x = static_cast<int>(f.size());
  if (x == spec.inputs) {
    out.push_back({f, invertible});
    return;
  }
  for (int a = 0; a < spec.outputs; ++a) {
    if (invertible && used[static_cast<size_t>(a)]) continue;
    bool ok = spec.allows(a, a, x, x);
    for (int y = 0; ok && y < x; ++y) {
      int b = f[static_cast<size_t>(y)];
      ok = spec.allows(a, b, x, y) && spec.allows(b, a, y, x);
    }
    if (!ok) continue;
    f.push_back(a);
    if (invertible) used[static_cast<size_t>(a)] = true;
    backtrack(spec, invertible, f, used, out);
    if (invertible) used[static_cast<size_t>(a)] = false;
    f.pop_back();
  }
}

}  // namespace

std::vector<ClassicalPoint> enumerate_classical_points(const GameSpec& spec,
                                                       bool invertible) {
  if (invertible && spec.inputs != spec.outputs)
    throw Error("classical: invertible points require |O| = |I|");
  std::vector<ClassicalPoint> out;
  std::vector<int> f;
  std::vector<bool> used(static_cast<size_t>(spec.outputs), false);
  backtrack(spec, invertible, f, used, out);
  // index-order backtracking emits maps in lexicographic order already
  return out;
}

ClassicalPoint convolve(const GameSpec& spec, const ClassicalPoint& f,
                        const ClassicalPoint& g) {
  if (static_cast<int>(f.map.size()) != spec.inputs ||
      static_cast<int>(g.map.size()) != spec.inputs)
    throw Error("classical: point size mismatch");
  ClassicalPoint h;
  h.invertible = f.invertible && g.invertible;
  h.map.reserve(f.map.size());
  // (chi_f * chi_g)(p[i,j]) = sum_k chi_f(p[i,k]) chi_g(p[k,j]) = [g(f(i))=j]
  for (int i = 0; i < spec.inputs; ++i)
    h.map.push_back(g(f(i)));
  if (!satisfies_rules(spec, h.map))
    throw Error(
        "classical: convolution left the point set (condition (*) must be "
        "failing): " +
        render_point(h));
  return h;
}

CayleyReport cayley_table(const GameSpec& spec,
                          const std::vector<ClassicalPoint>& points) {
  CayleyReport rep;
  const int n = static_cast<int>(points.size());
  rep.table.assign(static_cast<size_t>(n), std::vector<int>(n, -1));
  rep.closed = true;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[points[static_cast<size_t>(i)].map] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ClassicalPoint h = convolve(spec, points[static_cast<size_t>(i)],
                                  points[static_cast<size_t>(j)]);
      auto it = index.find(h.map);
      if (it == index.end())
        rep.closed = false;
      else
        rep.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
    }

  // identity of convolution = the identity map, when present
  std::vector<int> id_map(static_cast<size_t>(spec.inputs));
  for (int i = 0; i < spec.inputs; ++i) id_map[static_cast<size_t>(i)] = i;
  auto it = index.find(id_map);
  rep.identity_index = (it == index.end()) ? -1 : it->second;

  rep.is_group = rep.closed && rep.identity_index >= 0;
  if (rep.is_group)
    for (int i = 0; i < n && rep.is_group; ++i) {
      bool has_inverse = false;
      for (int j = 0; j < n; ++j)
        if (rep.table[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                rep.identity_index &&
            rep.table[static_cast<size_t>(j)][static_cast<size_t>(i)] ==
                rep.identity_index)
          has_inverse = true;
      rep.is_group = has_inverse;
    }
  return rep;
}

MatrixModel point_to_model(const GameSpec& spec, const ClassicalPoint& f) {
  if (!satisfies_rules(spec, f.map))
    throw Error("classical: map is not a point of the game");
  MatrixModel m = MatrixModel::zeros(spec.inputs, spec.outputs, 1);
  for (int x = 0; x < spec.inputs; ++x)
    for (int a = 0; a < spec.outputs; ++a)
      m.at(x, a)(0, 0) = (f(x) == a) ? 1.0 : 0.0;
  return m;
}

std::string render_point(const ClassicalPoint& p) {
  std::ostringstream os;
  os << "f:";
  for (size_t x = 0; x < p.map.size(); ++x)
    os << " " << x << "->" << p.map[x];
  return os.str();
}

ClassicalPoint parse_point(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head != "f:") throw Error("classical: point text must start with 'f:'");
  ClassicalPoint p;
  std::string tok;
  while (is >> tok) {
    size_t arrow = tok.find("->");
    if (arrow == std::string::npos)
      throw Error("classical: bad point entry: " + tok);
    int x = std::stoi(tok.substr(0, arrow));
    int a = std::stoi(tok.substr(arrow + 2));
    if (x != static_cast<int>(p.map.size()))
      throw Error("classical: point entries out of order");
    p.map.push_back(a);
  }
  return p;
}

}  // namespace synq
