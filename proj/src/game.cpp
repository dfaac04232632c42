#include "synq/game.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace synq {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw Error("graph: vertex count must be nonnegative");
  Graph g;
  g.n = n;
  for (auto [u, v] : edges) {
    if (u == v)
      throw Error("graph: loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("graph: edge endpoint out of range: " + std::to_string(u) +
                  " " + std::to_string(v));
    if (u > v) std::swap(u, v);
    if (!g.edges.insert({u, v}).second)
      throw Error("graph: duplicate edge " + std::to_string(u) + " " +
                  std::to_string(v));
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 2) throw Error("cycle_graph: need at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  if (n > 2) edges.push_back({n - 1, 0});
  return make_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return make_graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return make_graph(5 + 5, edges);
}

Graph random_graph(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1ull) edges.push_back({u, v});
  return make_graph(n, edges);
}

namespace {

void insert_closed(std::set<RuleTuple>& forbidden, const RuleTuple& t) {
  forbidden.insert(t);
  forbidden.insert({t[1], t[0], t[3], t[2]});  // adjoint of the relation
}

void insert_sync_forced(GameSpec& spec) {
  for (int x = 0; x < spec.inputs; ++x)
    for (int a = 0; a < spec.outputs; ++a)
      for (int b = 0; b < spec.outputs; ++b)
        if (a != b) spec.forbidden.insert({a, b, x, x});
}

}  // namespace

GameSpec make_game_spec(int inputs, int outputs,
                        const std::vector<RuleTuple>& forbidden_tuples) {
  if (inputs < 1 || outputs < 1)
    throw Error("game: input and output sets must be nonempty");
  GameSpec spec;
  spec.inputs = inputs;
  spec.outputs = outputs;
  for (const RuleTuple& t : forbidden_tuples) {
    auto [a, b, x, y] = t;
    if (a < 0 || b < 0 || a >= outputs || b >= outputs || x < 0 || y < 0 ||
        x >= inputs || y >= inputs)
      throw Error("game: forbidden tuple out of range: " + std::to_string(a) +
                  " " + std::to_string(b) + " " + std::to_string(x) + " " +
                  std::to_string(y));
    if (a == b && x == y)
      throw Error(
          "game: cannot forbid diagonal tuple (" + std::to_string(a) + "," +
          std::to_string(b) + "," + std::to_string(x) + "," +
          std::to_string(y) + "): synchronicity requires lambda(a,a,x,x)=1");
    insert_closed(spec.forbidden, t);
  }
  insert_sync_forced(spec);
  return spec;
}

GameSpec make_easiest(int inputs, int outputs) {
  return make_game_spec(inputs, outputs, {});
}

GameSpec make_graph_game(const Graph& g) {
  GameSpec spec;
  spec.inputs = g.n;
  spec.outputs = g.n;
  if (g.n < 1) throw Error("game: graph game needs at least one vertex");
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(x, y)) continue;
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
          if (!g.has_edge(a, b)) spec.forbidden.insert({a, b, x, y});
    }
  insert_sync_forced(spec);
  return spec;
}

std::optional<StarWitness> check_star(const GameSpec& spec) {
  if (spec.inputs != spec.outputs)
    throw Error("check_star requires |O| = |I|");
  const int n = spec.inputs;
  // forbidden is sorted, so scanning it and the (r,s) pairs in order yields
  // the lexicographically smallest witness first.
  for (const RuleTuple& t : spec.forbidden) {
    auto [i, j, k, l] = t;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        if (spec.allows(i, j, r, s) && spec.allows(r, s, k, l))
          return StarWitness{i, j, k, l, r, s};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> check_counit_condition(
    const GameSpec& spec) {
  if (spec.inputs != spec.outputs)
    throw Error("check_counit_condition requires |O| = |I|");
  for (int i = 0; i < spec.inputs; ++i)
    for (int j = 0; j < spec.inputs; ++j)
      if (!spec.allows(i, j, i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::vector<SyncViolation> validate_synchronous(const GameSpec& spec) {
  std::vector<SyncViolation> out;
  for (int x = 0; x < spec.inputs; ++x)
    for (int a = 0; a < spec.outputs; ++a)
      for (int b = 0; b < spec.outputs; ++b) {
        RuleTuple t{a, b, x, x};
        bool in = spec.forbidden.count(t) != 0;
        if (a == b && in)
          out.push_back({SyncViolation::Kind::forbidden_diagonal, t});
        if (a != b && !in)
          out.push_back({SyncViolation::Kind::missing_forced, t});
      }
  return out;
}

std::string to_string(const StarWitness& w) {
  std::ostringstream os;
  os << "(" << w.i << "," << w.j << "," << w.k << "," << w.l << "," << w.r
     << "," << w.s << ")";
  return os.str();
}

std::string to_string(const SyncViolation& v) {
  std::ostringstream os;
  const auto& t = v.tuple;
  if (v.kind == SyncViolation::Kind::missing_forced)
    os << "missing (" << t[0] << "," << t[1] << "," << t[2] << "," << t[3]
       << ")";
  else
    os << "diagonal allowed pair forbidden (" << t[0] << "," << t[1] << ","
       << t[2] << "," << t[3] << ")";
  return os.str();
}

}  // namespace synq
