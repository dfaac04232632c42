// Synchronous games: rule tensors, the easiest game, graph endomorphism
// games, and the finite combinatorial conditions ((*), synchronicity,
// counit condition) that drive everything else in the toolkit.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite undirected loop-free graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized u < v

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) != 0;
  }
  bool operator==(const Graph&) const = default;
};

/// Validating constructor; throws synq::Error on loops, range or duplicates.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
/// Erdos-Renyi G(n, 1/2) from a seeded mt19937_64.
Graph random_graph(int n, unsigned long long seed);

/// A forbidden tuple (a, b, x, y): answers (a,b) to questions (x,y) lose.
using RuleTuple = std::array<int, 4>;

/// Synchronous game (I, O, λ); λ(a,b,x,y) = 0 exactly on `forbidden`.
///
/// Invariants kept by the constructors: every sync-forced tuple (a,b,x,x)
/// with a != b is present, no diagonal tuple (a,a,x,x) is, and the set is
/// closed under the adjoint symmetry (a,b,x,y) -> (b,a,y,x) (the relation
/// p_{x,a}p_{y,b} = 0 forces its adjoint, so the closure presents the same
/// algebra).
struct GameSpec {
  int inputs = 0;
  int outputs = 0;
  std::set<RuleTuple> forbidden;

  bool allows(int a, int b, int x, int y) const {
    return forbidden.count({a, b, x, y}) == 0;
  }
  bool operator==(const GameSpec&) const = default;
};

/// Builds a validated GameSpec from raw extra forbidden tuples: checks
/// ranges, rejects diagonal tuples, inserts sync-forced tuples and closes
/// under the adjoint symmetry.
GameSpec make_game_spec(int inputs, int outputs,
                        const std::vector<RuleTuple>& forbidden_tuples);

/// Game with λ = 1 except the synchronicity-forced zeros.
GameSpec make_easiest(int inputs, int outputs);

/// Graph endomorphism game of g: I = O = V, λ(a,b,x,y) = 0 iff {x,y} is an
/// edge and {a,b} is not (including a = b), intersected with the
/// synchronicity mask.
GameSpec make_graph_game(const Graph& g);

/// λ(i,j,k,l)=0 yet λ(i,j,r,s) = λ(r,s,k,l) = 1: a failure of condition (*).
struct StarWitness {
  int i, j, k, l, r, s;
  bool operator==(const StarWitness&) const = default;
};

/// Condition (*): every forbidden (i,j,k,l) kills all composite routes
/// λ(i,j,r,s)·λ(r,s,k,l). Returns the lexicographically smallest witness
/// (i,j,k,l,r,s), or nullopt when the condition holds. Requires |O| = |I|.
std::optional<StarWitness> check_star(const GameSpec& spec);

/// Counit condition: λ(i,j,i,j) = 1 for all i,j. Returns the first
/// violating (i,j), or nullopt when the condition holds. Requires |O| = |I|.
std::optional<std::pair<int, int>> check_counit_condition(const GameSpec& spec);

struct SyncViolation {
  enum class Kind { missing_forced, forbidden_diagonal };
  Kind kind;
  RuleTuple tuple;
  bool operator==(const SyncViolation&) const = default;
};

/// Checks Eq.-(1) synchronicity of a raw spec; empty result means ok.
std::vector<SyncViolation> validate_synchronous(const GameSpec& spec);

std::string to_string(const StarWitness& w);
std::string to_string(const SyncViolation& v);

}  // namespace synq
