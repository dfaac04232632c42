// Classical points (characters) of the game algebras: enumeration as
// functions/permutations, the convolution monoid/group they form under the
// comultiplication, and their one-dimensional matrix models.
#pragma once

#include <string>
#include <vector>

#include "synq/game.hpp"
#include "synq/repcheck.hpp"

namespace synq {

/// A function f: I -> O with λ(f(x), f(y), x, y) = 1 for all x, y; with
/// `invertible` set it is additionally a bijection (a character of the
/// bi-stochastic quotient).
struct ClassicalPoint {
  std::vector<int> map;
  bool invertible = false;

  int operator()(int x) const { return map.at(static_cast<size_t>(x)); }
  bool operator==(const ClassicalPoint&) const = default;
  bool operator<(const ClassicalPoint& o) const { return map < o.map; }
};

bool satisfies_rules(const GameSpec& spec, const std::vector<int>& f);

/// Backtracking enumeration over inputs in index order with forward
/// checking (and used-value pruning when invertible); lexicographically
/// sorted. `invertible` requires |O| = |I|.
std::vector<ClassicalPoint> enumerate_classical_points(const GameSpec& spec,
                                                       bool invertible);

/// Convolution of characters (χ_f ⊗ χ_g)∘Δ; realizes h = g∘f. Throws if
/// the composite violates the point invariants (possible only without (*)).
ClassicalPoint convolve(const GameSpec& spec, const ClassicalPoint& f,
                        const ClassicalPoint& g);

struct CayleyReport {
  std::vector<std::vector<int>> table;  // table[i][j] = index of p_i * p_j
  bool closed = false;
  bool is_group = false;
  int identity_index = -1;
};

/// Full convolution table of the given points with closure and (for
/// invertible families) group structure detection.
CayleyReport cayley_table(const GameSpec& spec,
                          const std::vector<ClassicalPoint>& points);

/// 1x1 model q_{i,j} = [f(i) = j]; passes verify_model with residual 0.
MatrixModel point_to_model(const GameSpec& spec, const ClassicalPoint& f);

std::string render_point(const ClassicalPoint& p);   // "f: 0->2 1->0 ..."
ClassicalPoint parse_point(const std::string& text);

}  // namespace synq
