// Exact noncommutative *-polynomial arithmetic in the game generators
// p[x,a], with multi-leg tensor words, the rewrite rules induced by the
// game relations, and a bounded-degree ideal-membership equality oracle.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "synq/game.hpp"

namespace synq {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// One letter p[row, col]: row = input index x, col = output index a.
struct Generator {
  int row = 0;
  int col = 0;
  auto operator<=>(const Generator&) const = default;
};

using Letters = std::vector<Generator>;  // one leg's word; empty = identity

/// Product word across a fixed number of tensor legs.
struct TensorWord {
  std::vector<Letters> legs;

  int leg_count() const { return static_cast<int>(legs.size()); }
  int degree() const;
  bool is_identity() const;

  bool operator==(const TensorWord&) const = default;
  // Canonical order: total degree first, then leg-by-leg lexicographic.
  bool operator<(const TensorWord& o) const;
};

/// Which relation family the rewrite rules draw from.
enum class Variant { game, bistochastic };

/// Exact linear combination of tensor words; all words share one leg count,
/// zero coefficients are never stored, terms are kept in canonical order.
class NCElement {
public:
  NCElement() : leg_count_(1) {}
  explicit NCElement(int leg_count);

  static NCElement zero(int leg_count = 1);
  static NCElement one(int leg_count = 1);
  static NCElement generator(Generator g);
  static NCElement from_word(TensorWord w, Scalar coeff = 1);
  /// Tensor product: concatenates the leg lists of a and b.
  static NCElement tensor(const NCElement& a, const NCElement& b);

  int leg_count() const { return leg_count_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max term degree; 0 for the zero element
  const std::map<TensorWord, Scalar>& terms() const { return terms_; }

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const Scalar& c);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(const Scalar& c, NCElement e) { return e *= c; }
  NCElement operator-() const;

  /// Bilinear leg-wise concatenation; the result is not normalized.
  friend NCElement operator*(const NCElement& a, const NCElement& b);

  /// Reverses each leg's word and conjugates coefficients (identity on
  /// rationals); an involution.
  NCElement adjoint() const;

  bool operator==(const NCElement&) const = default;

  void add_term(TensorWord w, Scalar c);

private:
  int leg_count_;
  std::map<TensorWord, Scalar> terms_;
};

/// Rewrites every leg of every term to a fixpoint of
///   R1: p[x,a]p[x,b] -> δ_{a,b} p[x,a]
///   R2: p[x,a]p[y,b] -> 0 when λ(a,b,x,y) = 0
///   R3: p[x,a]p[y,a] -> δ_{x,y} p[x,a]   (bistochastic only)
/// under leftmost-innermost application, then repeatedly collapses full
/// equal-coefficient row sweeps {w·p[x,a]·w' : a in O} to w·w' (and column
/// sweeps over x in the bistochastic variant). Deterministic; idempotent.
NCElement normalize(const NCElement& e, const GameSpec& spec, Variant variant);

enum class EqualityStatus { proved_equal, unresolved };

struct EqualityResult {
  EqualityStatus status;
  bool proved() const { return status == EqualityStatus::proved_equal; }
};

/// Bounded-degree ideal membership: certifies lhs = rhs in A(G) (or the
/// bistochastic quotient) by normalizing lhs - rhs and, failing that, by
/// exact sparse Gaussian elimination over contexted sum relations of total
/// degree <= degree_bound. `unresolved` is not a disproof.
EqualityResult equal_mod_relations(const NCElement& lhs, const NCElement& rhs,
                                   const GameSpec& spec, Variant variant,
                                   int degree_bound = 4);

/// Linear-basis counts per degree 0..max_degree of A(easiest game): the
/// identity plus alternating words with rows changing at every step and
/// columns avoiding the designated eliminated output index 0. Rejects
/// specs other than an easiest game.
std::vector<BigInt> reduced_word_counts(const GameSpec& spec, int max_degree);

/// Canonical text form, e.g. "1/1 p[0,1]p[2,0] (x) p[1,1]"; terms sorted,
/// coefficients as p/q, identity legs rendered "1", zero element "0".
std::string render_element(const NCElement& e);
NCElement parse_element(const std::string& text);

std::string render_scalar(const Scalar& c);

}  // namespace synq
