// Presentations of the game algebra A(G) and its bi-stochastic quotient,
// plus symbolic verification of the comultiplication, counit and compact
// quantum group identities.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synq/game.hpp"
#include "synq/ncalg.hpp"

namespace synq {

/// Generators p[x,a] with the relation families of A(G) (variant game) or
/// of the bi-stochastic quotient (variant bistochastic, requires |O|=|I|).
struct Presentation {
  int inputs = 0;
  int outputs = 0;
  Variant variant = Variant::game;
  std::vector<RuleTuple> orthogonality;  // = spec.forbidden, sorted

  std::vector<Generator> generators() const;
  std::vector<NCElement> projection_relations() const;     // g*g - g
  std::vector<Generator> self_adjoint_family() const;      // g* = g markers
  std::vector<NCElement> row_sum_relations() const;        // sum_a p[x,a] - 1
  std::vector<NCElement> column_sum_relations() const;     // bistochastic only
  std::vector<NCElement> orthogonality_relations() const;  // p[x,a]p[y,b]
  /// All relation elements that must vanish in any model.
  std::vector<NCElement> all_relations() const;

  bool operator==(const Presentation&) const = default;
};

Presentation present(const GameSpec& spec, Variant variant);

struct TheoremReport {
  enum class Status { verified, failed, unresolved };

  std::string claim;
  Status status = Status::verified;
  long checked = 0;
  std::optional<std::string> witness;  // indices and offending element
  std::vector<std::pair<std::string, long>> family_counts;
  long unresolved_count = 0;
  /// Differences certified equal to zero, for cross-layer model checks.
  std::vector<NCElement> certified;

  bool verified() const { return status == Status::verified; }
};

std::string to_string(TheoremReport::Status s);

/// Δ(p[i,j]) = sum_k p[i,k] (x) p[k,j], a 2-leg element with size terms.
NCElement delta_on_generator(int size, int i, int j);

/// Checks that the Q_{k,i} = sum_r p[k,r] (x) p[r,i] satisfy the relations
/// of the presentation: projections, row sums to 1 (x) 1, orthogonality on
/// every forbidden tuple, and column sums in the bistochastic variant.
/// Fails with the star witness when condition (*) does not hold.
TheoremReport verify_delta_well_defined(const GameSpec& spec, Variant variant);

/// Formal triple-sum equality of (Δ⊗id)Δ and (id⊗Δ)Δ on every generator.
TheoremReport verify_coassociativity(const GameSpec& spec, Variant variant);

/// ε(p[i,j]) = δ_{i,j}: checks the counit condition, that ε respects every
/// relation family, and the slice identities (ε⊗id)Δ = id = (id⊗ε)Δ.
TheoremReport verify_counit_identity(const GameSpec& spec, Variant variant);

/// Bi-stochastic quotient only: the two density identities
///   sum_k Δ(p[i,k])(1 (x) p[j,k]) = p[i,j] (x) 1
///   sum_k (p[k,i] (x) 1)Δ(p[k,j]) = 1 (x) p[i,j]
/// and the sliced invertibility identity sum_j p[x,j]p[i,j] = δ_{x,i} 1.
TheoremReport verify_group_identities(const GameSpec& spec);

}  // namespace synq
