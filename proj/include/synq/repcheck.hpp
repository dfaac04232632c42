// Finite-dimensional matrix models of the presentations: relation residual
// checks, Kronecker composition of quantum families, random partitions of
// unity, and numeric evaluation of symbolic elements.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "synq/game.hpp"
#include "synq/ncalg.hpp"

namespace synq {

using CMatrix = Eigen::MatrixXcd;

/// Assignment of a dim x dim complex matrix to each generator p[x,a].
struct MatrixModel {
  int inputs = 0;
  int outputs = 0;
  int dim = 0;
  std::vector<CMatrix> entries;  // index x*outputs + a

  static MatrixModel zeros(int inputs, int outputs, int dim);
  CMatrix& at(int x, int a);
  const CMatrix& at(int x, int a) const;
  bool operator==(const MatrixModel& o) const;
};

/// Largest singular value.
double spectral_norm(const CMatrix& m);

/// Per-family maximum operator-norm residuals of the presentation
/// relations; pass iff all residuals are <= tol.
struct VerificationReport {
  double tol = 0;
  bool pass = false;
  double self_adjoint = 0;   // max ||q - q*||
  double idempotent = 0;     // max ||q^2 - q||
  double row_sum = 0;        // max_x ||sum_a q_{x,a} - 1||
  double orthogonality = 0;  // max over forbidden ||q_{x,a} q_{y,b}||
  std::optional<double> column_sum;  // bistochastic: max_a ||sum_x q_{x,a} - 1||

  double max_residual() const;
};

VerificationReport verify_model(const GameSpec& spec, const MatrixModel& m,
                                Variant variant, double tol);

/// Kronecker composition Q_{k,i} = sum_r m1_{k,r} (x) m2_{r,i}; the matrix
/// shadow of the comultiplication. Requires equal index sets.
MatrixModel compose_models(const MatrixModel& m1, const MatrixModel& m2);

/// Spectral projections of a seeded random Hermitian matrix, grouped into
/// n_parts consecutive eigenvalue blocks with uniformly drawn boundaries
/// (empty blocks allowed); the parts sum to the identity up to rounding.
/// Randomness: mt19937_64 with explicit Box-Muller normals, reproducible
/// by seed.
std::vector<CMatrix> random_projection_partition(int n_parts, int dim,
                                                 std::uint64_t seed);

/// max over i != j of ||p_i p_j||; ~0 for genuine partitions of unity.
double lemma_orthogonality_residual(const std::vector<CMatrix>& parts);

/// First generator pair (by index order) with ||[q, q']|| > threshold.
std::optional<std::pair<Generator, Generator>> noncommutativity_witness(
    const MatrixModel& m, double threshold = 1e-8);

/// Evaluates a symbolic element in the model: words become matrix products,
/// legs combine by Kronecker product; result is dim^legs square.
CMatrix evaluate_element(const MatrixModel& m, const NCElement& e);

/// Kronecker product helper (row-major leg order, left factor outermost).
CMatrix kronecker(const CMatrix& a, const CMatrix& b);

}  // namespace synq
