#include "synq/repcheck.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace synq {

MatrixModel MatrixModel::zeros(int inputs, int outputs, int dim) {
  if (inputs < 1 || outputs < 1 || dim < 1)
    throw Error("repcheck: model shape must be positive");
  MatrixModel m;
  m.inputs = inputs;
  m.outputs = outputs;
  m.dim = dim;
  m.entries.assign(static_cast<size_t>(inputs) * outputs,
                   CMatrix::Zero(dim, dim));
  return m;
}

CMatrix& MatrixModel::at(int x, int a) {
  if (x < 0 || x >= inputs || a < 0 || a >= outputs)
    throw Error("repcheck: generator index out of range");
  return entries[static_cast<size_t>(x) * outputs + a];
}

const CMatrix& MatrixModel::at(int x, int a) const {
  if (x < 0 || x >= inputs || a < 0 || a >= outputs)
    throw Error("repcheck: generator index out of range");
  return entries[static_cast<size_t>(x) * outputs + a];
}

bool MatrixModel::operator==(const MatrixModel& o) const {
  if (inputs != o.inputs || outputs != o.outputs || dim != o.dim) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != o.entries[i]) return false;
  return true;
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double VerificationReport::max_residual() const {
  double r = std::max({self_adjoint, idempotent, row_sum, orthogonality});
  if (column_sum) r = std::max(r, *column_sum);
  return r;
}

VerificationReport verify_model(const GameSpec& spec, const MatrixModel& m,
                                Variant variant, double tol) {
  if (m.inputs != spec.inputs || m.outputs != spec.outputs)
    throw Error("repcheck: model shape does not match the game");
  if (tol < 0) throw Error("repcheck: tolerance must be nonnegative");
  if (variant == Variant::bistochastic && spec.inputs != spec.outputs)
    throw Error("repcheck: bistochastic variant requires |O| = |I|");
  VerificationReport rep;
  rep.tol = tol;
  const CMatrix id = CMatrix::Identity(m.dim, m.dim);

  for (int x = 0; x < spec.inputs; ++x)
    for (int a = 0; a < spec.outputs; ++a) {
      const CMatrix& q = m.at(x, a);
      if (q.rows() != m.dim || q.cols() != m.dim)
        throw Error("repcheck: entry shape mismatch");
      rep.self_adjoint =
          std::max(rep.self_adjoint, spectral_norm(q - q.adjoint()));
      rep.idempotent = std::max(rep.idempotent, spectral_norm(q * q - q));
    }
  for (int x = 0; x < spec.inputs; ++x) {
    CMatrix sum = CMatrix::Zero(m.dim, m.dim);
    for (int a = 0; a < spec.outputs; ++a) sum += m.at(x, a);
    rep.row_sum = std::max(rep.row_sum, spectral_norm(sum - id));
  }
  if (variant == Variant::bistochastic) {
    double worst = 0;
    for (int a = 0; a < spec.outputs; ++a) {
      CMatrix sum = CMatrix::Zero(m.dim, m.dim);
      for (int x = 0; x < spec.inputs; ++x) sum += m.at(x, a);
      worst = std::max(worst, spectral_norm(sum - id));
    }
    rep.column_sum = worst;
  }
  for (const RuleTuple& t : spec.forbidden) {
    auto [a, b, x, y] = t;
    rep.orthogonality =
        std::max(rep.orthogonality, spectral_norm(m.at(x, a) * m.at(y, b)));
  }
  rep.pass = rep.max_residual() <= tol;
  return rep;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixModel compose_models(const MatrixModel& m1, const MatrixModel& m2) {
  if (m1.inputs != m2.inputs || m1.outputs != m2.outputs)
    throw Error("repcheck: compose requires equal index sets");
  if (m1.inputs != m1.outputs)
    throw Error("repcheck: compose requires |O| = |I|");
  const int n = m1.inputs;
  MatrixModel out = MatrixModel::zeros(n, n, m1.dim * m2.dim);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      CMatrix sum = CMatrix::Zero(out.dim, out.dim);
      for (int r = 0; r < n; ++r)
        sum += kronecker(m1.at(k, r), m2.at(r, i));
      out.at(k, i) = sum;
    }
  return out;
}

namespace {

// Standard normals from the raw mt19937_64 stream (Box-Muller), so results
// do not depend on the standard library's distribution implementations.
class SeededNormals {
public:
  explicit SeededNormals(std::uint64_t seed) : rng_(seed) {}

  double uniform() {  // (0, 1]
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
  }
  double normal() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u = uniform(), v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    have_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }
  std::uint64_t raw() { return rng_(); }

private:
  std::mt19937_64 rng_;
  double spare_ = 0;
  bool have_ = false;
};

}  // namespace

std::vector<CMatrix> random_projection_partition(int n_parts, int dim,
                                                 std::uint64_t seed) {
  if (n_parts < 1 || dim < 1)
    throw Error("repcheck: partition needs n_parts >= 1 and dim >= 1");
  SeededNormals rng(seed);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = std::complex<double>(rng.normal(), rng.normal());
  CMatrix h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CMatrix v = es.eigenvectors();

  std::vector<int> cuts;
  for (int c = 0; c + 1 < n_parts; ++c)
    cuts.push_back(static_cast<int>(rng.raw() % (dim + 1)));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(dim);

  std::vector<CMatrix> parts;
  for (int p = 0; p < n_parts; ++p) {
    int lo = cuts[static_cast<size_t>(p)], hi = cuts[static_cast<size_t>(p) + 1];
    CMatrix block = v.block(0, lo, dim, hi - lo);
    parts.push_back(block * block.adjoint());
  }
  return parts;
}

double lemma_orthogonality_residual(const std::vector<CMatrix>& parts) {
  double worst = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      if (parts[i].rows() != parts[j].rows() ||
          parts[i].cols() != parts[i].rows())
        throw Error("repcheck: parts must be square matrices of equal size");
      worst = std::max(worst, spectral_norm(parts[i] * parts[j]));
    }
  return worst;
}

std::optional<std::pair<Generator, Generator>> noncommutativity_witness(
    const MatrixModel& m, double threshold) {
  std::vector<Generator> gens;
  for (int x = 0; x < m.inputs; ++x)
    for (int a = 0; a < m.outputs; ++a) gens.push_back({x, a});
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const CMatrix& p = m.at(gens[i].row, gens[i].col);
      const CMatrix& q = m.at(gens[j].row, gens[j].col);
      if (spectral_norm(p * q - q * p) > threshold)
        return std::make_pair(gens[i], gens[j]);
    }
  return std::nullopt;
}

CMatrix evaluate_element(const MatrixModel& m, const NCElement& e) {
  Eigen::Index full = 1;
  for (int leg = 0; leg < e.leg_count(); ++leg) full *= m.dim;
  CMatrix out = CMatrix::Zero(full, full);
  const CMatrix id = CMatrix::Identity(m.dim, m.dim);
  for (const auto& [w, c] : e.terms()) {
    CMatrix acc;
    bool first = true;
    for (const Letters& leg : w.legs) {
      CMatrix legval = id;
      for (const Generator& g : leg) legval = legval * m.at(g.row, g.col);
      acc = first ? legval : kronecker(acc, legval);
      first = false;
    }
    out += acc * c.convert_to<double>();
  }
  return out;
}

}  // namespace synq
