#include "susyqm/superalgebra.hpp"

#include <cmath>
#include <map>

namespace susyqm {

namespace {

Matrix kron(const Matrix& A, const Matrix& B) {
  // Index (n, m) -> n + n_max * m puts the fermion factor outermost.
  Matrix out = Matrix::Zero(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0.0) out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

double scan(const Matrix& M, const std::vector<int>& keep, const std::string& name, double tol,
            std::vector<AlgebraViolation>& violations) {
  double worst = 0.0;
  for (int i : keep)
    for (int j : keep) {
      const double v = std::abs(M(i, j));
      worst = std::max(worst, v);
      if (v > tol) violations.push_back({name, i, j, M(i, j)});
    }
  return worst;
}

}  // namespace

FockOperators build_operators(int n_max) {
  if (n_max < 2) throw DomainError("build_operators needs n_max >= 2");
  Matrix boson = Matrix::Zero(n_max, n_max);
  for (int n = 1; n < n_max; ++n) boson(n - 1, n) = std::sqrt(static_cast<double>(n));
  Matrix fermion = Matrix::Zero(2, 2);
  fermion(0, 1) = 1.0;
  const Matrix I_b = Matrix::Identity(n_max, n_max);
  const Matrix I_f = Matrix::Identity(2, 2);

  FockOperators ops;
  ops.n_max = n_max;
  ops.a = kron(I_f, boson);
  ops.adag = ops.a.transpose();
  ops.b = kron(fermion, I_b);
  ops.bdag = ops.b.transpose();
  ops.Q = ops.adag * ops.b;
  ops.Qdag = ops.bdag * ops.a;
  ops.H = ops.adag * ops.a + ops.bdag * ops.b;
  return ops;
}

AlgebraReport check_superalgebra(int n_max, double tol) {
  if (n_max < 3) throw DomainError("check_superalgebra needs n_max >= 3");
  const FockOperators ops = build_operators(n_max);
  AlgebraReport rep;
  rep.n_max = n_max;
  rep.tol = tol;

  std::vector<int> all(static_cast<std::size_t>(ops.dim()));
  for (int i = 0; i < ops.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<int> safe;
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n <= n_max - 2; ++n) safe.push_back(ops.index(n, m));

  const Matrix anti = ops.Q * ops.Qdag + ops.Qdag * ops.Q - ops.H;
  rep.anticommutator_deviation = scan(anti, safe, "{Q,Q^dagger}=H", tol, rep.violations);

  rep.nilpotency_deviation = std::max(scan(ops.Q * ops.Q, all, "Q^2=0", tol, rep.violations),
                                      scan(ops.Qdag * ops.Qdag, all, "(Q^dagger)^2=0", tol, rep.violations));

  rep.commutator_deviation =
      std::max(scan(ops.Q * ops.H - ops.H * ops.Q, safe, "[Q,H]=0", tol, rep.violations),
               scan(ops.Qdag * ops.H - ops.H * ops.Qdag, safe, "[Q^dagger,H]=0", tol, rep.violations));

  // Spectrum of H restricted to the safe block.
  const auto k = static_cast<Eigen::Index>(safe.size());
  Matrix block(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) block(i, j) = ops.H(safe[static_cast<std::size_t>(i)], safe[static_cast<std::size_t>(j)]);
  Vector values;
  Matrix vectors;
  jacobi_eigen(block, values, vectors);
  std::map<int, int> counts;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const long level = std::lround(values(i));
    if (std::abs(values(i) - static_cast<double>(level)) > 1e-9)
      rep.violations.push_back({"integer spectrum", static_cast<int>(i), static_cast<int>(i), values(i)});
    ++counts[static_cast<int>(level)];
  }
  for (int level = 0; level <= n_max - 2; ++level) {
    const int mult = counts.count(level) ? counts[level] : 0;
    rep.degeneracies.push_back({level, mult});
    const int expected = level == 0 ? 1 : 2;
    if (mult != expected) rep.violations.push_back({"degeneracy", level, level, static_cast<double>(mult)});
  }
  return rep;
}

}  // namespace susyqm
