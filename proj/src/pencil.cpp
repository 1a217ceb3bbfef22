#include <algorithm>
#include <cmath>
#include <numeric>

#include "susyqm/numerics.hpp"

namespace susyqm {

namespace {

bool is_symmetric(const Matrix& A, double rel_tol) {
  const double scale = std::max(A.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = i + 1; j < A.cols(); ++j)
      if (std::abs(A(i, j) - A(j, i)) > rel_tol * scale) return false;
  return true;
}

// Lower-triangular L with S = L L^T.
Matrix cholesky(const Matrix& S) {
  const Eigen::Index m = S.rows();
  Matrix L = Matrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double d = S(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > 1e-14 * std::abs(S(j, j))) || !std::isfinite(d))
      throw ConditioningError("overlap matrix is not positive definite (Cholesky pivot " + std::to_string(j) +
                              ")");
    L(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < m; ++i) {
      double s = S(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

}  // namespace

MatrixPencil::MatrixPencil(Matrix S, Matrix H) : S_(std::move(S)), H_(std::move(H)) {
  if (S_.rows() < 1 || S_.rows() != S_.cols() || H_.rows() != S_.rows() || H_.cols() != S_.cols())
    throw DomainError("matrix pencil needs two square matrices of equal size");
  if (!S_.allFinite() || !H_.allFinite()) throw DomainError("matrix pencil holds non-finite entries");
  if (!is_symmetric(S_, 1e-12)) throw DomainError("overlap matrix S is not symmetric");
  if (!is_symmetric(H_, 1e-12)) throw DomainError("Hamiltonian matrix H is not symmetric");
  cholesky(S_);
}

void jacobi_eigen(const Matrix& input, Vector& values, Matrix& vectors) {
  Matrix A = input;
  const Eigen::Index m = A.rows();
  vectors = Matrix::Identity(m, m);
  const double frob2 = A.squaredNorm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = p + 1; q < m; ++q) off += A(p, q) * A(p, q);
    if (off <= 1e-32 * frob2 || off == 0.0) break;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double vkp = vectors(k, p), vkq = vectors(k, q);
          vectors(k, p) = c * vkp - s * vkq;
          vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  values = A.diagonal();
}

std::vector<Eigenpair> solve_pencil(const MatrixPencil& pencil) {
  const Matrix& S = pencil.S();
  const Matrix& H = pencil.H();
  const Eigen::Index m = S.rows();
  const Matrix L = cholesky(S);

  // C = L^-1 H L^-T, symmetrized against rounding.
  const auto Ltri = L.triangularView<Eigen::Lower>();
  Matrix X = Ltri.solve(H);
  Matrix C = Ltri.solve(X.transpose());
  C = 0.5 * (C + C.transpose()).eval();

  Vector values;
  Matrix vectors;
  jacobi_eigen(C, values, vectors);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values(a) < values(b); });

  const double h_scale = H.norm();
  std::vector<Eigenpair> result;
  result.reserve(order.size());
  for (auto idx : order) {
    Vector alpha = L.transpose().triangularView<Eigen::Upper>().solve(vectors.col(idx));
    alpha /= std::sqrt(alpha.dot(S * alpha));
    const double E = values(idx);
    const Vector Ha = H * alpha;
    const double resid = (Ha - E * (S * alpha)).norm();
    if (resid > 1e-8 * std::max(Ha.norm(), h_scale * alpha.norm()))
      throw ConditioningError("generalized eigenpair residual above tolerance; pencil is ill-conditioned");
    result.push_back({E, std::move(alpha)});
  }
  return result;
}

}  // namespace susyqm
