#include "hvf/ambient.hpp"

#include <algorithm>
#include <cmath>

namespace hvf {

double inner(const Vec& x, const Vec& y, Signature sig) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  const Eigen::Index last = x.size() - 1;
  if (last < 0) return 0.0;
  double s = x.head(last).dot(y.head(last));
  s += sig.epsilon() * x(last) * y(last);
  return s;
}

Mat metric_matrix(Eigen::Index dim, Signature sig) {
  Mat eta = Mat::Identity(dim, dim);
  if (dim > 0) eta(dim - 1, dim - 1) = sig.epsilon();
  return eta;
}

Mat lorentz_adjoint(const Mat& A, Signature sig) {
  const Mat eta = metric_matrix(A.rows(), sig);
  return eta * A.transpose() * eta;
}

double operator_norm(const Mat& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(A);
  return svd.singularValues()(0);
}

SkewOperator::SkewOperator(Mat matrix, Signature sig, double tol) : m_(std::move(matrix)), sig_(sig) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("SkewOperator: matrix must be square");
  }
  if (tol < 0) return;
  // <A e_i, e_j> + <e_i, A e_j> = (eta A + A^T eta)_{ji}
  const Mat eta = metric_matrix(m_.rows(), sig_);
  const Mat defect = eta * m_ + m_.transpose() * eta;
  const double size = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if (defect.cwiseAbs().maxCoeff() > tol * size) {
    throw std::invalid_argument("SkewOperator: matrix is not skew with respect to the signature");
  }
}

SkewOperator SkewOperator::zero(Eigen::Index dim, Signature sig) {
  return SkewOperator(Mat::Zero(dim, dim), sig);
}

SkewOperator SkewOperator::operator+(const SkewOperator& other) const {
  if (!(sig_ == other.sig_) || dim() != other.dim()) {
    throw std::invalid_argument("SkewOperator: incompatible operands");
  }
  return SkewOperator(m_ + other.m_, sig_, kNoCheck);
}

SkewOperator SkewOperator::conjugated(const Mat& g) const {
  return SkewOperator(g * m_ * g.inverse(), sig_, 1e-9);
}

SymOperator::SymOperator(Mat matrix, double tol) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("SymOperator: matrix must be square");
  }
  const double size = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > tol * size) {
    throw std::invalid_argument("SymOperator: matrix is not symmetric");
  }
}

double lorentz_pairing(const SkewOperator& A1, const SkewOperator& A2) {
  if (!(A1.signature() == A2.signature()) || A1.dim() != A2.dim()) {
    throw std::invalid_argument("lorentz_pairing: incompatible operators");
  }
  return (A1.matrix() * lorentz_adjoint(A2.matrix(), A2.signature())).trace();
}

double lorentz_pairing_in_frame(const SkewOperator& A1, const SkewOperator& A2, const Mat& frame) {
  const Signature sig = A1.signature();
  double s = 0.0;
  for (Eigen::Index i = 0; i < frame.cols(); ++i) {
    const Vec e = frame.col(i);
    const double norm = inner(e, e, sig) > 0 ? 1.0 : -1.0;
    s += norm * inner(A1(e), A2(e), sig);
  }
  return s;
}

bool is_isometry(const Mat& g, Signature sig, double tol) {
  if (g.rows() != g.cols()) return false;
  const Mat eta = metric_matrix(g.rows(), sig);
  const double size = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g.transpose() * eta * g - eta).cwiseAbs().maxCoeff() > tol * size * size) return false;
  if (sig.is_lorentzian() && g(g.rows() - 1, g.cols() - 1) <= 0) return false;
  return true;
}

namespace {

Mat random_orthogonal(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Mat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  // Fix the sign ambiguity so the draw is Haar distributed.
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

}  // namespace

Mat random_isometry(Eigen::Index dim, Signature sig, std::mt19937_64& rng, double max_rapidity) {
  if (!sig.is_lorentzian()) return random_orthogonal(dim, rng);
  const Eigen::Index n = dim - 1;
  Mat rot = Mat::Identity(dim, dim);
  if (n > 0) rot.topLeftCorner(n, n) = random_orthogonal(n, rng);
  if (n == 0) return rot;

  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, max_rapidity);
  Vec u(n);
  for (Eigen::Index i = 0; i < n; ++i) u(i) = gauss(rng);
  u.normalize();
  const double phi = unif(rng);
  Mat boost = Mat::Identity(dim, dim);
  boost.topLeftCorner(n, n) += (std::cosh(phi) - 1.0) * u * u.transpose();
  boost.block(0, n, n, 1) = std::sinh(phi) * u;
  boost.block(n, 0, 1, n) = std::sinh(phi) * u.transpose();
  boost(n, n) = std::cosh(phi);
  return boost * rot;
}

}  // namespace hvf
