#pragma once

// Signature-aware linear algebra on the ambient space R^{n+1}.
//
// The ambient space carries either the Euclidean inner product (epsilon = +1,
// the sphere lives here) or the Lorentzian product with the last coordinate
// negated (epsilon = -1, the hyperboloid lives here).

#include <Eigen/Dense>

#include <random>
#include <stdexcept>

namespace hvf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class Signature {
 public:
  explicit Signature(int epsilon) : eps_(epsilon) {
    if (epsilon != 1 && epsilon != -1) {
      throw std::invalid_argument("signature indicator must be +1 or -1");
    }
  }
  static Signature spherical() { return Signature(1); }
  static Signature hyperbolic() { return Signature(-1); }

  int epsilon() const { return eps_; }
  bool is_lorentzian() const { return eps_ < 0; }

  friend bool operator==(Signature a, Signature b) { return a.eps_ == b.eps_; }

 private:
  int eps_;
};

/// <x, y> under the signature. Throws std::invalid_argument on size mismatch.
double inner(const Vec& x, const Vec& y, Signature sig);

/// diag(1, ..., 1, epsilon): the Gram matrix of the standard basis.
Mat metric_matrix(Eigen::Index dim, Signature sig);

/// A^dagger = eta A^T eta, the adjoint with respect to the signature form.
Mat lorentz_adjoint(const Mat& A, Signature sig);

/// Largest singular value.
double operator_norm(const Mat& A);

/// The potential of a linear form: <a, x>.
inline double dual_covector_restriction(const Vec& a, const Vec& x, Signature sig) {
  return inner(a, x, sig);
}

/// A linear map skew with respect to the signature: <A x, y> = -<x, A y>.
class SkewOperator {
 public:
  SkewOperator(Mat matrix, Signature sig, double tol = 1e-12);
  static SkewOperator zero(Eigen::Index dim, Signature sig);

  const Mat& matrix() const { return m_; }
  Signature signature() const { return sig_; }
  Eigen::Index dim() const { return m_.rows(); }
  Vec operator()(const Vec& x) const { return m_ * x; }

  SkewOperator scaled(double s) const { return SkewOperator(m_ * s, sig_, kNoCheck); }
  SkewOperator operator+(const SkewOperator& other) const;
  /// g A g^{-1} for a signature isometry g.
  SkewOperator conjugated(const Mat& g) const;

 private:
  static constexpr double kNoCheck = -1.0;
  Mat m_;
  Signature sig_;
};

/// Symmetric with respect to the Euclidean product (spherical case only).
class SymOperator {
 public:
  explicit SymOperator(Mat matrix, double tol = 1e-12);
  const Mat& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Vec operator()(const Vec& x) const { return m_ * x; }

 private:
  Mat m_;
};

/// <A1, A2>_L = tr(A1 A2^dagger). Frame independent.
double lorentz_pairing(const SkewOperator& A1, const SkewOperator& A2);

/// The same pairing evaluated as a frame sum, sum_i <e_i,e_i> <A1 e_i, A2 e_i>,
/// over the columns of `frame`, which must be signature-orthonormal.
double lorentz_pairing_in_frame(const SkewOperator& A1, const SkewOperator& A2, const Mat& frame);

/// True when g^T eta g = eta (to tol) and, for the Lorentzian signature, g
/// maps the upper sheet of the hyperboloid to itself.
bool is_isometry(const Mat& g, Signature sig, double tol = 1e-10);

/// A random signature-orthogonal matrix. Lorentzian draws are orthochronous:
/// a spatial rotation composed with a boost of rapidity at most max_rapidity.
Mat random_isometry(Eigen::Index dim, Signature sig, std::mt19937_64& rng, double max_rapidity = 1.0);

}  // namespace hvf
