#ifndef CURVLAB_LINALG_HPP
#define CURVLAB_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

// Small dense linear algebra for pointwise tensor work. Everything here
// targets matrices of order <= 12, so plain O(n^3) algorithms are used
// throughout and no external solver is linked.

namespace curvlab {

class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, 0.0) {}

  static Mat identity(int n);
  static Mat diag(const std::vector<double>& values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }

  Mat transposed() const;
  bool is_symmetric(double tol = 0.0) const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(double s, const Mat& a);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> d_;
};

// LU factorization with partial pivoting. Works for any nondegenerate
// square matrix; indefinite metrics are the normal case here, so no
// Cholesky path exists at all.
class LuFactor {
public:
  explicit LuFactor(const Mat& a);

  bool singular() const { return singular_; }
  double det() const;
  std::vector<double> solve(const std::vector<double>& rhs) const;
  Mat inverse() const;

private:
  int n_ = 0;
  Mat lu_;
  std::vector<int> perm_;
  int perm_sign_ = 1;
  bool singular_ = false;
};

struct SymEigen {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column k is the eigenvector of values[k]
};

// Cyclic Jacobi iteration; input must be symmetric.
SymEigen sym_eigen(const Mat& a);

// Singular values of a (possibly unsymmetric) square matrix, descending,
// computed from the symmetric eigenproblem of a^T a.
std::vector<double> singular_values(const Mat& a);

// Eigenvalues of a general real square matrix via Hessenberg reduction
// followed by shifted QR. Order is unspecified.
std::vector<std::complex<double>> general_eigenvalues(const Mat& a);

// Minimum-norm least-squares solution of the (symmetric PSD) normal
// equations G x = b, with eigenvalues below rcond * max|lambda| treated
// as zero. Used for span fits on possibly degenerate bases.
std::vector<double> solve_gram_min_norm(const Mat& gram, const std::vector<double>& b,
                                        double rcond = 1e-13);

}  // namespace curvlab

#endif
