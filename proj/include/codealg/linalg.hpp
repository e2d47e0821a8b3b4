#pragma once

#include <optional>
#include <vector>

#include "codealg/scalar.hpp"

namespace codealg {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);

// Deterministic total order on vectors (componentwise scalar key order).
bool vec_key_less(const Vec& a, const Vec& b);
struct VecKeyLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_key_less(a, b); }
};

// Dense matrix over Q(sqrt(d)), row major.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), v_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_columns(const std::vector<Vec>& cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& operator()(int i, int j) { return v_[size_t(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return v_[size_t(i) * c_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  Mat transposed() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && v_ == o.v_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat hcat(const Mat& o) const;  // [this | o]

private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> v_;
};

Vec mat_vec(const Mat& A, const Vec& x);

// In-place reduced row echelon form; returns rank, records pivot columns.
int rref(Mat& M, std::vector<int>* pivot_cols = nullptr);

int rank(Mat M);
Scalar det(Mat M);
Mat kernel_basis(Mat M);  // columns form a basis of the nullspace
std::optional<Mat> inverse(const Mat& M);
std::optional<Vec> solve(const Mat& A, const Vec& b);

// true when every column of U lies in the column span of V
bool subspace_contained(const Mat& U, const Mat& V);
bool subspace_equal(const Mat& U, const Mat& V);

// Monic characteristic polynomial det(xI - A), coefficient k of x^k.
// Computed from exact determinants at dim+1 integer points and Newton
// interpolation, avoiding symbolic arithmetic over the surd field.
std::vector<Scalar> charpoly(const Mat& A);

Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x);

// Rational roots of p, found by the rational root theorem on the cleared
// integer coefficients (surd-part coefficients filter candidates).  The
// divisor search is bounded; exotic huge coefficients may yield a partial
// candidate list, never a wrong root.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& p);

// Growing row space kept in reduced echelon form.
class RowSpan {
public:
  explicit RowSpan(int n) : n_(n) {}

  bool add(Vec v);  // true if the dimension grew
  bool contains(Vec v) const;
  int dim() const { return int(rows_.size()); }
  int ambient() const { return n_; }
  Mat basis() const;  // rows, deterministic order by pivot

private:
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;

  void reduce(Vec& v) const;
};

}  // namespace codealg
