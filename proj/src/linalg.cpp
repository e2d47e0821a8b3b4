#include "codealg/linalg.hpp"

#include <algorithm>
#include <set>

namespace codealg {

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool vec_key_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return scalar_key_less(a[i], b[i]);
  }
  return false;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  return m;
}

Vec Mat::col(int j) const {
  Vec out(r_);
  for (int i = 0; i < r_; ++i) out[i] = (*this)(i, j);
  return out;
}

Vec Mat::row(int i) const {
  Vec out(c_);
  for (int j = 0; j < c_; ++j) out[j] = (*this)(i, j);
  return out;
}

Mat Mat::transposed() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o(k, j).is_zero()) continue;
        m(i, j) += a * o(k, j);
      }
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  Mat m(*this);
  for (size_t i = 0; i < v_.size(); ++i) m.v_[i] += o.v_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  Mat m(*this);
  for (size_t i = 0; i < v_.size(); ++i) m.v_[i] -= o.v_[i];
  return m;
}

Mat Mat::hcat(const Mat& o) const {
  Mat m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

Vec mat_vec(const Mat& A, const Vec& x) {
  Vec out(A.rows());
  for (int j = 0; j < A.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < A.rows(); ++i) {
      if (A(i, j).is_zero()) continue;
      out[i] += A(i, j) * x[j];
    }
  }
  return out;
}

int rref(Mat& M, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int rank = 0;
  for (int col = 0; col < M.cols() && rank < M.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < M.rows(); ++i)
      if (!M(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(rank, j));
    Scalar inv = M(rank, col).inv();
    for (int j = col; j < M.cols(); ++j) M(rank, j) *= inv;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == rank || M(i, col).is_zero()) continue;
      Scalar f = M(i, col);
      for (int j = col; j < M.cols(); ++j) M(i, j) -= f * M(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int rank(Mat M) { return rref(M); }

Scalar det(Mat M) {
  if (M.rows() != M.cols()) throw Error(errc::internal, "det of non-square matrix");
  int n = M.rows();
  Scalar d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!M(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(col, j));
      d = -d;
    }
    d *= M(col, col);
    Scalar inv = M(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (M(i, col).is_zero()) continue;
      Scalar f = M(i, col) * inv;
      for (int j = col; j < n; ++j) M(i, j) -= f * M(col, j);
    }
  }
  return d;
}

Mat kernel_basis(Mat M) {
  std::vector<int> pivots;
  rref(M, &pivots);
  int n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> cols;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M(int(r), f);
    cols.push_back(std::move(v));
  }
  if (cols.empty()) return Mat(n, 0);
  return Mat::from_columns(cols);
}

std::optional<Mat> inverse(const Mat& M) {
  if (M.rows() != M.cols()) return std::nullopt;
  int n = M.rows();
  Mat aug = M.hcat(Mat::identity(n));
  if (rref(aug) != n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  Mat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  std::vector<int> pivots;
  rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  Vec x(A.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(int(r), A.cols());
  return x;
}

bool subspace_contained(const Mat& U, const Mat& V) {
  if (U.cols() == 0) return true;
  return rank(V) == rank(V.hcat(U));
}

bool subspace_equal(const Mat& U, const Mat& V) {
  int ru = rank(U), rv = rank(V);
  return ru == rv && rank(U.hcat(V)) == ru;
}

std::vector<Scalar> charpoly(const Mat& A) {
  int n = A.rows();
  // values of det(xI - A) at x = 0..n
  std::vector<Scalar> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    Mat M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        M(i, j) = -A(i, j);
        if (i == j) M(i, j) += Scalar(t);
      }
    xs[t] = Scalar(t);
    ys[t] = det(std::move(M));
  }
  // Newton divided differences, then expansion to monomial coefficients
  std::vector<Scalar> dd = ys;
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Scalar> coeff(n + 1), term{Scalar(1)};
  for (int k = 0; k <= n; ++k) {
    for (size_t j = 0; j < term.size(); ++j) coeff[j] += dd[k] * term[j];
    if (k < n) {
      // term *= (x - xs[k])
      term.push_back(Scalar(0));
      for (size_t j = term.size() - 1; j > 0; --j)
        term[j] = term[j - 1] - xs[k] * term[j];
      term[0] = -xs[k] * term[0];
    }
  }
  return coeff;
}

Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x) {
  Scalar acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

// divisors of |v|, empty when the factor search gives out
std::vector<mpz_class> divisors_bounded(mpz_class v, size_t cap = 4096) {
  v = abs(v);
  if (v == 0) return {};
  std::vector<std::pair<mpz_class, int>> fact;
  for (long p = 2; mpz_class(p) * p <= v && p < 1000000; p = (p == 2 ? 3 : p + 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    if (e) fact.push_back({p, e});
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 30) != 0)
      fact.push_back({v, 1});
    else
      return {};  // large composite leftover: give up on exhaustive candidates
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fact) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > cap) return {};
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& p) {
  std::vector<Scalar> roots;
  std::set<Scalar, ScalarKeyLess> seen;
  auto push = [&](const Scalar& r) {
    if (poly_eval(p, r).is_zero() && seen.insert(r).second) roots.push_back(r);
  };
  // strip zero roots
  size_t lo = 0;
  while (lo < p.size() && p[lo].is_zero()) ++lo;
  if (lo == p.size()) return roots;  // zero polynomial: report no roots
  if (lo > 0) push(Scalar(0));
  // a rational root must kill the rational and the surd coefficient parts
  // separately; search the rational part (or surd part if the former is zero)
  std::vector<mpq_class> q;
  bool use_rat = false;
  for (size_t i = lo; i < p.size(); ++i)
    if (p[i].rat() != 0) use_rat = true;
  for (size_t i = lo; i < p.size(); ++i) q.push_back(use_rat ? p[i].rat() : p[i].surd());
  while (!q.empty() && q.back() == 0) q.pop_back();
  size_t qlo = 0;
  while (qlo < q.size() && q[qlo] == 0) ++qlo;
  if (q.size() - qlo < 2) return roots;
  // clear denominators
  mpz_class L = 1;
  for (size_t i = qlo; i < q.size(); ++i) {
    const mpz_class& den = q[i].get_den();
    L = L / gcd(L, den) * den;
  }
  mpz_class a0 = mpq_class(q[qlo] * L).get_num();
  mpz_class an = mpq_class(q.back() * L).get_num();
  auto ds0 = divisors_bounded(a0), dsn = divisors_bounded(an);
  for (const auto& num : ds0)
    for (const auto& den : dsn) {
      mpq_class r(num, den);
      r.canonicalize();
      push(Scalar(r));
      push(Scalar(-r));
    }
  return roots;
}

void RowSpan::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < n_; ++j) v[j] -= f * rows_[r][j];
  }
}

bool RowSpan::add(Vec v) {
  reduce(v);
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = v[piv].inv();
  for (int j = 0; j < n_; ++j) v[j] *= inv;
  // back-substitute into existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar f = rows_[r][piv];
    if (f.is_zero()) continue;
    for (int j = 0; j < n_; ++j) rows_[r][j] -= f * v[j];
  }
  // keep rows ordered by pivot
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool RowSpan::contains(Vec v) const {
  reduce(v);
  return vec_is_zero(v);
}

Mat RowSpan::basis() const {
  Mat m(int(rows_.size()), n_);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (int j = 0; j < n_; ++j) m(int(i), j) = rows_[i][j];
  return m;
}

}  // namespace codealg
