#include "crspan/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <utility>

#include "crspan/error.hpp"

namespace crspan {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kVariableMismatch: return "variable-mismatch";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kDivisionByZero: return "division-by-zero";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kOffSphere: return "off-sphere";
    case ErrorKind::kDegenerateBasePoint: return "degenerate-base-point";
    case ErrorKind::kNonTransversal: return "non-transversal";
    case ErrorKind::kMalformedProfile: return "malformed-profile";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotASolution: return "not-a-solution";
    case ErrorKind::kDependentSolutions: return "dependent-solutions";
    case ErrorKind::kSphereVerification: return "sphere-verification";
    case ErrorKind::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

Integer parse_integer(const std::string& s) {
  std::string digits = s;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::kParse, "malformed rational literal '" + s + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + s + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

GaussianRational::GaussianRational(const Rational& re) : re_(re) { re_.canonicalize(); }

GaussianRational::GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  const Rational n = norm2();
  return {re_ / n, -im_ / n};
}

std::size_t GaussianRational::bit_size() const {
  return mpz_sizeinbase(re_.get_num_mpz_t(), 2) + mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
         mpz_sizeinbase(im_.get_num_mpz_t(), 2) + mpz_sizeinbase(im_.get_den_mpz_t(), 2);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  const bool has_re = sgn(z.re()) != 0;
  const bool has_im = sgn(z.im()) != 0;
  if (!has_im) return to_string(z.re());
  std::string im_part;
  if (z.im() == 1) {
    im_part = "i";
  } else if (z.im() == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(z.im()) + "*i";
  }
  if (!has_re) return im_part;
  if (im_part.front() == '-') return to_string(z.re()) + im_part;
  return to_string(z.re()) + "+" + im_part;
}

std::string approx_string(const GaussianRational& z, int digits) {
  char buf[96];
  const double re = z.re().get_d();
  const double im = z.im().get_d();
  if (z.is_real()) {
    std::snprintf(buf, sizeof(buf), "%.*g", digits, re);
  } else {
    std::snprintf(buf, sizeof(buf), "%.*g%+.*gi", digits, re, digits, im);
  }
  return buf;
}

CirclePoint circle_point(const Rational& u) {
  const Rational u2 = u * u;
  const Rational den = 1 + u2;
  CirclePoint p{(1 - u2) / den, 2 * u / den};
  p.c.canonicalize();
  p.s.canonicalize();
  return p;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::kVariableMismatch, "matrix entry count does not match shape");
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::kVariableMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::kVariableMismatch, "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  if (r >= rows_) throw Error(ErrorKind::kIndexOutOfRange, "row index out of range");
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return ExactVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

ExactVector ExactMatrix::col(std::size_t c) const {
  if (c >= cols_) throw Error(ErrorKind::kIndexOutOfRange, "column index out of range");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::with_entry(std::size_t r, std::size_t c, const GaussianRational& v) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::kIndexOutOfRange, "entry out of range");
  ExactMatrix out = *this;
  out.entries_[r * cols_ + c] = v;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::kVariableMismatch, "matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out.entries_[i * b.cols_ + j] += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::kVariableMismatch, "matrix sum shape mismatch");
  }
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::kVariableMismatch, "matrix difference shape mismatch");
  }
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

ExactVector ExactMatrix::apply(std::span<const GaussianRational> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::kVariableMismatch, "vector length mismatch");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

ExactVector ExactMatrix::apply_left(std::span<const GaussianRational> v) const {
  if (v.size() != rows_) throw Error(ErrorKind::kVariableMismatch, "vector length mismatch");
  ExactVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[c] += v[r] * (*this)(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Mutable working copy used only inside the elimination routines.
struct Work {
  std::size_t rows;
  std::size_t cols;
  std::vector<ExactVector> a;

  explicit Work(const ExactMatrix& m) : rows(m.rows()), cols(m.cols()), a(m.rows()) {
    for (std::size_t r = 0; r < rows; ++r) a[r] = m.row(r);
  }

  ExactMatrix freeze() const { return ExactMatrix::from_rows(a, cols); }
};

void gauss_jordan(Work& w, std::vector<std::size_t>& pivots) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < w.cols && lead < w.rows; ++c) {
    std::size_t best = w.rows;
    std::size_t best_size = 0;
    for (std::size_t r = lead; r < w.rows; ++r) {
      if (w.a[r][c].is_zero()) continue;
      const std::size_t sz = w.a[r][c].bit_size();
      if (best == w.rows || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best == w.rows) continue;
    std::swap(w.a[lead], w.a[best]);

    auto& prow = w.a[lead];
    if (!prow[c].is_one()) {
      const GaussianRational inv = prow[c].inverse();
      for (std::size_t j = c; j < w.cols; ++j)
        if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t r = 0; r < w.rows; ++r) {
      if (r == lead || w.a[r][c].is_zero()) continue;
      const GaussianRational factor = w.a[r][c];
      auto& row = w.a[r];
      for (std::size_t j = c; j < w.cols; ++j)
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
    }
    pivots.push_back(c);
    ++lead;
  }
}

}  // namespace

RowEchelon row_echelon(const ExactMatrix& m) {
  Work w(m);
  std::vector<std::size_t> pivots;
  gauss_jordan(w, pivots);
  return {w.freeze(), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  Work w(m.rows() <= m.cols() ? m : m.transpose());
  std::vector<std::size_t> pivots;
  gauss_jordan(w, pivots);
  return pivots.size();
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const RowEchelon re = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : re.pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < re.pivots.size(); ++i) {
      const GaussianRational& e = re.reduced(i, free);
      if (!e.is_zero()) v[re.pivots[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::kVariableMismatch, "solve: row count mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  std::vector<GaussianRational> entries(a.rows() * (n + k));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) entries[r * (n + k) + c] = a(r, c);
    for (std::size_t c = 0; c < k; ++c) entries[r * (n + k) + n + c] = b(r, c);
  }
  const ExactMatrix aug(a.rows(), n + k, std::move(entries));
  const RowEchelon re = row_echelon(aug);

  std::vector<GaussianRational> x(n * k);
  for (std::size_t i = 0; i < re.pivots.size(); ++i) {
    const std::size_t p = re.pivots[i];
    if (p >= n) return std::nullopt;  // pivot in the right-hand side: inconsistent
    for (std::size_t c = 0; c < k; ++c) x[p * k + c] = re.reduced(i, n + c);
  }
  return ExactMatrix(n, k, std::move(x));
}

std::optional<ExactMatrix> left_inverse(const ExactMatrix& a) {
  if (rank(a) != a.cols()) return std::nullopt;
  // S A = I  <=>  A^T S^T = I.
  auto st = solve(a.transpose(), ExactMatrix::identity(a.cols()));
  if (!st) return std::nullopt;
  return st->transpose();
}

std::optional<ExactMatrix> right_inverse(const ExactMatrix& a) {
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, ExactMatrix::identity(a.rows()));
}

}  // namespace crspan
