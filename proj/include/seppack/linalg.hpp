#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/rational.hpp"

namespace seppack {

/// Margin for floating comparisons unless an operation says otherwise.
inline constexpr double kFloatMargin = 1e-9;

enum class ScalarKind { rational, floating };

inline const char *kind_name(ScalarKind k) { return k == ScalarKind::rational ? "rational" : "float"; }

/// Either an exact rational or a 64-bit float. Arithmetic never mixes kinds.
class Scalar {
public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(double x) : value_(x) {}
  Scalar(int n) : value_(Rational(n)) {}
  Scalar(long n) : value_(Rational(n)) {}

  static Scalar zero(ScalarKind k) { return k == ScalarKind::rational ? Scalar(Rational(0)) : Scalar(0.0); }
  static Scalar one(ScalarKind k) { return k == ScalarKind::rational ? Scalar(Rational(1)) : Scalar(1.0); }

  ScalarKind kind() const noexcept {
    return std::holds_alternative<Rational>(value_) ? ScalarKind::rational : ScalarKind::floating;
  }
  bool is_rational() const noexcept { return kind() == ScalarKind::rational; }

  const Rational &rational() const {
    if (auto *q = std::get_if<Rational>(&value_))
      return *q;
    throw KindError("expected a rational scalar, got a float");
  }
  double floating() const {
    if (auto *x = std::get_if<double>(&value_))
      return *x;
    throw KindError("expected a float scalar, got a rational");
  }
  /// Lossy view used for presentation and float-side comparisons.
  double to_double() const {
    if (auto *x = std::get_if<double>(&value_))
      return *x;
    return seppack::to_double(std::get<Rational>(value_));
  }
  bool is_zero() const { return is_rational() ? rational() == 0 : floating() == 0.0; }

  std::string str() const {
    if (is_rational())
      return to_string(rational());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", floating());
    return buf;
  }

  Scalar operator-() const { return is_rational() ? Scalar(Rational(-rational())) : Scalar(-floating()); }

  friend Scalar operator+(const Scalar &a, const Scalar &b) {
    check_same(a, b);
    return a.is_rational() ? Scalar(Rational(a.rational() + b.rational())) : Scalar(a.floating() + b.floating());
  }
  friend Scalar operator-(const Scalar &a, const Scalar &b) {
    check_same(a, b);
    return a.is_rational() ? Scalar(Rational(a.rational() - b.rational())) : Scalar(a.floating() - b.floating());
  }
  friend Scalar operator*(const Scalar &a, const Scalar &b) {
    check_same(a, b);
    return a.is_rational() ? Scalar(Rational(a.rational() * b.rational())) : Scalar(a.floating() * b.floating());
  }
  friend Scalar operator/(const Scalar &a, const Scalar &b) {
    check_same(a, b);
    if (b.is_zero())
      throw DomainError("division by zero");
    return a.is_rational() ? Scalar(Rational(a.rational() / b.rational())) : Scalar(a.floating() / b.floating());
  }
  Scalar &operator+=(const Scalar &b) { return *this = *this + b; }

  /// Exact equality; scalars of different kinds are never equal.
  friend bool operator==(const Scalar &a, const Scalar &b) {
    if (a.kind() != b.kind())
      return false;
    return a.is_rational() ? a.rational() == b.rational() : a.floating() == b.floating();
  }
  friend bool operator<(const Scalar &a, const Scalar &b) {
    check_same(a, b);
    return a.is_rational() ? a.rational() < b.rational() : a.floating() < b.floating();
  }
  friend bool operator>(const Scalar &a, const Scalar &b) { return b < a; }
  friend bool operator<=(const Scalar &a, const Scalar &b) { return !(b < a); }
  friend bool operator>=(const Scalar &a, const Scalar &b) { return !(a < b); }

  /// Converts to the requested kind (rational -> float rounds; float -> rational is exact).
  Scalar as(ScalarKind k) const {
    if (k == kind())
      return *this;
    return k == ScalarKind::floating ? Scalar(to_double()) : Scalar(from_double(floating()));
  }

private:
  static void check_same(const Scalar &a, const Scalar &b) {
    if (a.kind() != b.kind())
      throw KindError(std::string("mixed scalar kinds: ") + kind_name(a.kind()) + " and " + kind_name(b.kind()));
  }

  std::variant<Rational, double> value_;
};

/// Common kind of a range of scalars; empty ranges report rational.
inline ScalarKind common_kind(std::span<const Scalar> xs) {
  if (xs.empty())
    return ScalarKind::rational;
  ScalarKind k = xs.front().kind();
  for (const auto &x : xs)
    if (x.kind() != k)
      throw KindError("mixed scalar kinds in one object");
  return k;
}

/// Element of R^d.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  static Vec zeros(std::size_t d, ScalarKind k) { return Vec(std::vector<Scalar>(d, Scalar::zero(k))); }
  static Vec from_doubles(std::span<const double> xs) { return Vec(std::vector<Scalar>(xs.begin(), xs.end())); }
  static Vec from_ints(std::initializer_list<int> xs) { return Vec(std::vector<Scalar>(xs.begin(), xs.end())); }

  std::size_t dimension() const noexcept { return entries_.size(); }
  const Scalar &operator[](std::size_t i) const { return entries_[i]; }
  Scalar &operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  ScalarKind kind() const { return common_kind(entries_); }

  Vec operator-() const {
    Vec out(*this);
    for (auto &x : out.entries_)
      x = -x;
    return out;
  }
  friend Vec operator+(const Vec &a, const Vec &b) { return zip(a, b, [](const Scalar &x, const Scalar &y) { return x + y; }); }
  friend Vec operator-(const Vec &a, const Vec &b) { return zip(a, b, [](const Scalar &x, const Scalar &y) { return x - y; }); }
  friend Vec operator*(const Scalar &s, const Vec &v) {
    Vec out(v);
    for (auto &x : out.entries_)
      x = s * x;
    return out;
  }
  friend bool operator==(const Vec &a, const Vec &b) { return a.entries_ == b.entries_; }

  /// Squared Euclidean norm.
  Scalar norm2() const {
    Scalar acc = Scalar::zero(kind());
    for (const auto &x : entries_)
      acc += x * x;
    return acc;
  }

private:
  template <class F> static Vec zip(const Vec &a, const Vec &b, F f) {
    if (a.dimension() != b.dimension())
      throw DomainError("dimension mismatch");
    std::vector<Scalar> out;
    out.reserve(a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i)
      out.push_back(f(a[i], b[i]));
    return Vec(std::move(out));
  }

  std::vector<Scalar> entries_;
};

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw DomainError("dimension mismatch in dot product");
  if (a.empty())
    return Scalar(Rational(0));
  Scalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

inline Scalar dot(const Vec &a, const Vec &b) { return dot(a.entries(), b.entries()); }

/// Linear functional on R^d, stored by its coefficients.
class Functional {
public:
  Functional() = default;
  explicit Functional(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {}
  explicit Functional(const Vec &v) : coeffs_(v.entries().begin(), v.entries().end()) {}

  std::size_t dimension() const noexcept { return coeffs_.size(); }
  const Scalar &operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }
  ScalarKind kind() const { return common_kind(coeffs_); }

  Scalar operator()(const Vec &x) const {
    if (x.dimension() != dimension())
      throw DomainError("functional of dimension " + std::to_string(dimension()) + " applied to vector of dimension " +
                        std::to_string(x.dimension()));
    return dot(std::span<const Scalar>(coeffs_), x.entries());
  }

  Functional operator-() const {
    Functional out(*this);
    for (auto &c : out.coeffs_)
      c = -c;
    return out;
  }
  friend bool operator==(const Functional &a, const Functional &b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<Scalar> coeffs_;
};

/// Dense row-major matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DomainError("matrix entry count does not match its shape");
  }
  static Matrix filled(std::size_t rows, std::size_t cols, const Scalar &value) {
    return Matrix(rows, cols, std::vector<Scalar>(rows * cols, value));
  }
  static Matrix identity(std::size_t n) {
    Matrix m = filled(n, n, Scalar(Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = Scalar(Rational(1));
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<Rational>> &rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
    std::vector<Scalar> e;
    e.reserve(r * c);
    for (const auto &row : rows) {
      if (row.size() != c)
        throw DomainError("ragged matrix rows");
      for (const auto &x : row)
        e.emplace_back(x);
    }
    return Matrix(r, c, std::move(e));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const Scalar &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  ScalarKind kind() const { return common_kind(entries_); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Exact rank of a rational matrix by fraction-free (Bareiss) elimination.
inline std::size_t rank_exact(const Matrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  if (m.kind() != ScalarKind::rational)
    throw KindError("rank_exact requires rational entries");

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, denominator_of(m(i, j).rational()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational &q = m(i, j).rational();
      a[i][j] = numerator_of(q) * (l / denominator_of(q));
    }
  }

  std::size_t rank = 0;
  Integer prev_pivot = 1;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Trace bound on the rank: (sum_i a_ii)^2 / sum_ij a_ij^2. Same kind as the input.
inline Scalar rank_lower_bound_trace(const Matrix &m) {
  if (!m.square())
    throw DomainError("rank_lower_bound_trace requires a square matrix");
  const ScalarKind k = m.kind();
  Scalar trace = Scalar::zero(k), frob = Scalar::zero(k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    trace += m(i, i);
    for (std::size_t j = 0; j < m.cols(); ++j)
      frob += m(i, j) * m(i, j);
  }
  if (frob.is_zero())
    throw DomainError("rank_lower_bound_trace of the zero matrix");
  return trace * trace / frob;
}

/// Generator used everywhere randomness appears; its output sequence is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// One standard normal pair by the Box-Muller transform.
inline std::pair<double, double> gaussian_pair(Rng &rng) {
  const double u1 = 1.0 - uniform01(rng); // (0, 1]
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

/// Uniform point in the closed Euclidean unit ball of R^d, as raw doubles.
/// Direction from normalized Box-Muller Gaussians, radius U^(1/d).
inline std::vector<double> sample_unit_ball_raw(std::size_t d, Rng &rng) {
  if (d == 0)
    throw DomainError("sample_unit_ball needs d >= 1");
  std::vector<double> x(d);
  double n2 = 0;
  do {
    for (std::size_t i = 0; i < d; i += 2) {
      auto [g0, g1] = gaussian_pair(rng);
      x[i] = g0;
      if (i + 1 < d)
        x[i + 1] = g1;
    }
    n2 = 0;
    for (double v : x)
      n2 += v * v;
  } while (n2 == 0.0);
  const double radius = std::pow(uniform01(rng), 1.0 / static_cast<double>(d));
  const double scale = radius / std::sqrt(n2);
  for (double &v : x)
    v *= scale;
  // Rounding can push the norm a hair past 1; pull it back inside.
  double m2 = 0;
  for (double v : x)
    m2 += v * v;
  if (m2 > 1.0) {
    const double s = 1.0 / std::sqrt(m2);
    for (double &v : x)
      v *= s;
    m2 = 0;
    for (double v : x)
      m2 += v * v;
    if (m2 > 1.0)
      for (double &v : x)
        v = std::nextafter(v, 0.0);
  }
  return x;
}

inline Vec sample_unit_ball(std::size_t d, Rng &rng) {
  auto raw = sample_unit_ball_raw(d, rng);
  return Vec::from_doubles(raw);
}

} // namespace seppack
