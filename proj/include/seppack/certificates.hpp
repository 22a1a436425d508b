#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/linalg.hpp"
#include "seppack/report.hpp"
#include "seppack/spherical_codes.hpp"

namespace seppack {

struct CertificatePair {
  Vec x;
  Functional phi;
};

/// Points x_1..x_n with functionals phi_1..phi_n in R^d. Both members of an antipodal pair
/// are stored explicitly.
class SeparableCertificate {
public:
  SeparableCertificate(std::size_t dimension, std::vector<CertificatePair> pairs)
      : dimension_(dimension), pairs_(std::move(pairs)) {
    if (dimension_ == 0)
      throw ParameterError("certificate dimension must be >= 1");
    if (pairs_.empty())
      throw ParameterError("certificate needs at least one pair");
    const ScalarKind k = pairs_.front().x.kind();
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto &p = pairs_[i];
      if (p.x.dimension() != dimension_ || p.phi.dimension() != dimension_)
        throw ParameterError("pair " + std::to_string(i) + " does not have dimension " + std::to_string(dimension_));
      if (p.x.kind() != k || p.phi.kind() != k)
        throw KindError("certificate mixes rational and float entries (pair " + std::to_string(i) + ")");
    }
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<CertificatePair> &pairs() const noexcept { return pairs_; }
  const CertificatePair &operator[](std::size_t i) const { return pairs_[i]; }
  ScalarKind kind() const { return pairs_.front().x.kind(); }

  /// phi_i(x_j).
  Scalar value(std::size_t i, std::size_t j) const { return pairs_[i].phi(pairs_[j].x); }

  bool antipodal(std::size_t i, std::size_t j) const {
    return pairs_[j].x == -pairs_[i].x && pairs_[j].phi == -pairs_[i].phi;
  }

private:
  std::size_t dimension_;
  std::vector<CertificatePair> pairs_;
};

namespace detail {

// Comparisons against small rational constants, exact or with the float margin. `strict`
// comparisons must hold by more than the margin; non-strict ones get the margin as slack.
inline bool cert_eq(const Scalar &a, int c) {
  return a.is_rational() ? a.rational() == c : std::abs(a.floating() - c) <= kFloatMargin;
}
inline bool cert_le(const Scalar &a, int c) {
  return a.is_rational() ? a.rational() <= c : a.floating() <= c + kFloatMargin;
}
inline bool cert_ge(const Scalar &a, int c) {
  return a.is_rational() ? a.rational() >= c : a.floating() >= c - kFloatMargin;
}
inline bool cert_gt(const Scalar &a, int c) {
  return a.is_rational() ? a.rational() > c : a.floating() > c + kFloatMargin;
}

} // namespace detail

/// Checks, for all distinct i, j: phi_i(x_i) = 1, -1 <= phi_i(x_j) <= 0, and
/// phi_i(x_j) = -1 only if x_j = -x_i and phi_j = -phi_i.
inline VerificationReport verify_certificate(const SeparableCertificate &cert) {
  std::vector<Violation> out;
  const std::size_t n = cert.size();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar self = cert.value(i, i);
    if (!detail::cert_eq(self, 1))
      out.push_back({i, i, "phi_i(x_i) != 1", self.str()});
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Scalar v = cert.value(i, j);
      if (!detail::cert_le(v, 0))
        out.push_back({i, j, "phi_i(x_j) > 0", v.str()});
      if (!detail::cert_ge(v, -1))
        out.push_back({i, j, "phi_i(x_j) < -1", v.str()});
      else if (!detail::cert_gt(v, -1) && !cert.antipodal(i, j))
        out.push_back({i, j, "phi_i(x_j) = -1 for a non-antipodal pair", v.str()});
    }
  }
  return VerificationReport(std::move(out), cert.kind() == ScalarKind::floating);
}

/// x_i = (v_i, 1, 0), phi_i = (v_i, -alpha, 0) / (1 - alpha), followed by k appended pairs
/// (e_j, e_j*) and (-e_j, -e_j*) in the extra coordinates. Dimension is code.dimension() + 1 + k.
inline SeparableCertificate lift_from_code(const SphericalCode &code, std::size_t k) {
  if (code.alpha() >= 1)
    throw ParameterError("alpha must be < 1");
  if (code.size() == 0 && k == 0)
    throw ParameterError("empty code with k = 0 gives an empty certificate");
  auto report = verify_code(code);
  if (!report.accepted()) {
    const auto &v = report.violations().front();
    throw PreconditionError("code fails verification at (" + std::to_string(v.i) + ", " + std::to_string(v.j) +
                            "): " + v.condition);
  }

  const ScalarKind kind = code.kind();
  const std::size_t base = code.dimension();
  const std::size_t dim = base + 1 + k;
  const Scalar alpha = Scalar(code.alpha()).as(kind);
  const Scalar one = Scalar::one(kind), zero = Scalar::zero(kind);
  const Scalar scale = one / (one - alpha);

  std::vector<CertificatePair> pairs;
  pairs.reserve(code.size() + 2 * k);
  for (const Vec &v : code.vectors()) {
    std::vector<Scalar> x(dim, zero), phi(dim, zero);
    for (std::size_t t = 0; t < base; ++t) {
      x[t] = v[t];
      phi[t] = scale * v[t];
    }
    x[base] = one;
    phi[base] = scale * -alpha;
    pairs.push_back({Vec(std::move(x)), Functional(std::move(phi))});
  }
  for (std::size_t j = 0; j < k; ++j) {
    Vec e = Vec::zeros(dim, kind);
    e[base + 1 + j] = one;
    pairs.push_back({e, Functional(e)});
    pairs.push_back({-e, Functional(-e)});
  }
  return SeparableCertificate(dim, std::move(pairs));
}

struct ReducedCertificate {
  Matrix matrix;                    // (n - 2k) x (n - 2k)
  std::size_t removed_pairs = 0;    // k
  std::vector<std::size_t> survivors; // original indices, in order
};

namespace detail {

// Antipodal pairs, matched greedily; a point has at most one antipode in a valid certificate.
inline std::vector<char> antipodal_mask(const SeparableCertificate &cert, std::size_t &count) {
  std::vector<char> removed(cert.size(), 0);
  count = 0;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (removed[i])
      continue;
    for (std::size_t j = i + 1; j < cert.size(); ++j) {
      if (!removed[j] && !cert_gt(cert.value(i, j), -1) && cert.antipodal(i, j)) {
        removed[i] = removed[j] = 1;
        ++count;
        break;
      }
    }
  }
  return removed;
}

} // namespace detail

/// Removes antipodal pairs, then maps phi_i(x_j) to ((2 + eps) phi_i(x_j) + 1 - eps) / 3.
/// Requires -1 + eps <= phi_i(x_j) on the surviving pairs; eps is never shrunk here.
inline ReducedCertificate reduce_certificate(const SeparableCertificate &cert, const Rational &eps) {
  if (!(eps > 0 && eps < 1))
    throw ParameterError("eps must lie in (0, 1), got " + to_string(eps));
  auto report = verify_certificate(cert);
  if (!report.accepted())
    throw PreconditionError("certificate fails verification");

  ReducedCertificate out;
  auto removed = detail::antipodal_mask(cert, out.removed_pairs);
  for (std::size_t i = 0; i < cert.size(); ++i)
    if (!removed[i])
      out.survivors.push_back(i);

  const ScalarKind kind = cert.kind();
  const Rational floor = eps - 1;
  const double floor_d = to_double(floor);
  const std::size_t m = out.survivors.size();
  std::vector<Scalar> entries;
  entries.reserve(m * m);
  const Scalar a = Scalar(Rational((2 + eps) / 3)).as(kind);
  const Scalar b = Scalar(Rational((1 - eps) / 3)).as(kind);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t i = out.survivors[r], j = out.survivors[c];
      Scalar v = cert.value(i, j);
      if (i != j) {
        const bool ok = v.is_rational() ? v.rational() >= floor : v.floating() >= floor_d - kFloatMargin;
        if (!ok)
          throw PreconditionError("eps too large: phi_" + std::to_string(i) + "(x_" + std::to_string(j) + ") = " +
                                  v.str() + " < -1 + eps");
      }
      entries.push_back(a * v + b);
    }
  }
  out.matrix = Matrix(m, m, std::move(entries));
  return out;
}

/// min over surviving distinct pairs of 1 + phi_i(x_j). Values >= 1 (and the case of no
/// surviving pairs) give 1/2, since eps must stay inside (0, 1).
inline Rational max_admissible_epsilon(const SeparableCertificate &cert) {
  std::size_t k = 0;
  auto removed = detail::antipodal_mask(cert, k);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (removed[i])
      continue;
    for (std::size_t j = 0; j < cert.size(); ++j) {
      if (i == j || removed[j])
        continue;
      Scalar v = cert.value(i, j);
      Rational q = v.is_rational() ? v.rational() : from_double(v.floating());
      Rational s = q + 1;
      if (!best || s < *best)
        best = s;
    }
  }
  if (!best || *best >= 1)
    return Rational(1, 2);
  if (*best <= 0)
    throw PreconditionError("no admissible eps: some surviving phi_i(x_j) <= -1");
  return *best;
}

/// Largest integer strictly below 8(d + 1) / (8 - d), for d in {5, 6, 7}.
inline int hadwiger_upper_bound_smooth(int d) {
  if (d < 5 || d > 7)
    throw DomainError("hadwiger_upper_bound_smooth is defined for d = 5, 6, 7 only");
  const int num = 8 * (d + 1), den = 8 - d;
  // strict: n < num/den
  return num % den == 0 ? num / den - 1 : num / den;
}

} // namespace seppack
