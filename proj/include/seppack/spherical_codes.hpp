#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <future>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/linalg.hpp"
#include "seppack/report.hpp"

namespace seppack {

/// Unit vectors v_1..v_m in R^dimension together with the coherence parameter alpha < 1.
/// The intended property is <v_i, v_j> in (-1 + 2 alpha, alpha] for i != j; verify_code checks it.
class SphericalCode {
public:
  SphericalCode(std::size_t dimension, std::vector<Vec> vectors, Rational alpha)
      : dimension_(dimension), vectors_(std::move(vectors)), alpha_(std::move(alpha)) {
    if (dimension_ == 0)
      throw ParameterError("spherical code needs dimension >= 1");
    if (alpha_ >= 1)
      throw ParameterError("alpha must be < 1, got " + to_string(alpha_));
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      const Vec &v = vectors_[i];
      if (v.dimension() != dimension_)
        throw ParameterError("vector " + std::to_string(i) + " has dimension " + std::to_string(v.dimension()));
      if (v.kind() != vectors_.front().kind())
        throw KindError("spherical code mixes rational and float vectors");
      if (!unit_norm(v))
        throw ParameterError("vector " + std::to_string(i) + " is not a unit vector (norm^2 = " + v.norm2().str() + ")");
    }
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<Vec> &vectors() const noexcept { return vectors_; }
  const Vec &operator[](std::size_t i) const { return vectors_[i]; }
  const Rational &alpha() const noexcept { return alpha_; }
  ScalarKind kind() const { return vectors_.empty() ? ScalarKind::rational : vectors_.front().kind(); }

  static bool unit_norm(const Vec &v) {
    Scalar n2 = v.norm2();
    if (n2.is_rational())
      return n2.rational() == 1;
    return std::abs(n2.floating() - 1.0) <= kFloatMargin;
  }

private:
  std::size_t dimension_;
  std::vector<Vec> vectors_;
  Rational alpha_;
};

/// Checks unit norms and that every distinct inner product lies in (-1 + 2 alpha, alpha].
/// Exact for rational codes. Float codes need the strict lower bound to hold by more than
/// kFloatMargin; the closed upper bound is allowed kFloatMargin of slack.
inline VerificationReport verify_code(const SphericalCode &code) {
  std::vector<Violation> out;
  const bool exact = code.kind() == ScalarKind::rational;
  const Rational lower = 2 * code.alpha() - 1;
  const double lower_d = to_double(lower), alpha_d = to_double(code.alpha());
  for (std::size_t i = 0; i < code.size(); ++i)
    if (!SphericalCode::unit_norm(code[i]))
      out.push_back({i, i, "unit-norm", code[i].norm2().str()});
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      Scalar p = dot(code[i], code[j]);
      bool low, high;
      if (exact) {
        low = !(p.rational() > lower);
        high = p.rational() > code.alpha();
      } else {
        low = !(p.floating() > lower_d + kFloatMargin);
        high = p.floating() > alpha_d + kFloatMargin;
      }
      if (low)
        out.push_back({i, j, "inner-product-at-or-below-2alpha-1", p.str()});
      if (high)
        out.push_back({i, j, "inner-product-above-alpha", p.str()});
    }
  }
  return VerificationReport(std::move(out), !exact);
}

/// Largest |<v_i, v_j>| over distinct pairs, in floating point.
inline double coherence(const SphericalCode &code) {
  double best = 0;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::max(best, std::abs(dot(code[i], code[j]).to_double()));
  return best;
}

// ---------------------------------------------------------------------------
// Deletion method

/// p = (sqrt(8)/3)^d bounds the chance that two uniform ball points are within 2/sqrt(3)
/// (or that their sum is); sampling k = ceil(1/(2p)) points leaves about k - p k^2 survivors.
/// Seed used when the caller gives none.
inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct DeletionParameters {
  std::size_t dimension = 0;
  double p = 0;
  std::size_t k = 0;
  double expected_survivors = 0; // k - p k^2
};

inline DeletionParameters deletion_parameters(std::size_t d) {
  if (d < 2)
    throw DomainError("deletion_search needs d >= 2");
  DeletionParameters out;
  out.dimension = d;
  out.p = std::exp(static_cast<double>(d) * std::log(std::sqrt(8.0) / 3.0));
  out.k = static_cast<std::size_t>(std::ceil(1.0 / (2.0 * out.p)));
  const double k = static_cast<double>(out.k);
  out.expected_survivors = k - out.p * k * k;
  return out;
}

struct DeletionResult {
  SphericalCode code;
  DeletionParameters parameters;
  std::uint64_t seed = 0;     // seed of the winning trial
  std::size_t trial = 0;      // index of the winning trial
  std::size_t survivors = 0;  // after the distance test, before the margin guard
  std::size_t guard_removed = 0;
};

namespace detail {

struct TrialOutcome {
  std::vector<std::vector<double>> vectors;
  std::size_t survivors = 0;
  std::size_t guard_removed = 0;
};

inline TrialOutcome deletion_trial(std::size_t d, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    pts.push_back(sample_unit_ball_raw(d, rng));

  // Pairs in lexicographic order; a bad pair loses its higher index. The test uses the raw
  // (unnormalized) samples: ||x_i - x_j||^2 <= 4/3 or ||x_i + x_j||^2 <= 4/3.
  constexpr double threshold = 4.0 / 3.0;
  std::vector<char> alive(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (!alive[i])
      continue;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!alive[j])
        continue;
      double minus = 0, plus = 0;
      for (std::size_t t = 0; t < d; ++t) {
        const double a = pts[i][t], b = pts[j][t];
        minus += (a - b) * (a - b);
        plus += (a + b) * (a + b);
      }
      if (minus <= threshold || plus <= threshold)
        alive[j] = 0;
    }
  }

  TrialOutcome out;
  for (std::size_t i = 0; i < k; ++i) {
    if (!alive[i])
      continue;
    double n2 = 0;
    for (double v : pts[i])
      n2 += v * v;
    const double s = 1.0 / std::sqrt(n2);
    std::vector<double> u(pts[i]);
    for (double &v : u)
      v *= s;
    out.vectors.push_back(std::move(u));
  }
  out.survivors = out.vectors.size();

  // Float guard: the exact argument gives products strictly inside (-1/3, 1/3); drop any
  // survivor whose rounded product is not inside by kFloatMargin (higher index again).
  std::vector<char> keep(out.vectors.size(), 1);
  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    if (!keep[i])
      continue;
    for (std::size_t j = i + 1; j < out.vectors.size(); ++j) {
      if (!keep[j])
        continue;
      double p = 0;
      for (std::size_t t = 0; t < d; ++t)
        p += out.vectors[i][t] * out.vectors[j][t];
      if (std::abs(p) >= 1.0 / 3.0 - kFloatMargin)
        keep[j] = 0;
    }
  }
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < out.vectors.size(); ++i)
    if (keep[i])
      kept.push_back(std::move(out.vectors[i]));
  out.guard_removed = out.vectors.size() - kept.size();
  out.vectors = std::move(kept);
  return out;
}

} // namespace detail

/// Deletion-method search for unit vectors in R^d with pairwise inner products in (-1/3, 1/3).
/// Runs `trials` independent trials with seeds seed, seed+1, ... and keeps the largest result
/// (lowest trial index on ties), so the output depends only on (d, seed, trials).
inline DeletionResult deletion_search(std::size_t d, std::uint64_t seed, std::size_t trials = 1) {
  const DeletionParameters params = deletion_parameters(d);
  if (trials == 0)
    throw ParameterError("trials must be >= 1");

  std::vector<detail::TrialOutcome> outcomes(trials);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(trials, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t t = w; t < trials; t += workers)
        outcomes[t] = detail::deletion_trial(d, params.k, seed + t);
    }));
  }
  for (auto &j : jobs)
    j.get();

  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t)
    if (outcomes[t].vectors.size() > outcomes[best].vectors.size())
      best = t;

  std::vector<Vec> vecs;
  for (const auto &v : outcomes[best].vectors)
    vecs.push_back(Vec::from_doubles(v));
  return DeletionResult{SphericalCode(d, std::move(vecs), Rational(1, 3)), params, seed + best, best,
                        outcomes[best].survivors, outcomes[best].guard_removed};
}

// ---------------------------------------------------------------------------
// Code files

enum class NormPolicy {
  strict,       ///< rows must already be unit length up to 1e-6; they are renormalized
  normalize_all ///< any nonzero row is scaled to unit length
};

inline constexpr double kCodeFileNormTolerance = 1e-6;

/// Reads a code table: '#' comments, one vector per line as whitespace-separated decimals.
inline SphericalCode parse_code_file(std::string_view text, const Rational &alpha,
                                     NormPolicy policy = NormPolicy::strict) {
  std::vector<std::vector<double>> rows;
  std::size_t dim = 0, line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      double x = 0;
      const char *b = tok.data(), *e = tok.data() + tok.size();
      if (*b == '+')
        ++b;
      auto [ptr, ec] = std::from_chars(b, e, x);
      if (ec != std::errc() || ptr != e || !std::isfinite(x))
        throw ParseError("non-numeric token '" + tok + "'", line_no);
      row.push_back(x);
    }
    if (dim == 0)
      dim = row.size();
    else if (row.size() != dim)
      throw ParseError("expected " + std::to_string(dim) + " coordinates, found " + std::to_string(row.size()), line_no);
    double n2 = 0;
    for (double x : row)
      n2 += x * x;
    const double norm = std::sqrt(n2);
    if (norm == 0.0)
      throw ParseError("zero vector", line_no);
    if (policy == NormPolicy::strict && std::abs(norm - 1.0) > kCodeFileNormTolerance)
      throw ParseError("norm " + std::to_string(norm) + " deviates from 1 by more than 1e-6", line_no);
    for (double &x : row)
      x /= norm;
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw ParseError("no vectors in code file");
  std::vector<Vec> vecs;
  for (const auto &r : rows)
    vecs.push_back(Vec::from_doubles(r));
  return SphericalCode(dim, std::move(vecs), alpha);
}

/// Writes vectors in the code-file format with round-trip precision.
inline std::string format_code_file(const SphericalCode &code, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty())
    out << "# " << comment << "\n";
  for (const auto &v : code.vectors()) {
    for (std::size_t i = 0; i < v.dimension(); ++i) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v[i].to_double());
      out << (i ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace seppack
