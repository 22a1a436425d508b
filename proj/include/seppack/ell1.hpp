#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/linalg.hpp"
#include "seppack/report.hpp"

namespace seppack {

/// GF(2^k) for k = 1..4, elements as bit patterns of polynomials over GF(2).
class GF2m {
public:
  explicit GF2m(int k) : k_(k) {
    switch (k) {
    case 1: modulus_ = 0b10; break; // GF(2): reduce by x
    case 2: modulus_ = 0b111; break;
    case 3: modulus_ = 0b1011; break;
    case 4: modulus_ = 0b10011; break;
    default: throw DomainError("GF(2^k) supported for k = 1..4 only");
    }
  }

  int degree() const noexcept { return k_; }
  unsigned order() const noexcept { return 1u << k_; }
  unsigned modulus() const noexcept { return modulus_; }

  static unsigned add(unsigned a, unsigned b) noexcept { return a ^ b; }

  unsigned mul(unsigned a, unsigned b) const noexcept {
    unsigned r = 0;
    while (b) {
      if (b & 1u)
        r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & order())
        a ^= modulus_;
    }
    return r;
  }

  /// Horner evaluation; coefficients from the constant term up.
  unsigned eval(const std::vector<unsigned> &coeffs, unsigned x) const noexcept {
    unsigned r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      r = add(mul(r, x), *it);
    return r;
  }

private:
  int k_;
  unsigned modulus_ = 0;
};

/// Fixed-length binary words packed into 64-bit limbs (bit t of the word is coordinate t).
class BinaryCode {
public:
  using Word = std::vector<std::uint64_t>;

  BinaryCode(std::size_t length, std::vector<Word> words) : length_(length), words_(std::move(words)) {
    if (length_ == 0)
      throw ParameterError("code length must be >= 1");
    const std::size_t limbs = limb_count(length_);
    for (const auto &w : words_) {
      if (w.size() != limbs)
        throw ParameterError("codeword limb count does not match length");
      if (length_ % 64 && (w.back() >> (length_ % 64)))
        throw ParameterError("codeword has bits past its length");
    }
    std::vector<Word> sorted(words_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParameterError("duplicate codeword");
  }

  static std::size_t limb_count(std::size_t length) { return (length + 63) / 64; }

  static Word from_bits(std::string_view bits) {
    Word w(limb_count(bits.size()), 0);
    for (std::size_t t = 0; t < bits.size(); ++t) {
      if (bits[t] == '1')
        w[t / 64] |= std::uint64_t{1} << (t % 64);
      else if (bits[t] != '0')
        throw ParseError(std::string("non-binary character '") + bits[t] + "'");
    }
    return w;
  }
  static BinaryCode from_strings(const std::vector<std::string> &rows) {
    if (rows.empty())
      throw ParameterError("empty code");
    std::vector<Word> ws;
    for (const auto &r : rows) {
      if (r.size() != rows.front().size())
        throw ParameterError("codewords of different lengths");
      ws.push_back(from_bits(r));
    }
    return BinaryCode(rows.front().size(), std::move(ws));
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word> &words() const noexcept { return words_; }
  const Word &operator[](std::size_t i) const { return words_[i]; }

  bool bit(std::size_t i, std::size_t t) const { return (words_[i][t / 64] >> (t % 64)) & 1u; }
  std::string bits(std::size_t i) const {
    std::string s(length_, '0');
    for (std::size_t t = 0; t < length_; ++t)
      if (bit(i, t))
        s[t] = '1';
    return s;
  }
  std::vector<int> as_ints(std::size_t i) const {
    std::vector<int> out(length_);
    for (std::size_t t = 0; t < length_; ++t)
      out[t] = bit(i, t);
    return out;
  }

  std::optional<std::size_t> index_of(const Word &w) const {
    auto it = std::find(words_.begin(), words_.end(), w);
    if (it == words_.end())
      return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
  }

  /// Set by alon_rs_code at k = 1, where the code is a two-word constant code.
  bool degenerate = false;
  /// Cached minimum distance, filled by min_distance().
  mutable std::optional<std::size_t> cached_min_distance;

private:
  std::size_t length_;
  std::vector<Word> words_;
};

inline std::size_t hamming(const BinaryCode::Word &a, const BinaryCode::Word &b) {
  std::size_t d = 0;
  for (std::size_t t = 0; t < a.size(); ++t)
    d += static_cast<std::size_t>(std::popcount(a[t] ^ b[t]));
  return d;
}

inline std::size_t weight(const BinaryCode::Word &a) {
  std::size_t d = 0;
  for (auto x : a)
    d += static_cast<std::size_t>(std::popcount(x));
  return d;
}

/// Brute force over all pairs.
inline std::size_t min_distance(const BinaryCode &code) {
  if (code.size() < 2)
    throw DomainError("min_distance needs at least two codewords");
  if (code.cached_min_distance)
    return *code.cached_min_distance;
  std::size_t best = code.length() + 1;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::min(best, hamming(code[i], code[j]));
  code.cached_min_distance = best;
  return best;
}

inline constexpr int kMaxMaterializedAlonK = 3;

/// Reed-Solomon code over GF(q), q = 2^k: all polynomials of degree < q/2 (constants for k = 1)
/// evaluated at the field elements 0..q-1, each symbol written as its length-q indicator.
/// Codewords are listed in lexicographic order of the coefficient vector (constant term first).
inline BinaryCode alon_rs_code(int k) {
  if (k < 1 || k > 4)
    throw DomainError("alon_rs_code: k must be in 1..4");
  if (k > kMaxMaterializedAlonK)
    throw CapacityError("alon_rs_code(" + std::to_string(k) + ") has 2^32 codewords; not materialized");
  const GF2m field(k);
  const unsigned q = field.order();
  const unsigned dim = std::max(1u, q / 2);
  const std::size_t length = std::size_t{q} * q;

  std::size_t total = 1;
  for (unsigned t = 0; t < dim; ++t)
    total *= q;

  std::vector<BinaryCode::Word> words;
  words.reserve(total);
  std::vector<unsigned> coeffs(dim, 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    for (unsigned t = 0; t < dim; ++t) {
      coeffs[t] = static_cast<unsigned>(rest % q);
      rest /= q;
    }
    BinaryCode::Word w(BinaryCode::limb_count(length), 0);
    for (unsigned x = 0; x < q; ++x) {
      const std::size_t pos = std::size_t{x} * q + field.eval(coeffs, x);
      w[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
    words.push_back(std::move(w));
  }
  BinaryCode out(length, std::move(words));
  out.degenerate = (k == 1);
  return out;
}

/// Number of codewords at Hamming distance exactly D from codeword `u`.
inline std::size_t min_distance_neighbor_count(const BinaryCode &code, std::size_t u) {
  if (u >= code.size())
    throw DomainError("codeword index out of range");
  const std::size_t D = min_distance(code);
  std::size_t count = 0;
  for (std::size_t j = 0; j < code.size(); ++j)
    if (j != u && hamming(code[u], code[j]) == D)
      ++count;
  return count;
}

inline std::size_t min_distance_neighbor_count(const BinaryCode &code, const BinaryCode::Word &u) {
  auto idx = code.index_of(u);
  if (!idx)
    throw DomainError("word is not a codeword");
  return min_distance_neighbor_count(code, *idx);
}

/// f = 2u - (1, ..., 1).
inline Functional separating_functional(const std::vector<int> &u) {
  std::vector<Scalar> c;
  c.reserve(u.size());
  for (int b : u) {
    if (b != 0 && b != 1)
      throw DomainError("separating_functional needs a 0/1 vector");
    c.emplace_back(Rational(2 * b - 1));
  }
  return Functional(std::move(c));
}

/// f_u(x) for a 0/1 vector x, without building the functional: 2|u and x| - |x|.
inline long separating_value(const BinaryCode::Word &u, const BinaryCode::Word &x) {
  std::size_t both = 0;
  for (std::size_t t = 0; t < u.size(); ++t)
    both += static_cast<std::size_t>(std::popcount(u[t] & x[t]));
  return 2 * static_cast<long>(both) - static_cast<long>(weight(x));
}

/// Translates of the l1 ball of radius `radius` centred at the codewords.
class L1Packing {
public:
  L1Packing(BinaryCode code, Rational radius) : code_(std::move(code)), radius_(std::move(radius)) {
    if (code_.size() >= 2) {
      const Rational D(static_cast<long>(min_distance(code_)));
      if (2 * radius_ > D)
        throw PackingViolation(0, 0, "radius exceeds half the minimum distance");
    }
  }
  static L1Packing half_min_distance(BinaryCode code) {
    Rational r(static_cast<long>(min_distance(code)), 2);
    return L1Packing(std::move(code), r);
  }

  const BinaryCode &code() const noexcept { return code_; }
  const Rational &radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return code_.size(); }

private:
  BinaryCode code_;
  Rational radius_;
};

/// For every centre u, the hyperplane f_u(x) = f_u(u) - D/2 must leave every other ball on the
/// far side: f_u(u) - f_u(u') >= D for all u' != u.
inline VerificationReport verify_total_separability_l1(const L1Packing &p) {
  const BinaryCode &code = p.code();
  const std::size_t D = min_distance(code);
  if (p.radius() != Rational(static_cast<long>(D), 2))
    throw ParameterError("radius must equal D/2 = " + to_string(Rational(static_cast<long>(D), 2)));
  std::vector<Violation> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const long self = static_cast<long>(weight(code[i]));
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (i == j)
        continue;
      const long gap = self - separating_value(code[i], code[j]);
      if (gap < static_cast<long>(D))
        out.push_back({i, j, "f_u(u) - f_u(u') < D", std::to_string(gap)});
    }
  }
  return VerificationReport(std::move(out), false);
}

/// Unordered pairs at l1 distance exactly 2 * radius.
inline std::vector<std::pair<std::size_t, std::size_t>> touching_pairs(const L1Packing &p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const Rational twice = 2 * p.radius();
  if (denominator_of(twice) != 1)
    return out;
  const std::size_t target = numerator_of(twice).convert_to<std::size_t>();
  const BinaryCode &code = p.code();
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (hamming(code[i], code[j]) == target)
        out.emplace_back(i, j);
  return out;
}

/// One 0/1 string per line; '#' lines and blank lines are skipped.
inline BinaryCode parse_binary_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> rows;
  std::size_t line_no = 0, length = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line.erase(0, first);
    if (line.find_first_not_of("01") != std::string::npos)
      throw ParseError("codeword must be a 0/1 string", line_no);
    if (length == 0)
      length = line.size();
    else if (line.size() != length)
      throw ParseError("codeword length " + std::to_string(line.size()) + ", expected " + std::to_string(length), line_no);
    rows.push_back(line);
  }
  if (rows.empty())
    throw ParseError("no codewords");
  try {
    return BinaryCode::from_strings(rows);
  } catch (const ParameterError &e) {
    throw ParseError(e.what());
  }
}

inline std::string format_binary_code(const BinaryCode &code) {
  std::string out;
  out.reserve(code.size() * (code.length() + 1));
  for (std::size_t i = 0; i < code.size(); ++i) {
    out += code.bits(i);
    out += '\n';
  }
  return out;
}

} // namespace seppack
