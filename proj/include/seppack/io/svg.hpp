#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seppack/planar/separability.hpp"

namespace seppack::io {

struct SvgOptions {
  /// Separating lines to draw; duplicates (same geometric line) are drawn once.
  std::vector<planar::SeparatingLine> lines;
  Rational margin = Rational(1, 2);
  std::string fill = "#dbe7f5";
  std::string stroke = "#1f4e89";
  std::string line_stroke = "#c0392b";
};

namespace detail {

/// Fixed six-decimal rendering of an exact rational, rounded half away from zero.
inline std::string fixed6(const Rational &q) {
  const Integer scale = 1000000;
  const Integer num = numerator_of(q) * scale, den = denominator_of(q);
  Integer r = boost::multiprecision::abs(num);
  r = (2 * r + den) / (2 * den);
  const bool neg = num < 0 && r != 0;
  const Integer ip = r / scale, fp = r % scale;
  std::string frac = fp.str();
  frac.insert(0, 6 - frac.size(), '0');
  return (neg ? "-" : "") + ip.str() + "." + frac;
}

// Canonical (a, b, c) for {a x + b y = c}: first nonzero of (a, b) scaled to 1.
inline std::array<Rational, 3> canonical_line(const planar::Point &n, const Rational &c) {
  const Rational s = n.x != 0 ? n.x : n.y;
  return {Rational(n.x / s), Rational(n.y / s), Rational(c / s)};
}

} // namespace detail

/// One closed path per translate plus clipped overlay lines. y is flipped so the picture has
/// the usual orientation. Output depends only on the input.
inline std::string render_svg(const planar::PlanarPacking &P, const SvgOptions &opt = {}) {
  using planar::Point;
  const auto &K = P.body();
  Rational x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (const Point &c : P.centers())
    for (const Point &v : K.vertices()) {
      const Point q = c + v;
      if (first) {
        x0 = x1 = q.x;
        y0 = y1 = q.y;
        first = false;
      }
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y);
      y1 = std::max(y1, q.y);
    }
  x0 -= opt.margin;
  y0 -= opt.margin;
  x1 += opt.margin;
  y1 += opt.margin;

  auto X = [](const Rational &x) { return detail::fixed6(x); };
  auto Y = [](const Rational &y) { return detail::fixed6(Rational(-y)); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(x0) << " " << Y(y1) << " "
      << detail::fixed6(Rational(x1 - x0)) << " " << detail::fixed6(Rational(y1 - y0)) << "\">\n";
  out << "<g fill=\"" << opt.fill << "\" stroke=\"" << opt.stroke << "\" stroke-width=\"0.02\">\n";
  for (const Point &c : P.centers()) {
    out << "<path d=\"";
    for (std::size_t i = 0; i < K.size(); ++i) {
      const Point q = c + K.vertex(i);
      out << (i ? " L " : "M ") << X(q.x) << " " << Y(q.y);
    }
    out << " Z\"/>\n";
  }
  out << "</g>\n";

  std::vector<std::array<Rational, 3>> seen;
  std::vector<std::array<Point, 2>> segments;
  for (const auto &l : opt.lines) {
    auto key = detail::canonical_line(l.normal, l.offset);
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      continue;
    seen.push_back(key);
    // Clip a x + b y = c to the box.
    const auto &[a, b, c] = key;
    std::vector<Point> hits;
    auto add = [&](const Point &p) {
      if (p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1 && std::find(hits.begin(), hits.end(), p) == hits.end())
        hits.push_back(p);
    };
    if (b != 0) {
      add({x0, Rational((c - a * x0) / b)});
      add({x1, Rational((c - a * x1) / b)});
    }
    if (a != 0) {
      add({Rational((c - b * y0) / a), y0});
      add({Rational((c - b * y1) / a), y1});
    }
    if (hits.size() >= 2) {
      std::sort(hits.begin(), hits.end());
      segments.push_back({hits.front(), hits.back()});
    }
  }
  if (!segments.empty()) {
    out << "<g stroke=\"" << opt.line_stroke << "\" stroke-width=\"0.03\">\n";
    for (const auto &s : segments)
      out << "<line x1=\"" << X(s[0].x) << "\" y1=\"" << Y(s[0].y) << "\" x2=\"" << X(s[1].x) << "\" y2=\"" << Y(s[1].y)
          << "\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace seppack::io
