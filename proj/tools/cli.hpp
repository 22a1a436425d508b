#pragma once

// The seppack command line, callable in-process: run(args, in, out, err) -> exit code.
// 0 accepted / success, 1 rejected, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seppack/io/json.hpp"
#include "seppack/io/manifest.hpp"
#include "seppack/io/svg.hpp"
#include "seppack/seppack.hpp"

namespace seppack::cli {

using io::Json;

enum Exit : int { ok = 0, rejected = 1, usage = 2 };

struct Context {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  io::RunManifest manifest{};

  std::string read_input(const std::string &path) {
    std::string data;
    if (path == "-") {
      data.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f)
        throw ParseError("cannot open '" + path + "'");
      data.assign(std::istreambuf_iterator<char>(f), {});
    }
    manifest.artifacts["in:" + path] = io::sha256_hex(data);
    return data;
  }

  void write_output(const std::string &path, const std::string &data) {
    manifest.artifacts["out:" + (path.empty() ? std::string("-") : path)] = io::sha256_hex(data);
    if (path.empty() || path == "-") {
      out << data;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
      throw ParseError("cannot write '" + path + "'");
    f << data;
  }

  void emit(const Json &j) { out << j.dump(2) << "\n"; }
};

inline planar::SymmetricPolygon body_named(Context &ctx, const std::string &spec) {
  if (spec == "square")
    return planar::square_body();
  if (spec == "hexagon")
    return planar::hexagon_body();
  if (spec == "octagon")
    return planar::octagon_body();
  if (spec == "elongated-octagon")
    return planar::elongated_octagon_body();
  const Json j = io::parse_json_text(ctx.read_input(spec));
  return io::body_from_json(j.contains("body") ? j.at("body") : j);
}

// ---------------------------------------------------------------------------
// code

inline int code_search(Context &ctx, std::size_t dim, std::size_t trials, const std::string &out_path) {
  const auto res = deletion_search(dim, ctx.seed, trials);
  const auto report = verify_code(res.code);
  ctx.manifest.parameters = {{"dim", dim}, {"trials", trials}};
  ctx.manifest.verdicts = {{"vectors", res.code.size()}, {"verdict", report.verdict()}};
  if (!out_path.empty())
    ctx.write_output(out_path, format_code_file(res.code, "deletion search d=" + std::to_string(dim) +
                                                              " seed=" + std::to_string(res.seed)));
  const Json summary = {{"dimension", dim},
                        {"p", res.parameters.p},
                        {"k", res.parameters.k},
                        {"expected_survivors", res.parameters.expected_survivors},
                        {"vectors", res.code.size()},
                        {"guard_removed", res.guard_removed},
                        {"winning_seed", res.seed},
                        {"coherence", coherence(res.code)},
                        {"verdict", report.verdict()}};
  if (ctx.json)
    ctx.emit(summary);
  else {
    ctx.out << "d=" << dim << " k=" << res.parameters.k << " p=" << res.parameters.p
            << " expected>=" << res.parameters.expected_survivors << "\n";
    ctx.out << "vectors: " << res.code.size() << " (seed " << res.seed << ", coherence " << coherence(res.code) << ")\n";
    ctx.out << "verdict: " << report.verdict() << "\n";
    if (out_path.empty())
      ctx.out << format_code_file(res.code);
  }
  return report.accepted() ? ok : rejected;
}

inline int code_verify(Context &ctx, const std::string &alpha, bool normalize, const std::string &file) {
  const Rational a = parse_rational(alpha);
  const auto code = parse_code_file(ctx.read_input(file), a, normalize ? NormPolicy::normalize_all : NormPolicy::strict);
  const auto report = verify_code(code);
  ctx.manifest.parameters = {{"alpha", to_string(a)}, {"file", file}};
  ctx.manifest.verdicts = {{"verdict", report.verdict()}};
  if (ctx.json) {
    Json j = io::to_json(report);
    j["dimension"] = code.dimension();
    j["vectors"] = code.size();
    j["coherence"] = coherence(code);
    ctx.emit(j);
  } else {
    ctx.out << code.size() << " vectors in R^" << code.dimension() << ", coherence " << coherence(code) << "\n";
    for (const auto &v : report.violations())
      ctx.out << "  violation (" << v.i << ", " << v.j << "): " << v.condition << " [" << v.witness << "]\n";
    ctx.out << "verdict: " << report.verdict() << "\n";
  }
  return report.accepted() ? ok : rejected;
}

// ---------------------------------------------------------------------------
// cert

inline void print_report(Context &ctx, const VerificationReport &r) {
  for (const auto &v : r.violations())
    ctx.out << "  violation (" << v.i << ", " << v.j << "): " << v.condition << " [" << v.witness << "]\n";
  ctx.out << "verdict: " << r.verdict() << "\n";
}

inline int cert_lift(Context &ctx, const std::string &code_file, const std::string &alpha, std::size_t k,
                     bool normalize, const std::string &out_path) {
  const auto code = parse_code_file(ctx.read_input(code_file), parse_rational(alpha),
                                    normalize ? NormPolicy::normalize_all : NormPolicy::strict);
  const auto cert = lift_from_code(code, k);
  const auto report = verify_certificate(cert);
  ctx.manifest.parameters = {{"code", code_file}, {"alpha", alpha}, {"k", k}};
  ctx.manifest.verdicts = {{"n", cert.size()}, {"dimension", cert.dimension()}, {"verdict", report.verdict()}};
  const std::string doc = io::to_json(cert).dump() + "\n";
  if (!out_path.empty())
    ctx.write_output(out_path, doc);
  if (ctx.json)
    ctx.emit({{"n", cert.size()}, {"dimension", cert.dimension()}, {"report", io::to_json(report)}});
  else if (out_path.empty())
    ctx.out << doc;
  else {
    ctx.out << "certificate: n=" << cert.size() << " in R^" << cert.dimension() << "\n";
    print_report(ctx, report);
  }
  return report.accepted() ? ok : rejected;
}

inline int cert_verify(Context &ctx, const std::string &file) {
  const auto cert = io::certificate_from_json(io::parse_json_text(ctx.read_input(file)));
  const auto report = verify_certificate(cert);
  ctx.manifest.parameters = {{"file", file}};
  ctx.manifest.verdicts = {{"verdict", report.verdict()}};
  if (ctx.json) {
    Json j = io::to_json(report);
    j["n"] = cert.size();
    j["dimension"] = cert.dimension();
    ctx.emit(j);
  } else {
    ctx.out << "certificate: n=" << cert.size() << " in R^" << cert.dimension() << "\n";
    print_report(ctx, report);
  }
  return report.accepted() ? ok : rejected;
}

inline int cert_reduce(Context &ctx, const std::string &file, const std::string &eps_text) {
  const auto cert = io::certificate_from_json(io::parse_json_text(ctx.read_input(file)));
  const Rational eps = eps_text.empty() ? max_admissible_epsilon(cert) : parse_rational(eps_text);
  const auto red = reduce_certificate(cert, eps);
  const std::size_t m = red.matrix.rows();
  Json j = {{"eps", to_string(eps)}, {"removed_pairs", red.removed_pairs}, {"size", m}};
  const long bound = static_cast<long>(cert.dimension()) - static_cast<long>(red.removed_pairs) + 1;
  j["rank_bound"] = bound;
  bool ok_rank = true;
  if (m > 0) {
    const auto rank = red.matrix.kind() == ScalarKind::rational ? std::optional<std::size_t>(rank_exact(red.matrix))
                                                                : std::nullopt;
    const Scalar trace = rank_lower_bound_trace(red.matrix);
    j["trace_bound"] = trace.str();
    if (rank) {
      j["rank"] = *rank;
      ok_rank = static_cast<long>(*rank) <= bound;
    }
  }
  Json rows = Json::array();
  for (std::size_t r = 0; r < m; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m; ++c)
      row.push_back(io::to_json(red.matrix(r, c)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["rank_within_bound"] = ok_rank;
  ctx.manifest.parameters = {{"file", file}, {"eps", to_string(eps)}};
  ctx.manifest.verdicts = {{"rank_within_bound", ok_rank}, {"removed_pairs", red.removed_pairs}};
  if (ctx.json)
    ctx.emit(j);
  else {
    ctx.out << "eps = " << to_string(eps) << ", removed antipodal pairs k = " << red.removed_pairs << ", matrix " << m
            << "x" << m << "\n";
    if (j.contains("rank"))
      ctx.out << "rank = " << j["rank"].get<std::size_t>() << " (bound d-k+1 = " << bound << ")\n";
    if (j.contains("trace_bound"))
      ctx.out << "trace bound = " << j["trace_bound"].get<std::string>() << "\n";
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c)
        ctx.out << (c ? " " : "") << red.matrix(r, c).str();
      ctx.out << "\n";
    }
  }
  return ok_rank ? ok : rejected;
}

inline int cert_bound(Context &ctx, int d) {
  const int b = hadwiger_upper_bound_smooth(d);
  ctx.manifest.parameters = {{"dim", d}};
  ctx.manifest.verdicts = {{"bound", b}};
  if (ctx.json)
    ctx.emit({{"dimension", d}, {"bound", b}});
  else
    ctx.out << b << "\n";
  return ok;
}

// ---------------------------------------------------------------------------
// ell1

inline int ell1_build(Context &ctx, int k, const std::string &out_path) {
  const auto code = alon_rs_code(k);
  ctx.manifest.parameters = {{"k", k}};
  ctx.manifest.verdicts = {{"codewords", code.size()}, {"length", code.length()}};
  const std::string text = format_binary_code(code);
  if (ctx.json && !out_path.empty()) {
    ctx.write_output(out_path, text);
    ctx.emit({{"k", k},
              {"length", code.length()},
              {"codewords", code.size()},
              {"min_distance", min_distance(code)},
              {"degenerate", code.degenerate}});
  } else {
    ctx.write_output(out_path, text);
    if (!out_path.empty())
      ctx.out << code.size() << " codewords of length " << code.length() << (code.degenerate ? " (degenerate)" : "")
              << "\n";
  }
  return ok;
}

inline int ell1_verify(Context &ctx, const std::string &file) {
  auto code = parse_binary_code(ctx.read_input(file));
  if (code.size() < 2)
    throw ParseError("need at least two codewords");
  const auto packing = L1Packing::half_min_distance(std::move(code));
  const auto report = verify_total_separability_l1(packing);
  const std::size_t D = min_distance(packing.code());
  ctx.manifest.parameters = {{"file", file}};
  ctx.manifest.verdicts = {{"verdict", report.verdict()}, {"min_distance", D}};
  if (ctx.json) {
    Json j = io::to_json(report);
    j["codewords"] = packing.size();
    j["min_distance"] = D;
    j["radius"] = to_string(packing.radius());
    ctx.emit(j);
  } else {
    ctx.out << packing.size() << " balls of radius " << to_string(packing.radius()) << " in l1^" << packing.code().length()
            << ", D = " << D << "\n";
    print_report(ctx, report);
  }
  return report.accepted() ? ok : rejected;
}

inline int ell1_neighbors(Context &ctx, const std::string &file, std::optional<std::size_t> index) {
  const auto code = parse_binary_code(ctx.read_input(file));
  if (code.size() < 2)
    throw ParseError("need at least two codewords");
  const std::size_t D = min_distance(code);
  std::vector<std::size_t> counts;
  if (index) {
    if (*index >= code.size())
      throw ParameterError("index out of range");
    counts.push_back(min_distance_neighbor_count(code, *index));
  } else {
    for (std::size_t i = 0; i < code.size(); ++i)
      counts.push_back(min_distance_neighbor_count(code, i));
  }
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  ctx.manifest.parameters = {{"file", file}};
  ctx.manifest.verdicts = {{"min", *lo}, {"max", *hi}};
  if (ctx.json)
    ctx.emit({{"min_distance", D}, {"min_neighbors", *lo}, {"max_neighbors", *hi}});
  else
    ctx.out << "D = " << D << ", neighbours at distance D: " << (*lo == *hi ? std::to_string(*lo)
                                                                            : std::to_string(*lo) + ".." + std::to_string(*hi))
            << "\n";
  return ok;
}

// ---------------------------------------------------------------------------
// planar

inline planar::PlanarPacking load_packing(Context &ctx, const std::string &file) {
  auto data = io::packing_data_from_json(io::parse_json_text(ctx.read_input(file)));
  return planar::PlanarPacking(std::move(data.body), std::move(data.centers));
}

inline int planar_classify(Context &ctx, const std::string &body) {
  const auto K = body_named(ctx, body);
  const auto qh = planar::is_quasi_hexagon(K);
  const auto cls = planar::classify(K);
  Json lengths = Json::array();
  for (std::size_t k = 0; k < K.size(); ++k)
    lengths.push_back(to_string(K.edge_gauge_length(k)));
  Json j = {{"class", planar::class_name(cls)}, {"quasi_hexagon", qh.quasi_hexagon}, {"edge_gauge_lengths", lengths}};
  if (qh.witness)
    j["witness"] = {{"u1", io::to_json(qh.witness->u1)}, {"u2", io::to_json(qh.witness->u2)}};
  ctx.manifest.parameters = {{"body", body}};
  ctx.manifest.verdicts = {{"class", planar::class_name(cls)}};
  if (ctx.json)
    ctx.emit(j);
  else {
    ctx.out << "class: " << planar::class_name(cls) << "\n";
    ctx.out << "quasi hexagon: " << (qh.quasi_hexagon ? "yes" : "no") << "\n";
    if (qh.witness)
      ctx.out << "witness: u1 = " << planar::to_string(qh.witness->u1) << ", u2 = " << planar::to_string(qh.witness->u2)
              << "\n";
  }
  return ok;
}

inline int planar_pack(Context &ctx, const std::string &body, std::size_t n, const std::string &out_path) {
  const auto K = body_named(ctx, body);
  const auto P = planar::generate_packing(K, n);
  const auto g = planar::contact_graph(P);
  const auto cls = planar::classify(K);
  ctx.manifest.parameters = {{"body", body}, {"n", n}};
  ctx.manifest.verdicts = {{"contacts", g.edges.size()}, {"formula", planar::csep_formula(cls, n)}};
  const std::string doc = io::to_json(P).dump() + "\n";
  if (!out_path.empty() || !ctx.json)
    ctx.write_output(out_path, doc);
  if (ctx.json)
    ctx.emit({{"class", planar::class_name(cls)},
              {"n", n},
              {"contacts", g.edges.size()},
              {"formula", planar::csep_formula(cls, n)},
              {"max_degree", g.max_degree()}});
  return ok;
}

inline int planar_contacts(Context &ctx, const std::string &file) {
  const auto P = load_packing(ctx, file);
  const auto g = planar::contact_graph(P);
  ctx.manifest.parameters = {{"file", file}};
  ctx.manifest.verdicts = {{"contacts", g.edges.size()}, {"max_degree", g.max_degree()}};
  Json edges = Json::array();
  for (auto [i, j] : g.edges)
    edges.push_back({i, j});
  if (ctx.json)
    ctx.emit({{"n", g.n}, {"contacts", g.edges.size()}, {"max_degree", g.max_degree()}, {"edges", edges}});
  else {
    ctx.out << "n = " << g.n << ", contacts = " << g.edges.size() << ", max degree = " << g.max_degree() << "\n";
    for (auto [i, j] : g.edges)
      ctx.out << i << " " << j << "\n";
  }
  return ok;
}

inline int planar_verify(Context &ctx, const std::string &file) {
  const auto P = load_packing(ctx, file);
  const auto g = planar::contact_graph(P);
  const auto r = planar::verify_total_separability(P, g);
  ctx.manifest.parameters = {{"file", file}};
  ctx.manifest.verdicts = {{"separable", r.separable}, {"contacts", g.edges.size()}};
  if (ctx.json) {
    Json lines = Json::array(), blocked = Json::array();
    for (const auto &l : r.lines)
      lines.push_back({{"i", l.i}, {"j", l.j}, {"normal", io::to_json(l.normal)}, {"offset", to_string(l.offset)}});
    for (const auto &b : r.blocked)
      blocked.push_back({{"i", b.i}, {"j", b.j}, {"blocking", b.blocking}});
    ctx.emit({{"separable", r.separable}, {"contacts", g.edges.size()}, {"lines", lines}, {"blocked", blocked}});
  } else {
    ctx.out << "contacts: " << g.edges.size() << "\n";
    for (const auto &l : r.lines)
      ctx.out << "  " << l.i << "-" << l.j << ": " << planar::to_string(l.normal) << " . x = " << to_string(l.offset)
              << "\n";
    for (const auto &b : r.blocked) {
      ctx.out << "  " << b.i << "-" << b.j << ": no separating line; blocked by";
      for (auto t : b.blocking)
        ctx.out << " " << t;
      ctx.out << "\n";
    }
    ctx.out << "verdict: " << (r.separable ? "totally separable" : "not totally separable") << "\n";
  }
  return r.separable ? ok : rejected;
}

inline int planar_measure(Context &ctx, const std::string &body, bool uniform) {
  const auto K = body_named(ctx, body);
  const auto mu = uniform ? planar::build_uniform_measure(K) : planar::build_pi_measure(K);
  Json pieces = Json::array();
  for (std::size_t k = 0; k < mu.pieces().size(); ++k)
    for (const auto &pc : mu.pieces()[k])
      pieces.push_back({{"edge", k}, {"t0", to_string(pc.t0)}, {"t1", to_string(pc.t1)}, {"rate", to_string(pc.rate)}});
  Json zeros = Json::array();
  for (const auto &z : mu.zero_arcs())
    zeros.push_back({{"edge", z.edge}, {"t0", to_string(z.t0)}, {"t1", to_string(z.t1)}});
  ctx.manifest.parameters = {{"body", body}, {"uniform", uniform}};
  ctx.manifest.verdicts = {{"total_mass", to_string(mu.total_mass())}};
  if (ctx.json)
    ctx.emit({{"total_mass", to_string(mu.total_mass())}, {"pieces", pieces}, {"zero_arcs", zeros}});
  else {
    ctx.out << "total mass (units of pi): " << to_string(mu.total_mass()) << "\n";
    for (const auto &p : pieces)
      ctx.out << "  edge " << p["edge"].get<std::size_t>() << " [" << p["t0"].get<std::string>() << ", "
              << p["t1"].get<std::string>() << "] rate " << p["rate"].get<std::string>() << "\n";
  }
  return ok;
}

inline int planar_render(Context &ctx, const std::string &file, const std::string &svg_path, bool lines) {
  const auto P = load_packing(ctx, file);
  io::SvgOptions opt;
  if (lines)
    opt.lines = planar::verify_total_separability(P).lines;
  const std::string svg = io::render_svg(P, opt);
  ctx.manifest.parameters = {{"file", file}, {"lines", lines}};
  ctx.manifest.verdicts = {{"translates", P.size()}};
  ctx.write_output(svg_path, svg);
  return ok;
}

// ---------------------------------------------------------------------------
// polyomino

inline int polyomino_optimal(Context &ctx, const std::string &lattice, std::size_t n) {
  const auto l = parse_lattice(lattice);
  const auto c = optimal_cluster(l, n);
  const auto count = adjacency_count(c);
  ctx.manifest.parameters = {{"lattice", lattice}, {"n", n}};
  ctx.manifest.verdicts = {{"adjacencies", count}};
  if (ctx.json) {
    Json cells = Json::array();
    for (const auto &cell : c.cells())
      cells.push_back({cell.x, cell.y});
    ctx.emit({{"lattice", lattice_name(l)}, {"n", n}, {"adjacencies", count}, {"cells", cells}});
  } else {
    ctx.out << "# " << lattice_name(l) << " n=" << n << " adjacencies=" << count << "\n" << format_cells(c);
  }
  return ok;
}

inline int polyomino_count(Context &ctx, const std::string &lattice, const std::string &file) {
  const CellCluster c(parse_lattice(lattice), parse_cells(ctx.read_input(file)));
  const auto count = adjacency_count(c);
  ctx.manifest.parameters = {{"lattice", lattice}, {"file", file}};
  ctx.manifest.verdicts = {{"adjacencies", count}};
  if (ctx.json)
    ctx.emit({{"cells", c.size()}, {"adjacencies", count}, {"bound", max_adjacency(c.lattice(), c.size())}});
  else
    ctx.out << count << "\n";
  return ok;
}

inline int polyomino_merge(Context &ctx, const std::string &f1, const std::string &f2) {
  const CellCluster a(Lattice::square, parse_cells(ctx.read_input(f1)));
  const CellCluster b(Lattice::square, parse_cells(ctx.read_input(f2)));
  const auto m = merge_clusters(a, b);
  ctx.manifest.parameters = {{"first", f1}, {"second", f2}};
  ctx.manifest.verdicts = {{"cells", m.size()}, {"adjacencies", adjacency_count(m)}};
  if (ctx.json)
    ctx.emit({{"cells", m.size()}, {"adjacencies", adjacency_count(m)}});
  else
    ctx.out << "# cells=" << m.size() << " adjacencies=" << adjacency_count(m) << "\n" << format_cells(m);
  return ok;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Totally separable packings: certificates, codes, l1 packings, planar contact numbers"};
  app.name("seppack");
  app.require_subcommand(1);
  app.fallthrough(); // inherited: global flags may follow the subcommand

  Context ctx{in, out, err};
  std::string manifest_path;
  app.add_flag("--json", ctx.json, "machine-readable JSON output");
  app.add_option("--seed", ctx.seed, "random seed")->capture_default_str();
  app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this file");

  std::function<int()> action;

  // code
  auto *code = app.add_subcommand("code", "spherical codes")->require_subcommand(1);
  std::size_t dim = 0, trials = 1;
  std::string out_path, alpha = "1/3", file;
  bool normalize = false;
  auto *cs = code->add_subcommand("search", "deletion-method search in R^D");
  cs->add_option("--dim", dim, "dimension")->required()->check(CLI::Range(2, 100000));
  cs->add_option("--trials", trials, "independent trials (seeds seed..seed+T-1)")->check(CLI::Range(1, 1000000));
  cs->add_option("--out", out_path, "write the code file here");
  cs->callback([&] { action = [&] { return code_search(ctx, dim, trials, out_path); }; });
  auto *cv = code->add_subcommand("verify", "verify a code file");
  cv->add_option("--alpha", alpha, "coherence parameter p/q")->required();
  cv->add_flag("--normalize", normalize, "scale every row to unit length instead of rejecting bad norms");
  cv->add_option("file", file, "code file or -")->required();
  cv->callback([&] { action = [&] { return code_verify(ctx, alpha, normalize, file); }; });

  // cert
  auto *cert = app.add_subcommand("cert", "separable-Hadwiger certificates")->require_subcommand(1);
  std::size_t extra = 0;
  std::string eps;
  int d = 0;
  auto *cl = cert->add_subcommand("lift", "lift a spherical code to a certificate");
  cl->add_option("--code", file, "code file")->required();
  cl->add_option("--alpha", alpha, "coherence parameter p/q")->required();
  cl->add_option("--k", extra, "extra dimensions with antipodal pairs");
  cl->add_flag("--normalize", normalize, "normalize code rows");
  cl->add_option("--out", out_path, "write certificate JSON here");
  cl->callback([&] { action = [&] { return cert_lift(ctx, file, alpha, extra, normalize, out_path); }; });
  auto *cver = cert->add_subcommand("verify", "verify certificate JSON");
  cver->add_option("file", file, "certificate JSON or -")->required();
  cver->callback([&] { action = [&] { return cert_verify(ctx, file); }; });
  auto *cr = cert->add_subcommand("reduce", "reduce a certificate to its Gram-type matrix");
  cr->add_option("file", file, "certificate JSON or -")->required();
  cr->add_option("--eps", eps, "eps in (0,1) as p/q; default: largest admissible");
  cr->callback([&] { action = [&] { return cert_reduce(ctx, file, eps); }; });
  auto *cb = cert->add_subcommand("bound", "upper bound for smooth strictly convex bodies, d = 5..7");
  cb->add_option("--dim", d, "dimension")->required();
  cb->callback([&] { action = [&] { return cert_bound(ctx, d); }; });

  // ell1
  auto *ell = app.add_subcommand("ell1", "Reed-Solomon l1-ball packings")->require_subcommand(1);
  int k = 0;
  std::optional<std::size_t> index;
  auto *eb = ell->add_subcommand("build", "print the code for d = 4^K");
  eb->add_option("--k", k, "K in 1..4")->required();
  eb->add_option("--out", out_path, "write codewords here");
  eb->callback([&] { action = [&] { return ell1_build(ctx, k, out_path); }; });
  auto *ev = ell->add_subcommand("verify", "verify total separability of the radius-D/2 packing");
  ev->add_option("file", file, "codeword file or -")->required();
  ev->callback([&] { action = [&] { return ell1_verify(ctx, file); }; });
  auto *en = ell->add_subcommand("neighbors", "count codewords at the minimum distance");
  en->add_option("file", file, "codeword file or -")->required();
  en->add_option("--index", index, "codeword index (default: all)");
  en->callback([&] { action = [&] { return ell1_neighbors(ctx, file, index); }; });

  // planar
  auto *pl = app.add_subcommand("planar", "planar packings of symmetric polygons")->require_subcommand(1);
  std::string body, svg;
  std::size_t n = 0;
  bool uniform = false, lines = false;
  const std::string body_help = "square | hexagon | octagon | elongated-octagon | body JSON file";
  auto *pc = pl->add_subcommand("classify", "parallelogram / quasi hexagon / general");
  pc->add_option("body", body, body_help)->required();
  pc->callback([&] { action = [&] { return planar_classify(ctx, body); }; });
  auto *pp = pl->add_subcommand("pack", "generate an optimal totally separable packing");
  pp->add_option("--body", body, body_help)->required();
  pp->add_option("--n", n, "number of translates")->required()->check(CLI::Range(1, 1000000));
  pp->add_option("--out", out_path, "write packing JSON here");
  pp->callback([&] { action = [&] { return planar_pack(ctx, body, n, out_path); }; });
  auto *pcon = pl->add_subcommand("contacts", "contact graph of a packing");
  pcon->add_option("file", file, "packing JSON or -")->required();
  pcon->callback([&] { action = [&] { return planar_contacts(ctx, file); }; });
  auto *pv = pl->add_subcommand("verify", "check packing and total separability");
  pv->add_option("file", file, "packing JSON or -")->required();
  pv->callback([&] { action = [&] { return planar_verify(ctx, file); }; });
  auto *pm = pl->add_subcommand("measure", "pi-measure (or uniform measure) of a body");
  pm->add_option("--body", body, body_help)->required();
  pm->add_flag("--uniform", uniform, "uniform measure instead of the pi-measure");
  pm->callback([&] { action = [&] { return planar_measure(ctx, body, uniform); }; });
  auto *pr = pl->add_subcommand("render", "SVG drawing of a packing");
  pr->add_option("file", file, "packing JSON or -")->required();
  pr->add_option("--svg", svg, "output SVG file")->required();
  pr->add_flag("--lines", lines, "overlay separating lines");
  pr->callback([&] { action = [&] { return planar_render(ctx, file, svg, lines); }; });

  // polyomino
  auto *po = app.add_subcommand("polyomino", "lattice cell clusters")->require_subcommand(1);
  std::string lattice = "square", file2;
  auto *poo = po->add_subcommand("optimal", "cluster with the maximum number of adjacencies");
  poo->add_option("--lattice", lattice, "square | king | triangular");
  poo->add_option("--n", n, "cells")->required()->check(CLI::Range(1, 10000000));
  poo->callback([&] { action = [&] { return polyomino_optimal(ctx, lattice, n); }; });
  auto *poc = po->add_subcommand("count", "adjacencies of a cluster file");
  poc->add_option("--lattice", lattice, "square | king | triangular");
  poc->add_option("file", file, "cluster file or -")->required();
  poc->callback([&] { action = [&] { return polyomino_count(ctx, lattice, file); }; });
  auto *pom = po->add_subcommand("merge", "merge two square-lattice clusters");
  pom->add_option("first", file, "cluster file")->required();
  pom->add_option("second", file2, "cluster file")->required();
  pom->callback([&] { action = [&] { return polyomino_merge(ctx, file, file2); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage;
  }

  int code_ = ok;
  ctx.manifest.argv = args;
  for (auto *sub : app.get_subcommands())
    for (auto *leaf : sub->get_subcommands())
      ctx.manifest.command = sub->get_name() + " " + leaf->get_name();
  ctx.manifest.seed = ctx.seed;
  try {
    code_ = action ? action() : usage;
  } catch (const PackingViolation &e) {
    err << "rejected: " << e.what() << "\n";
    ctx.manifest.verdicts = {{"packing_violation", {e.first(), e.second()}}};
    if (ctx.json)
      ctx.emit({{"accepted", false}, {"packing_violation", {{"i", e.first()}, {"j", e.second()}}}, {"error", e.what()}});
    code_ = rejected;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    code_ = usage;
  } catch (const ParameterError &e) {
    err << "bad parameter: " << e.what() << "\n";
    code_ = usage;
  } catch (const KindError &e) {
    err << "bad input: " << e.what() << "\n";
    code_ = usage;
  } catch (const Error &e) {
    err << "rejected: " << e.what() << "\n";
    if (ctx.json)
      ctx.emit({{"accepted", false}, {"error", e.what()}});
    code_ = rejected;
  }
  ctx.manifest.exit_code = code_;
  if (!manifest_path.empty()) {
    std::ofstream f(manifest_path);
    if (!f) {
      err << "cannot write manifest '" << manifest_path << "'\n";
      return usage;
    }
    f << ctx.manifest.to_json().dump(2) << "\n";
  }
  return code_;
}

} // namespace seppack::cli
