#include "vertexfreq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "report_json.hpp"
#include "vertexfreq/errors.hpp"
#include "vertexfreq/fiedler.hpp"
#include "vertexfreq/generators.hpp"
#include "vertexfreq/graph_io.hpp"
#include "vertexfreq/harness.hpp"
#include "vertexfreq/spectral.hpp"
#include "vertexfreq/vertex_frequency.hpp"

namespace vertexfreq::cli {

namespace {

// Bad invocation, as opposed to a library failure on valid input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string input_format;
  std::string format = "edgelist";
  std::string basis = "laplacian";
  std::string signal;
  std::string spec;
  bool json = false;
  bool inverse = false;
  double tol = 0.0;
  std::size_t vertex = 0;
  std::size_t n = 0;
  std::vector<std::string> positionals;

  CLI::Option* tol_opt = nullptr;
  CLI::Option* vertex_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  std::optional<double> tolerance() const {
    return tol_opt != nullptr && tol_opt->count() > 0 ? std::optional(tol) : std::nullopt;
  }
  bool has_vertex() const { return vertex_opt != nullptr && vertex_opt->count() > 0; }
  bool has_n() const { return n_opt != nullptr && n_opt->count() > 0; }
};

// Values are fixed to 12 decimals; diagnostic magnitudes (tolerances,
// residuals) use 12 significant digits.
std::string fixed(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string sci(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string list(const std::vector<std::size_t>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "]";
}

std::string list(const VertexSet& s) { return list(s.members()); }

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string real_row(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + fixed(v(i));
  return s;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    if (!text.empty() && text.front() == '-') throw std::invalid_argument(text);
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  return static_cast<std::size_t>(value);
}

std::vector<std::size_t> parse_tuple(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item, "parameter tuple '" + text + "'"));
  if (out.empty()) throw UsageError("empty parameter tuple");
  return out;
}

// Opens `path`, or hands back `in` for "-".
class Input {
 public:
  Input(const std::string& path, std::istream& in) {
    if (path == "-") {
      stream_ = &in;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw Error("cannot open '" + path + "'");
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

Graph load_graph(const Options& o, std::istream& in) {
  if (o.graph.empty()) throw UsageError("a graph argument is required");
  const GraphFormat fmt = !o.input_format.empty() ? parse_graph_format(o.input_format)
                          : o.graph == "-"        ? GraphFormat::kEdgeList
                                                  : format_from_path(o.graph);
  Input input(o.graph, in);
  return read_graph(input.get(), fmt);
}

std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if ((std::size_t{1} << k) != n || k == 0) throw UsageError("--n must be a power of two >= 2 for the sylvester basis");
  return k;
}

EigenBasis load_basis(const Options& o, std::istream& in) {
  if (o.basis == "laplacian") return eigendecompose(load_graph(o, in));
  if (!o.has_n()) throw UsageError("--basis " + o.basis + " requires --n");
  if (o.basis == "dft") return dft_basis(o.n);
  return sylvester_hadamard_basis(log2_exact(o.n));
}

// One entry per record: "re" or "re,im". Blank lines and '#' comments are
// skipped.
Eigen::VectorXcd read_signal_csv(std::istream& in) {
  std::vector<Complex> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
      if (end == field.c_str() || *end != '\0') {
        throw ParseError("signal line " + std::to_string(line_no) + ": bad number '" + field + "'");
      }
      fields.push_back(v);
    }
    if (fields.empty() || fields.size() > 2) {
      throw ParseError("signal line " + std::to_string(line_no) + ": expected 're' or 're,im'");
    }
    values.emplace_back(fields[0], fields.size() == 2 ? fields[1] : 0.0);
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

Eigen::VectorXcd load_signal(const Options& o, std::istream& in) {
  if (o.signal.empty()) throw UsageError("--signal is required");
  if (o.signal == "-" && o.graph == "-") throw UsageError("graph and signal cannot both come from stdin");
  Input input(o.signal, in);
  return read_signal_csv(input.get());
}

void write_signal(std::ostream& out, const Eigen::VectorXcd& v, bool json) {
  if (json) {
    out << report::dump(report::signal(v)) << '\n';
    return;
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) out << fixed(v(i).real()) << ',' << fixed(v(i).imag()) << '\n';
}

std::size_t require_vertex(const Options& o) {
  if (!o.has_vertex()) throw UsageError("--vertex is required");
  return o.vertex;
}

// ---- subcommands ---------------------------------------------------------

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.positionals.empty()) throw UsageError("generate: missing family name");
  const std::string& family = o.positionals[0];
  std::vector<std::size_t> p;
  for (std::size_t i = 1; i < o.positionals.size(); ++i) p.push_back(parse_count(o.positionals[i], family));

  using Builder = std::function<Graph(const std::vector<std::size_t>&)>;
  static const std::map<std::string, std::pair<std::size_t, Builder>> builders{
      {"path", {1, [](const auto& a) { return path(a[0]); }}},
      {"cycle", {1, [](const auto& a) { return cycle(a[0]); }}},
      {"complete", {1, [](const auto& a) { return complete(a[0]); }}},
      {"bipartite", {2, [](const auto& a) { return complete_bipartite(a[0], a[1]); }}},
      {"star", {1, [](const auto& a) { return star(a[0]); }}},
      {"ladder", {2, [](const auto& a) { return generalized_ladder(a[0], a[1]); }}},
      {"grid", {2, [](const auto& a) { return grid(a[0], a[1]); }}},
      {"tree", {2, [](const auto& a) { return random_tree(a[0], a[1]); }}},
      {"duplicated", {2, [](const auto& a) { return duplicated_middle_path(a[0], a[1]); }}},
      {"barren", {1, [](const auto& a) { return barren(a[0]).graph; }}},
  };
  const auto it = builders.find(family);
  if (it == builders.end()) throw UsageError("generate: unknown family '" + family + "'");
  if (p.size() != it->second.first) {
    throw UsageError("generate " + family + ": expected " + std::to_string(it->second.first) + " parameter(s)");
  }
  if (o.format == "csv") throw UsageError("generate: csv is a signal format");
  write_graph(out, it->second.second(p), parse_graph_format(o.format));
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::istream& in) {
  const EigenBasis b = load_basis(o, in);
  if (o.json) {
    out << report::dump(report::spectrum(b)) << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < b.size(); ++k) out << "lambda_" << k << " = " << fixed(b.eigenvalue(k)) << '\n';
  return kExitOk;
}

int cmd_gft(const Options& o, std::ostream& out, std::istream& in) {
  const EigenBasis b = load_basis(o, in);
  const Eigen::VectorXcd v = load_signal(o, in);
  const Eigen::VectorXcd result =
      o.inverse ? igft(b, SpectralSignal(v)).values() : gft(b, Signal(v)).coeffs();
  write_signal(out, result, o.json);
  return kExitOk;
}

int cmd_translate(const Options& o, std::ostream& out, std::istream& in) {
  const std::size_t i = require_vertex(o);
  const EigenBasis b = load_basis(o, in);
  const Signal f(load_signal(o, in));
  if (!o.inverse) {
    write_signal(out, translate(b, i, f).values(), o.json);
    return kExitOk;
  }
  const TranslationInverse inv = translation_inverse(b, i, o.tolerance());
  if (f.size() != b.size()) throw DimensionMismatch(b.size(), f.size());
  write_signal(out, inv.matrix * f.values(), o.json);
  return kExitOk;
}

int cmd_analyze_translation(const Options& o, std::ostream& out, std::istream& in) {
  const EigenBasis b = load_basis(o, in);
  std::vector<std::size_t> vertices;
  if (o.has_vertex()) {
    vertices.push_back(o.vertex);
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) vertices.push_back(i);
  }
  report::Json all = report::Json::array();
  for (std::size_t i : vertices) {
    const TranslationAnalysis a = translation_analysis(b, i, o.tolerance());
    if (o.json) {
      all.push_back(report::translation(a));
      continue;
    }
    out << "vertex=" << a.vertex << " rank=" << a.rank << " invertible=" << boolean(a.invertible)
        << " unitary=" << boolean(a.unitary) << " vanishing=" << list(a.vanishing_indices)
        << " condition=" << sci(a.condition) << " tol=" << sci(a.tol) << '\n';
  }
  if (o.json) out << report::dump(o.has_vertex() ? all[0] : all) << '\n';
  return kExitOk;
}

int cmd_semigroup(const Options& o, std::ostream& out, std::istream& in) {
  const EigenBasis b = load_basis(o, in);
  const SemigroupResult r = semigroup_table(b, o.tolerance().value_or(1e-9));
  if (o.json) {
    out << report::dump(report::semigroup(r)) << '\n';
    return kExitOk;
  }
  if (const auto* t = std::get_if<SemigroupTable>(&r)) {
    out << "closed = true\n";
    for (const auto& row : t->table) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
    return kExitOk;
  }
  const auto& w = std::get<FailureWitness>(r);
  out << "closed = false\n"
      << "i = " << w.i << "\nj = " << w.j << '\n'
      << "product = " << real_row(w.product.real()) << '\n';
  return kExitOk;
}

int cmd_fiedler(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  const FiedlerResult f = fiedler(eigendecompose(g));
  const VertexPartition p = partition(f.vector, o.tolerance());
  if (o.json) {
    out << report::dump(report::fiedler(g, f, p)) << '\n';
    return kExitOk;
  }
  const SignConnectivity c = sign_connectivity_check(g, p);
  out << "eigenvalue = " << fixed(f.eigenvalue) << '\n'
      << "multiplicity = " << f.multiplicity << '\n'
      << "basis_dependent = " << boolean(f.basis_dependent()) << '\n'
      << "tol = " << sci(p.tol) << '\n'
      << "positive = " << list(p.positive) << '\n'
      << "negative = " << list(p.negative) << '\n'
      << "zero = " << list(p.zero) << '\n';
  if (!p.positive.empty() && !p.negative.empty()) out << "sign_distance = " << partition_distance_check(g, p) << '\n';
  out << "positive_connected = " << boolean(c.positive_connected) << '\n'
      << "negative_connected = " << boolean(c.negative_connected) << '\n'
      << "vector = " << real_row(f.vector.real()) << '\n';
  return kExitOk;
}

int cmd_scan_zeros(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  const FiedlerResult f = fiedler(eigendecompose(g));
  const VertexPartition p = partition(f.vector, o.tolerance());
  const CharacteristicReport r = zero_ball_scan(g, p);
  const std::vector<FlatBall> flat = constant_ball_scan(g, f.vector, p);
  if (o.json) {
    out << report::dump(report::zero_scan(r, flat, p.tol)) << '\n';
    return kExitOk;
  }
  out << "tol = " << sci(p.tol) << '\n'
      << "zero_set = " << list(r.zero_set) << '\n'
      << "max_ball_size = " << r.max_ball_size << '\n'
      << "contained_balls = " << r.contained_balls.size() << '\n';
  for (const auto& b : r.contained_balls) out << "ball " << b.center << " = " << list(b.ball) << '\n';
  out << "flat_balls = " << flat.size() << '\n';
  return kExitOk;
}

int cmd_verify_barren(const Options& o, std::ostream& out) {
  if (!o.has_n()) throw UsageError("verify-barren requires --n");
  const BarrenReport r = verify_barren(o.n, o.tolerance().value_or(1e-8));
  if (o.json) {
    out << report::dump(report::barren(r)) << '\n';
    return r.passed() ? kExitOk : kExitDomain;
  }
  const BarrenSpectrum& c = r.closed_form;
  out << "N = " << r.n << '\n'
      << "vertices = " << r.n + 7 << '\n'
      << "tol = " << sci(r.tol) << '\n'
      << "lambda1 = " << fixed(c.lambda1) << '\n'
      << "y1 = " << fixed(c.roots.y1) << '\n'
      << "y2 = " << fixed(c.roots.y2) << '\n'
      << "y3 = " << fixed(c.roots.y3) << '\n'
      << "lambda_top_pair = " << fixed(c.lambda_top_pair) << '\n'
      << "max_eigenvalue_deviation = " << sci(r.max_eigenvalue_deviation) << '\n'
      << "spectrum_matches = " << boolean(r.spectrum_matches) << '\n'
      << "fiedler_eigenvalue = " << fixed(r.fiedler_eigenvalue) << '\n'
      << "fiedler_multiplicity = " << r.fiedler_multiplicity << '\n'
      << "fiedler_support = " << list(r.fiedler_support) << '\n'
      << "support_matches = " << boolean(r.support_matches) << '\n'
      << "zero_set = " << list(r.zero_set) << '\n'
      << "zero_set_matches = " << boolean(r.zero_set_matches) << '\n'
      << "a = " << fixed(r.a) << '\n'
      << "b = " << fixed(r.b) << '\n'
      << "normalization = " << fixed(r.normalization) << '\n'
      << "shape_matches = " << boolean(r.shape_matches) << '\n'
      << "status = " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& f : r.failures()) out << "failure = " << f << '\n';
  return r.passed() ? kExitOk : kExitDomain;
}

// Lift specs are JSON. Two shapes:
//   {"components": [{"graph": G, "eigenvalue": l, "eigenvector": [...]}, ...],
//    "edges": [[graph_a, a, graph_b, b], ...]}
//   {"graph": G, "subset": [...], "eigenvalue": l, "eigenvector": [...]}
// with G = {"n": N, "edges": [[u, v], ...]} and an optional "tol".
Graph graph_from_json(const report::Json& j) {
  std::istringstream ss(j.dump());
  return read_graph_json(ss);
}

Signal vector_from_json(const report::Json& j) {
  return Signal(j.get<std::vector<double>>());
}

LiftResult run_lift_spec(const report::Json& spec) {
  const double tol = spec.value("tol", 1e-9);
  if (spec.contains("components")) {
    std::vector<LiftComponent> comps;
    for (const auto& c : spec.at("components")) {
      comps.push_back({graph_from_json(c.at("graph")), c.at("eigenvalue").get<double>(),
                       vector_from_json(c.at("eigenvector"))});
    }
    std::vector<CrossEdge> edges;
    for (const auto& e : spec.at("edges")) {
      const auto v = e.get<std::vector<std::size_t>>();
      if (v.size() != 4) throw ParseError("lift edge must be [graph_a, a, graph_b, b]");
      edges.push_back({v[0], v[1], v[2], v[3]});
    }
    return lift_common_eigenvector(comps, edges, tol);
  }
  const Graph g = graph_from_json(spec.at("graph"));
  const VertexSet s(g.vertex_count(), spec.at("subset").get<std::vector<Vertex>>());
  return extend_subgraph_eigenvector(g, s, spec.at("eigenvalue").get<double>(),
                                     vector_from_json(spec.at("eigenvector")), tol);
}

int cmd_lift(const Options& o, std::ostream& out, std::istream& in) {
  if (o.spec.empty()) throw UsageError("lift requires --spec");
  Input input(o.spec, in);
  report::Json spec;
  try {
    spec = report::Json::parse(input.get());
    const LiftResult r = run_lift_spec(spec);
    if (o.json) {
      out << report::dump(report::lift(r)) << '\n';
      return kExitOk;
    }
    out << "vertices = " << r.graph.vertex_count() << '\n'
        << "edges = " << r.graph.edge_count() << '\n'
        << "eigenvalue = " << fixed(r.eigenvalue) << '\n'
        << "residual = " << sci(r.residual) << '\n'
        << "eigenvector = " << real_row(r.eigenvector.real()) << '\n';
    return kExitOk;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lift spec: ") + e.what());
  }
}

int cmd_harness(const Options& o, std::ostream& out) {
  if (o.positionals.empty()) throw UsageError("harness-planar: missing family name");
  const std::string& family = o.positionals[0];
  if (!is_harness_family(family)) throw UsageError("harness-planar: unknown family '" + family + "'");
  std::vector<std::vector<std::size_t>> instances;
  for (std::size_t i = 1; i < o.positionals.size(); ++i) instances.push_back(parse_tuple(o.positionals[i]));
  if (instances.empty()) throw UsageError("harness-planar: no parameter tuples given");
  const HarnessReport r = planar_family_harness(family, instances, o.tolerance());
  if (o.json) {
    out << report::dump(report::harness(r)) << '\n';
    return r.consistent ? kExitOk : kExitDomain;
  }
  for (const auto& i : r.instances) {
    std::string params;
    for (std::size_t k = 0; k < i.params.size(); ++k) params += (k ? "," : "") + std::to_string(i.params[k]);
    out << "params=" << params << " vertices=" << i.vertex_count << " multiplicity=" << i.fiedler_multiplicity
        << " contained_balls=" << i.contained_balls << " max_ball_size=" << i.max_ball_size
        << " bound_holds=" << boolean(i.bound_holds) << '\n';
  }
  out << "family = " << r.family << '\n'
      << "planar = " << boolean(r.planar) << '\n'
      << "consistent = " << boolean(r.consistent) << '\n';
  return r.consistent ? kExitOk : kExitDomain;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Vertex-frequency analysis of graph signals", "vertexfreq"};
  app.require_subcommand(1);
  Options o;

  const auto add_tol = [&](CLI::App* sub) {
    o.tol_opt = sub->add_option("--tol", o.tol, "zero tolerance")->check(CLI::PositiveNumber);
  };
  const auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("graph", o.graph, "graph file (.edges or .json), or - for stdin");
    if (required) opt->required();
    sub->add_option("--input-format", o.input_format, "graph input format")
        ->check(CLI::IsMember({"edgelist", "json"}));
  };
  const auto add_basis = [&](CLI::App* sub) {
    add_graph(sub, false);
    sub->add_option("--basis", o.basis, "eigenbasis")->check(CLI::IsMember({"laplacian", "dft", "sylvester"}));
    o.n_opt = sub->add_option("--n", o.n, "basis size for dft / sylvester");
  };
  const auto add_vertex = [&](CLI::App* sub) { o.vertex_opt = sub->add_option("--vertex", o.vertex, "vertex index"); };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };

  auto* generate = app.add_subcommand("generate", "emit a generated graph");
  generate->add_option("family_and_params", o.positionals, "family name followed by its parameters")->required();
  generate->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"edgelist", "json", "dot", "csv"}));

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the Laplacian or a fixed basis");
  add_basis(spectrum);
  add_json(spectrum);

  auto* gft_cmd = app.add_subcommand("gft", "graph Fourier transform of a CSV signal");
  add_basis(gft_cmd);
  add_json(gft_cmd);
  gft_cmd->add_option("--signal", o.signal, "signal CSV (re or re,im per line)")->required();
  gft_cmd->add_flag("--inverse", o.inverse, "treat the input as spectral coefficients");

  auto* translate_cmd = app.add_subcommand("translate", "apply T_i (or its inverse) to a CSV signal");
  add_basis(translate_cmd);
  add_json(translate_cmd);
  add_vertex(translate_cmd);
  add_tol(translate_cmd);
  translate_cmd->add_option("--signal", o.signal, "signal CSV")->required();
  translate_cmd->add_flag("--inverse", o.inverse, "apply the inverse translation");

  auto* analyze = app.add_subcommand("analyze-translation", "rank, null space and unitarity of T_i");
  add_basis(analyze);
  add_json(analyze);
  add_vertex(analyze);
  add_tol(analyze);

  auto* semigroup = app.add_subcommand("semigroup", "search for the vertex product table");
  add_basis(semigroup);
  add_json(semigroup);
  add_tol(semigroup);

  auto* fiedler_cmd = app.add_subcommand("fiedler", "Fiedler vector and sign partition");
  add_graph(fiedler_cmd, true);
  add_json(fiedler_cmd);
  add_tol(fiedler_cmd);

  auto* scan = app.add_subcommand("scan-zeros", "radius-1 balls inside the Fiedler zero set");
  add_graph(scan, true);
  add_json(scan);
  add_tol(scan);

  auto* barren_cmd = app.add_subcommand("verify-barren", "check barren(N) against its closed form");
  o.n_opt = barren_cmd->add_option("--n", o.n, "N >= 3")->required();
  add_json(barren_cmd);
  add_tol(barren_cmd);

  auto* lift_cmd = app.add_subcommand("lift", "lift or extend an eigenvector from a JSON spec");
  lift_cmd->add_option("--spec", o.spec, "spec file, or - for stdin")->required();
  add_json(lift_cmd);

  auto* harness_cmd = app.add_subcommand("harness-planar", "zero-set ball sweep over a graph family");
  harness_cmd->add_option("family_and_tuples", o.positionals, "family then comma-separated tuples")->required();
  add_json(harness_cmd);
  add_tol(harness_cmd);

  if (!args.empty() && !args[0].starts_with("-")) {
    try {
      app.get_subcommand(args[0]);
    } catch (const CLI::OptionNotFound&) {
      err << "vertexfreq: unknown subcommand '" << args[0] << "'\n";
      return kExitUsage;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vertexfreq: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  // Options shared by several subcommands are registered once per
  // subcommand; point the accessors at the one that was parsed.
  CLI::App* chosen = app.get_subcommands().front();
  const auto find = [&](const std::string& name) -> CLI::Option* {
    try {
      return chosen->get_option(name);
    } catch (const CLI::OptionNotFound&) {
      return nullptr;
    }
  };
  o.tol_opt = find("--tol");
  o.vertex_opt = find("--vertex");
  o.n_opt = find("--n");

  try {
    const std::string name = chosen->get_name();
    if (name == "generate") return cmd_generate(o, out);
    if (name == "spectrum") return cmd_spectrum(o, out, in);
    if (name == "gft") return cmd_gft(o, out, in);
    if (name == "translate") return cmd_translate(o, out, in);
    if (name == "analyze-translation") return cmd_analyze_translation(o, out, in);
    if (name == "semigroup") return cmd_semigroup(o, out, in);
    if (name == "fiedler") return cmd_fiedler(o, out, in);
    if (name == "scan-zeros") return cmd_scan_zeros(o, out, in);
    if (name == "verify-barren") return cmd_verify_barren(o, out);
    if (name == "lift") return cmd_lift(o, out, in);
    return cmd_harness(o, out);
  } catch (const UsageError& e) {
    err << "vertexfreq: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "vertexfreq: " << one_line(e.what()) << '\n';
    return kExitDomain;
  }
}

}  // namespace vertexfreq::cli
