#include "sgc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "sgc/census.hpp"
#include "sgc/corona.hpp"
#include "sgc/corona_spectra.hpp"
#include "sgc/coronal.hpp"
#include "sgc/graph_io.hpp"
#include "sgc/verify.hpp"

namespace sgc {

using nlohmann::json;

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct LoadedGraph {
  std::string path;
  std::string digest;
  SignedGraph graph;
};

LoadedGraph load(const std::string& path, bool unsigned_edges) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  try {
    SignedGraph g = unsigned_edges ? parse_unsigned_edge_list(bytes) : parse_graph(bytes);
    return {path, "fnv1a64:" + fnv1a64_hex(bytes), std::move(g)};
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.line());
  }
}

json input_doc(const LoadedGraph& g) {
  return {{"path", g.path}, {"digest", g.digest}, {"nodes", g.graph.order()}, {"edges", g.graph.size()}};
}

json edges_doc(const SignedGraph& g) {
  json a = json::array();
  for (const Edge& e : g.edges()) a.push_back({e.u, e.v, std::string(1, to_char(e.sign))});
  return a;
}

json coeffs_doc(const IntPolynomial& p) {
  json a = json::array();
  for (const mpz_class& c : p.coeffs()) {
    if (c.fits_slong_p())
      a.push_back(c.get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}

json spectrum_doc(const Spectrum& s) {
  json a = json::array();
  for (const auto& e : s.pairs()) a.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return a;
}

json discrepancies_doc(const std::vector<Discrepancy>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back({{"check", d.check}, {"inputs", d.inputs}, {"expected", d.expected}, {"got", d.got}});
  return a;
}

json census_doc(const EdgeCensus& c) { return {{"total", c.total}, {"positive", c.positive}, {"negative", c.negative}}; }

json census_doc(const TriadCensus& c) {
  return {{"T0", c.t0}, {"T1", c.t1}, {"T2", c.t2}, {"T3", c.t3}, {"total", c.total()}};
}

MatrixKind kind_from(const std::string& s) {
  if (s == "a") return MatrixKind::kAdjacency;
  if (s == "l") return MatrixKind::kLaplacian;
  return MatrixKind::kSignless;
}

SpectrumMethod method_from(const std::string& s) {
  if (s == "theorem") return SpectrumMethod::kTheorem;
  if (s == "proposition") return SpectrumMethod::kProposition;
  return SpectrumMethod::kNumeric;
}

struct Options {
  std::string cross_sign = "neighbour";
  bool unsigned_edges = false;
  bool verbose = false;

  std::string in1, in2, out_path;
  std::string matrix = "a";
  std::string method = "numeric";
  bool triads = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_n = 5;

  CrossSign rule() const { return cross_sign == "centre" ? CrossSign::kCentreMark : CrossSign::kNeighbourMark; }
};

void print_spectrum_table(std::ostream& err, const Spectrum& s) {
  err << std::setw(24) << "eigenvalue" << std::setw(14) << "multiplicity" << '\n';
  for (const auto& e : s.pairs()) err << std::setw(24) << std::setprecision(10) << e.value << std::setw(14) << e.multiplicity << '\n';
}

int cmd_corona(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const LoadedGraph b = load(o.in2, o.unsigned_edges);
  const Corona c = neighbourhood_corona(a.graph, b.graph, o.rule());
  doc["inputs"] = {input_doc(a), input_doc(b)};
  doc["nodes"] = c.graph.order();
  doc["edges"] = edges_doc(c.graph);
  doc["layout"] = {{"n1", c.layout.n1}, {"n2", c.layout.n2}, {"copy_node", "n1 + j*n1 + i"}};
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + o.out_path, 0);
    f << render_graph(c.graph);
    doc["written"] = o.out_path;
  }
  if (o.verbose) err << "corona: " << c.graph.order() << " nodes, " << c.graph.size() << " edges\n";
  return kExitOk;
}

int cmd_spectrum(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const LoadedGraph b = load(o.in2, o.unsigned_edges);
  const MatrixKind kind = kind_from(o.matrix);
  const SpectrumReport r = corona_spectrum(a.graph, b.graph, kind, method_from(o.method), o.rule());
  doc["inputs"] = {input_doc(a), input_doc(b)};
  doc["matrix"] = matrix_kind_name(kind);
  doc["method"] = spectrum_method_name(r.method);
  doc["order"] = r.spectrum.order();
  doc["spectrum"] = spectrum_doc(r.spectrum);
  doc["discrepancies"] = discrepancies_doc(r.discrepancies);
  if (o.verbose) print_spectrum_table(err, r.spectrum);
  return r.discrepancies.empty() ? kExitOk : kExitDiscrepancy;
}

int cmd_balance(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const LoadedGraph b = load(o.in2, o.unsigned_edges);
  const Corona c = neighbourhood_corona(a.graph, b.graph, o.rule());
  const bool oracle = is_balanced(c.graph);
  const bool criterion = corona_balance_criterion(a.graph, b.graph, o.rule());
  doc["inputs"] = {input_doc(a), input_doc(b)};
  doc["g1"] = is_balanced(a.graph) ? "balanced" : "unbalanced";
  doc["g2"] = is_balanced(b.graph) ? "balanced" : "unbalanced";
  doc["corona"] = oracle ? "balanced" : "unbalanced";
  doc["criterion"] = criterion ? "balanced" : "unbalanced";
  doc["agree"] = criterion == oracle;
  doc["offending_edge_test"] = offending_edge_criterion(a.graph, b.graph) ? "balanced" : "unbalanced";
  doc["offending_edges"] = {{"g1", edges_doc(SignedGraph(a.graph.order(), offending_edges(a.graph)))},
                            {"g2", edges_doc(SignedGraph(b.graph.order(), offending_edges(b.graph)))}};
  if (o.verbose)
    err << "corona: " << (oracle ? "balanced" : "unbalanced") << "\ncriterion: " << (criterion ? "balanced" : "unbalanced")
        << '\n';
  return criterion == oracle ? kExitOk : kExitDiscrepancy;
}

int cmd_stats(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const LoadedGraph b = load(o.in2, o.unsigned_edges);
  const Corona c = neighbourhood_corona(a.graph, b.graph, o.rule());
  doc["inputs"] = {input_doc(a), input_doc(b)};
  doc["nodes"] = c.graph.order();
  const EdgeCensus direct = edge_census_direct(c.graph);
  doc["edges"] = census_doc(direct);
  bool ok = true;
  // The closed-form counts describe the neighbour-mark corona.
  if (o.rule() == CrossSign::kNeighbourMark) {
    const EdgeCensus formula = edge_census_formula(a.graph, b.graph);
    doc["edges_formula"] = census_doc(formula);
    ok = ok && formula == direct;
  }
  if (o.triads) {
    const TriadCensus t = triad_census_direct(c.graph);
    doc["triads"] = census_doc(t);
    if (o.rule() == CrossSign::kNeighbourMark) {
      const TriadCensus tf = triad_census_formula(a.graph, b.graph);
      doc["triads_formula"] = census_doc(tf);
      doc["total_triads_formula"] = total_triads_formula(a.graph, b.graph);
      ok = ok && tf == t && total_triads_formula(a.graph, b.graph) == t.total();
    }
  }
  if (o.verbose) {
    err << "nodes " << c.graph.order() << "\nedges " << direct.total << " (+" << direct.positive << " -"
        << direct.negative << ")\n";
    if (o.triads) {
      const TriadCensus t = triad_census_direct(c.graph);
      err << "triads T0 " << t.t0 << " T1 " << t.t1 << " T2 " << t.t2 << " T3 " << t.t3 << '\n';
    }
  }
  return ok ? kExitOk : kExitDiscrepancy;
}

int cmd_coronal(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const MatrixKind kind = kind_from(o.matrix);
  const RationalFn chi = coronal(a.graph, kind);
  doc["inputs"] = {input_doc(a)};
  doc["matrix"] = matrix_kind_name(kind);
  doc["numerator"] = coeffs_doc(chi.num());
  doc["denominator"] = coeffs_doc(chi.den());
  doc["text"] = chi.to_string();
  bool ok = true;
  if (const auto closed = coronal_closed_form(a.graph, kind)) {
    doc["closed_form"] = closed->to_string();
    doc["closed_form_agrees"] = *closed == chi;
    ok = *closed == chi;
  } else {
    doc["closed_form"] = nullptr;
  }
  if (o.verbose) err << "chi_" << matrix_kind_name(kind) << "(x) = " << chi.to_string() << '\n';
  return ok ? kExitOk : kExitDiscrepancy;
}

int cmd_cospectral(const Options& o, json& doc, std::ostream& err) {
  const LoadedGraph a = load(o.in1, o.unsigned_edges);
  const LoadedGraph b = load(o.in2, o.unsigned_edges);
  const MatrixKind kind = kind_from(o.matrix);
  const CospectralResult r = check_cospectral(matrix(a.graph, kind), matrix(b.graph, kind));
  doc["inputs"] = {input_doc(a), input_doc(b)};
  doc["matrix"] = matrix_kind_name(kind);
  doc["cospectral"] = r.cospectral;
  doc["diagnostic"] = r.diagnostic;
  if (o.verbose) err << (r.cospectral ? "cospectral" : "not cospectral: " + r.diagnostic) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, json& doc, std::ostream& err) {
  const VerifyReport r = run_verify({o.trials, o.seed, o.max_n});
  doc["trials"] = o.trials;
  doc["seed"] = o.seed;
  doc["max_n"] = o.max_n;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.check}, {"runs", c.runs}, {"failures", c.failures}});
  doc["checks"] = checks;
  doc["discrepancies"] = discrepancies_doc(r.discrepancies);
  json known = json::array();
  for (const auto& k : r.known_deviations)
    known.push_back({{"id", k.id}, {"description", k.description}, {"occurrences", k.occurrences}});
  doc["known_deviations"] = known;
  doc["ok"] = r.ok();
  if (o.verbose) {
    for (const auto& c : r.checks)
      err << std::left << std::setw(52) << c.check << std::right << std::setw(6) << c.runs << std::setw(6) << c.failures
          << '\n';
    for (const auto& k : r.known_deviations) err << "known " << std::left << std::setw(46) << k.id << std::right << std::setw(6) << k.occurrences << '\n';
  }
  return r.ok() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighbourhood coronas of signed graphs: construction, census, balance, coronals and spectra"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cross-sign", o.cross_sign, "Sign rule for corona cross edges")
      ->check(CLI::IsMember({"neighbour", "centre"}));
  app.add_flag("--unsigned", o.unsigned_edges, "Read inputs as unsigned edge lists (all edges positive)");
  app.add_flag("-v,--verbose", o.verbose, "Readable tables on standard error");

  const auto matrix_check = CLI::IsMember({"a", "l", "q"});

  auto* corona = app.add_subcommand("corona", "Build the corona and print its edges");
  corona->add_option("IN1", o.in1)->required();
  corona->add_option("IN2", o.in2)->required();
  corona->add_option("-o,--output", o.out_path, "Also write the corona in graph format");

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of A, L or Q of the corona");
  spectrum->add_option("--matrix", o.matrix)->check(matrix_check);
  spectrum->add_option("--method", o.method)->check(CLI::IsMember({"numeric", "theorem", "proposition"}));
  spectrum->add_option("IN1", o.in1)->required();
  spectrum->add_option("IN2", o.in2)->required();

  auto* balance = app.add_subcommand("balance", "Balance of the corona: criterion against oracle");
  balance->add_option("IN1", o.in1)->required();
  balance->add_option("IN2", o.in2)->required();

  auto* stats = app.add_subcommand("stats", "Edge (and triad) census of the corona");
  stats->add_flag("--triads", o.triads);
  stats->add_option("IN1", o.in1)->required();
  stats->add_option("IN2", o.in2)->required();

  auto* coronal_cmd = app.add_subcommand("coronal", "Signed coronal of one graph");
  coronal_cmd->add_option("--matrix", o.matrix)->check(matrix_check);
  coronal_cmd->add_option("IN", o.in1)->required();

  auto* cospectral = app.add_subcommand("cospectral", "Compare the spectra of two graphs");
  cospectral->add_option("--matrix", o.matrix)->check(matrix_check);
  cospectral->add_option("INA", o.in1)->required();
  cospectral->add_option("INB", o.in2)->required();

  auto* verify = app.add_subcommand("verify", "Randomised check of every identity against its oracle");
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(1, 8));

  std::vector<std::string> argv_store{"sgc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  json doc;
  doc["command"] = app.get_subcommands().front()->get_name();
  doc["cross_sign"] = o.cross_sign;
  int status = kExitOk;
  try {
    if (corona->parsed()) status = cmd_corona(o, doc, err);
    else if (spectrum->parsed()) status = cmd_spectrum(o, doc, err);
    else if (balance->parsed()) status = cmd_balance(o, doc, err);
    else if (stats->parsed()) status = cmd_stats(o, doc, err);
    else if (coronal_cmd->parsed()) status = cmd_coronal(o, doc, err);
    else if (cospectral->parsed()) status = cmd_cospectral(o, doc, err);
    else status = cmd_verify(o, doc, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << doc.dump(2) << '\n';
  return status;
}

}  // namespace sgc
