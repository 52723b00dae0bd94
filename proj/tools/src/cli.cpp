#include "grpoly/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "grpoly/catalog.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/equivalence.hpp"
#include "grpoly/graph6.hpp"
#include "grpoly/parallel.hpp"
#include "grpoly/roots.hpp"
#include "grpoly/serialize.hpp"
#include "grpoly/simfun.hpp"
#include "grpoly/transforms.hpp"

namespace grpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6_file;
  std::string graph6_text;
  std::string named;
  std::size_t enum_n = 0;

  void attach(CLI::App* app) {
    app->add_option("--graph6", graph6_file, "File with one graph6 string per line ('-' reads stdin)");
    app->add_option("--g6", graph6_text, "A single graph6 string");
    app->add_option("--named", named, "Named graph: cycle:N, complete:N, path:N, star:N, empty:N, prufer:a,b,...");
    app->add_option("--enum", enum_n, "All graphs on N vertices (N <= 8)");
  }

  std::size_t chosen() const {
    return (graph6_file.empty() ? 0 : 1) + (graph6_text.empty() ? 0 : 1) + (named.empty() ? 0 : 1) +
           (enum_n == 0 ? 0 : 1);
  }

  std::vector<Graph> load() const {
    if (chosen() != 1) throw UsageError("exactly one graph source is required (--graph6, --g6, --named or --enum)");
    if (!named.empty()) return {named_graph(named)};
    if (!graph6_text.empty()) return {graph_from_graph6(graph6_text)};
    if (enum_n != 0) return enumerate_graphs(enum_n);
    if (graph6_file == "-") return read_graph6_stream(std::cin);
    std::ifstream in(graph6_file);
    if (!in) throw UsageError("cannot open '" + graph6_file + "'");
    return read_graph6_stream(in);
  }
};

// Accepts "a/b", integers and decimals with an optional exponent ("0.01", "1e-2").
Rational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw UsageError("not a rational number: '" + text + "'");
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    try {
      std::size_t used = 0;
      scale += std::stol(text.substr(i + 1), &used);
      i += 1 + used;
    } catch (const std::exception&) {
      throw UsageError("not a rational number: '" + text + "'");
    }
  }
  if (!seen_digit || i != text.size()) throw UsageError("not a rational number: '" + text + "'");
  Rational r{Integer(digits, 10)};
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    r /= Rational(p);
  } else {
    r *= Rational(p);
  }
  if (negative) r = -r;
  r.canonicalize();
  return r;
}

FamilyId parse_family(const std::string& name) {
  try {
    return family_from_name(name);
  } catch (const DomainError&) {
    std::string known;
    for (auto id : kAllFamilies) known += std::string(known.empty() ? "" : ", ") + std::string(family_name(id));
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
}

const IntPoly& require_univariate(const PolyValue& v, const std::string& family) {
  if (!std::holds_alternative<IntPoly>(v)) throw UsageError("family '" + family + "' is not univariate");
  return std::get<IntPoly>(v);
}

Json parse_json(const std::string& s) { return Json::parse(s); }

std::vector<std::string> per_graph(const std::vector<Graph>& graphs, std::size_t threads,
                                   const std::function<std::string(const Graph&)>& f) {
  return parallel_map(graphs.size(), [&](std::size_t i) { return f(graphs[i]); }, threads);
}

void emit(std::ostream& out, const std::vector<std::string>& chunks) {
  for (const auto& c : chunks) out << c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph polynomials, root analysis and distinctive-power scans", "grpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t threads_flag = 0;
  app.add_option("--threads", threads_flag, "Worker threads (overrides GRPOLY_THREADS)");

  // poly
  auto* poly = app.add_subcommand("poly", "Compute a catalog family for each input graph");
  std::string poly_family;
  std::string poly_format = "json";
  std::string poly_basis = "power";
  GraphSource poly_src;
  poly->add_option("--family", poly_family, "Family id")->required();
  poly->add_option("--format", poly_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  poly->add_option("--basis", poly_basis, "Output basis for univariate families: power, falling, binomial")
      ->check(CLI::IsMember({"power", "falling", "binomial"}));
  poly_src.attach(poly);

  // roots
  auto* roots = app.add_subcommand("roots", "Root report for each input graph");
  std::string roots_family;
  double roots_tol = kDefaultResidualTolerance;
  GraphSource roots_src;
  roots->add_option("--family", roots_family, "Univariate family id")->required();
  roots->add_option("--tol", roots_tol, "Residual tolerance for numeric roots");
  roots_src.attach(roots);

  // transform
  auto* transform = app.add_subcommand("transform", "Apply a transform chain and emit transform records");
  std::string tr_family;
  std::string tr_chain;
  GraphSource tr_src;
  transform->add_option("--family", tr_family, "Univariate family id")->required();
  transform->add_option("--chain", tr_chain, "name[:key=value...][,name...]")->required();
  tr_src.attach(transform);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Compare distinctive power of two families on similarity classes");
  std::string eq_left;
  std::string eq_right;
  std::size_t eq_nmax = 6;
  equiv->add_option("--left", eq_left, "Family id")->required();
  equiv->add_option("--right", eq_right, "Family id")->required();
  equiv->add_option("--nmax", eq_nmax, "Largest vertex count (<= 7)");
  bool eq_collisions = false;
  equiv->add_flag("--collisions", eq_collisions, "Also list every collision of the left family");

  // prefactor
  auto* prefactor = app.add_subcommand("prefactor", "Verify P = f * Q(g_1, ...) on a corpus");
  std::string pf_spec_file;
  std::string pf_p;
  std::string pf_q;
  std::string pf_prefactor = "1";
  std::vector<std::string> pf_subs;
  std::size_t pf_nmax = 0;
  GraphSource pf_src;
  prefactor->add_option("--spec", pf_spec_file, "Reduction spec JSON file");
  prefactor->add_option("--p", pf_p, "Source family P");
  prefactor->add_option("--q", pf_q, "Target family Q");
  prefactor->add_option("--prefactor", pf_prefactor, "Similarity expression f");
  prefactor->add_option("--sub", pf_subs, "Substitution g_i (repeat once per variable of Q)");
  prefactor->add_option("--nmax", pf_nmax, "Use all graphs on 1..N vertices as corpus");
  pf_src.attach(prefactor);

  // density
  auto* density = app.add_subcommand("density", "Graph whose quadrant prefactor has a root near a target");
  std::string d_re;
  std::string d_im;
  std::string d_eps = "1/100";
  bool d_emit_graph = false;
  density->add_option("--re", d_re, "Real part (rational or decimal)")->required();
  density->add_option("--im", d_im, "Imaginary part (rational or decimal)")->required();
  density->add_option("--eps", d_eps, "Tolerance (rational or decimal)");
  density->add_flag("--emit-graph", d_emit_graph, "Include the witness graph as graph6");

  // enum
  auto* en = app.add_subcommand("enum", "List non-isomorphic graphs as graph6");
  std::size_t en_n = 0;
  std::optional<std::size_t> en_m;
  std::optional<std::size_t> en_k;
  en->add_option("--n", en_n, "Vertex count (1..8)")->required();
  en->add_option("--m", en_m, "Edge count filter");
  en->add_option("--k", en_k, "Component count filter");

  // scatter
  auto* scatter = app.add_subcommand("scatter", "CSV of numeric roots: re,im,modulus,graph6,family");
  std::string sc_family;
  GraphSource sc_src;
  scatter->add_option("--family", sc_family, "Univariate family id")->required();
  sc_src.attach(scatter);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("grpoly");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub != nullptr ? sub->help() : app.help());
    return kExitUsage;
  }

  const std::size_t threads = threads_flag != 0 ? threads_flag : default_thread_count();

  try {
    if (poly->parsed()) {
      const FamilyId id = parse_family(poly_family);
      const Basis basis = basis_from_string(poly_basis);
      const auto graphs = poly_src.load();
      ChromaticCache cache;
      emit(out, per_graph(graphs, threads, [&](const Graph& g) {
             PolyValue v = compute_family(id, g, &cache);
             if (basis != Basis::power) v = convert_basis(require_univariate(v, poly_family), basis);
             if (poly_format == "json") return to_json(v) + "\n";
             return to_graph6(g) + "\t" + to_string(v) + "\n";
           }));
      return kExitOk;
    }

    if (roots->parsed()) {
      const FamilyId id = parse_family(roots_family);
      if (family_arity(id) != 1) throw UsageError("family '" + roots_family + "' is not univariate");
      const auto graphs = roots_src.load();
      ChromaticCache cache;
      emit(out, per_graph(graphs, threads, [&](const Graph& g) {
             const IntPoly p = std::get<IntPoly>(compute_family(id, g, &cache));
             Json j;
             j["graph6"] = to_graph6(g);
             j["family"] = roots_family;
             j["poly"] = parse_json(to_json(p));
             if (p.is_zero()) {
               j["report"] = nullptr;
             } else {
               j["report"] = parse_json(to_json(root_report(p, roots_tol)));
             }
             return j.dump() + "\n";
           }));
      return kExitOk;
    }

    if (transform->parsed()) {
      const FamilyId id = parse_family(tr_family);
      if (family_arity(id) != 1) throw UsageError("family '" + tr_family + "' is not univariate");
      const auto chain = parse_transform_chain(tr_chain);
      const auto graphs = tr_src.load();
      ChromaticCache cache;
      emit(out, per_graph(graphs, threads, [&](const Graph& g) {
             const auto t = similarity_triple(g);
             IntPoly cur = std::get<IntPoly>(compute_family(id, g, &cache));
             std::string lines;
             for (std::size_t i = 0; i < chain.size(); ++i) {
               TransformRecord rec = apply_transform(cur, chain[i], t);
               Json j;
               j["graph6"] = to_graph6(g);
               j["family"] = tr_family;
               j["step"] = i;
               j["record"] = parse_json(to_json(rec));
               lines += j.dump() + "\n";
               cur = rec.output;
             }
             return lines;
           }));
      return kExitOk;
    }

    if (equiv->parsed()) {
      const FamilyId left = parse_family(eq_left);
      const FamilyId right = parse_family(eq_right);
      if (eq_nmax == 0 || eq_nmax > kEquivalenceMaxVertices) {
        throw UsageError("--nmax must be in 1.." + std::to_string(kEquivalenceMaxVertices));
      }
      out << to_json(dp_compare(left, right, eq_nmax, threads)) << "\n";
      if (eq_collisions) {
        for (const auto& c : find_collisions(left, eq_nmax, threads)) out << to_json(c) << "\n";
      }
      return kExitOk;
    }

    if (prefactor->parsed()) {
      ReductionSpec spec;
      if (!pf_spec_file.empty()) {
        std::ifstream in(pf_spec_file);
        if (!in) throw UsageError("cannot open '" + pf_spec_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        spec = reduction_spec_from_json(buf.str());
      } else {
        if (pf_p.empty() || pf_q.empty()) throw UsageError("prefactor needs --spec or both --p and --q");
        spec.family_p = parse_family(pf_p);
        spec.family_q = parse_family(pf_q);
        spec.prefactor = pf_prefactor;
        spec.subs = pf_subs;
      }
      std::vector<Graph> corpus;
      if (pf_nmax != 0) {
        if (pf_src.chosen() != 0) throw UsageError("use either --nmax or one graph source");
        corpus = enumerate_graphs_up_to(pf_nmax);
      } else {
        corpus = pf_src.load();
      }
      const ReductionVerdict v = verify_prefactor_reduction(spec, corpus, {}, {}, threads);
      out << to_json(v, spec) << "\n";
      return v.status == VerdictStatus::fail ? kExitVerificationFailed : kExitOk;
    }

    if (density->parsed()) {
      const DensityWitness w = density_witness(parse_rational(d_re), parse_rational(d_im), parse_rational(d_eps));
      out << to_json(w, d_emit_graph) << "\n";
      return w.exact_zero ? kExitOk : kExitVerificationFailed;
    }

    if (en->parsed()) {
      for (const auto& g : enumerate_graphs(en_n, EnumerationFilter{en_m, en_k})) out << to_graph6(g) << "\n";
      return kExitOk;
    }

    if (scatter->parsed()) {
      const FamilyId id = parse_family(sc_family);
      if (family_arity(id) != 1) throw UsageError("family '" + sc_family + "' is not univariate");
      const auto graphs = sc_src.load();
      ChromaticCache cache;
      out << scatter_csv_header() << "\n";
      emit(out, per_graph(graphs, threads, [&](const Graph& g) {
             const IntPoly p = std::get<IntPoly>(compute_family(id, g, &cache));
             if (p.degree() < 1) return std::string();
             std::ostringstream rows;
             write_scatter_rows(rows, complex_roots(p), to_graph6(g), sc_family);
             return rows.str();
           }));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub != nullptr ? sub->help() : app.help());
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace grpoly::cli
