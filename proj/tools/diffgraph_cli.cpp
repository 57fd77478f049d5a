#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>

#include "diffgraph.hpp"

namespace dg = diffgraph;

namespace {

constexpr int kOk = 0;
constexpr int kContradiction = 1;
constexpr int kInputError = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    dg::write_file(path, text);
}

// A graph file, a Cayley table file (its difference graph) or a descriptor.
dg::SimpleGraph load_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const auto text = dg::read_file(arg);
    try {
      return dg::parse_edge_list(text);
    } catch (const dg::ParseError& edge_error) {
      try {
        return dg::difference_graph(dg::ingest_table(text, arg)).graph;
      } catch (const dg::ParseError&) {
        throw edge_error;
      }
    }
  }
  return dg::difference_graph(dg::build_group(arg)).graph;
}

std::string result_text(const dg::GenusResult& r) {
  std::ostringstream os;
  const char* what = r.surface == dg::Surface::Orientable ? "genus" : "crosscap";
  if (r.exact)
    os << what << ": " << r.lower << " (exact)\n";
  else
    os << what << ": [" << r.lower << ", " << (r.upper ? std::to_string(*r.upper) : std::string("?")) << "]\n";
  for (const auto& p : r.provenance)
    os << "  " << (p.upper ? "upper " : "lower ") << p.value << "  " << p.kind << ": " << p.detail << "\n";
  return os.str();
}

void print_group_info(const dg::GroupTable& G) {
  std::cout << "group: " << G.source() << "\norder: " << G.order() << "\nexponent: " << dg::exponent(G) << "\norder spectrum:";
  for (auto [o, c] : G.order_spectrum()) std::cout << " " << o << ":" << c;
  std::cout << "\n";
  if (dg::is_nilpotent(G)) {
    const auto S = dg::sylow_decomposition(G);
    std::cout << "nilpotent: yes\nsylow:";
    for (std::size_t i = 0; i < S.primes.size(); ++i)
      std::cout << " p=" << S.primes[i] << " order " << S.components[i].members.count();
    std::cout << "\n";
  } else {
    std::cout << "nilpotent: no\n";
  }
  std::cout << "maximal cyclic subgroups: " << dg::maximal_cyclic_subgroups(G).size() << "\n";
}

dg::Json condition_json(const dg::ConditionReport& r) {
  dg::Json j;
  j["condition"] = dg::to_string(r.condition);
  j["holds"] = r.holds;
  j["pattern"] = r.pattern;
  j["witness"] = r.witness;
  j["reading"] = r.reading;
  j["explanation"] = r.explanation;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference graphs of finite nilpotent groups: construction, genus, cross-cap and classification"};
  app.require_subcommand(1);

  // group
  auto* group = app.add_subcommand("group", "Build, ingest or describe groups");
  group->require_subcommand(1);
  std::string g_desc, g_path, g_out;
  auto* g_build = group->add_subcommand("build", "Print the Cayley table of a descriptor such as Z4xZ2xZ3");
  g_build->add_option("descriptor", g_desc)->required();
  g_build->add_option("-o,--output", g_out, "Write the table to a file");
  auto* g_ingest = group->add_subcommand("ingest", "Validate a Cayley table file");
  g_ingest->add_option("path", g_path)->required();
  auto* g_info = group->add_subcommand("info", "Order, exponent, order spectrum, Sylow structure");
  g_info->add_option("group", g_desc, "Descriptor or table file")->required();

  // graph
  auto* graph = app.add_subcommand("graph", "Build or reduce graphs");
  graph->require_subcommand(1);
  std::string gr_kind = "difference", gr_fmt = "edgelist", gr_group, gr_out, gr_in, gr_log;
  auto* gr_build = graph->add_subcommand("build", "Power, enhanced power or difference graph of a group");
  gr_build->add_option("--kind", gr_kind)->check(CLI::IsMember({"power", "enhanced", "difference"}));
  gr_build->add_option("--out", gr_fmt, "Output format")->check(CLI::IsMember({"edgelist", "dot"}));
  gr_build->add_option("-o,--output", gr_out, "Write to a file");
  gr_build->add_option("group", gr_group, "Descriptor or table file")->required();
  auto* gr_reduce = graph->add_subcommand("reduce", "Homeomorphic reduction of an edge-list graph");
  gr_reduce->add_option("input", gr_in)->required();
  gr_reduce->add_option("--log", gr_log, "Write the reduction log (JSON) to a file");
  gr_reduce->add_option("-o,--output", gr_out, "Write the reduced graph to a file");

  // genus
  auto* genus = app.add_subcommand("genus", "Genus and cross-cap");
  genus->require_subcommand(1);
  std::string ge_in, ge_surface = "o", ge_cert;
  bool ge_exact = false;
  double ge_budget = dg::SearchBudget{}.exhaustive_cap;
  std::uint64_t ge_seed = 1;
  int ge_restarts = dg::SearchBudget{}.restarts, ge_moves = dg::SearchBudget{}.moves;
  auto* ge_compute = genus->add_subcommand("compute", "Bounds, search and certificate for a graph or a group's difference graph");
  ge_compute->add_option("graph", ge_in, "Edge-list file, table file or descriptor")->required();
  ge_compute->add_option("--surface", ge_surface)->check(CLI::IsMember({"o", "n"}));
  ge_compute->add_flag("--exact", ge_exact, "Run the branch-and-bound without a node cap");
  ge_compute->add_option("--budget", ge_budget, "Exhaustive configuration cap");
  ge_compute->add_option("--seed", ge_seed);
  ge_compute->add_option("--restarts", ge_restarts);
  ge_compute->add_option("--moves", ge_moves);
  ge_compute->add_option("--cert", ge_cert, "Write the certificate (JSON) to a file");
  std::string gv_graph, gv_cert;
  auto* ge_verify = genus->add_subcommand("verify", "Re-check a certificate against a graph");
  ge_verify->add_option("graph", gv_graph)->required();
  ge_verify->add_option("cert", gv_cert)->required();

  // classify
  std::string cl_group;
  bool cl_json = false;
  auto* classify = app.add_subcommand("classify", "Predicted genus and cross-cap classes of D(G)");
  classify->add_option("group", cl_group, "Descriptor or table file")->required();
  classify->add_flag("--json", cl_json);

  // verify
  auto* verify = app.add_subcommand("verify", "Compare predictions with computation");
  verify->require_subcommand(1);
  std::size_t vs_max = 36;
  std::string vs_report, vg_group;
  unsigned vs_threads = 0;
  auto* v_sweep = verify->add_subcommand("sweep", "Verify every catalog group up to an order");
  v_sweep->add_option("--max-order", vs_max)->required()->check(CLI::Range(1, 200));
  v_sweep->add_option("--budget", ge_budget, "Exhaustive configuration cap");
  v_sweep->add_option("--seed", ge_seed);
  v_sweep->add_option("--restarts", ge_restarts);
  v_sweep->add_option("--moves", ge_moves);
  v_sweep->add_option("--threads", vs_threads, "Worker threads (0 = hardware concurrency)");
  v_sweep->add_option("--report", vs_report, "Write the JSON report to a file");
  auto* v_group = verify->add_subcommand("group", "Verify one group");
  v_group->add_option("group", vg_group, "Descriptor or table file")->required();
  v_group->add_option("--budget", ge_budget);
  v_group->add_option("--seed", ge_seed);
  v_group->add_flag("--json", cl_json);

  // catalog
  std::size_t ca_max = 200;
  auto* catalog = app.add_subcommand("catalog", "Built-in group catalog");
  catalog->require_subcommand(1);
  auto* ca_list = catalog->add_subcommand("list", "List catalog groups");
  ca_list->add_option("--max-order", ca_max)->check(CLI::Range(1, 200));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  auto budget = [&] {
    dg::SearchBudget b;
    b.exhaustive_cap = ge_budget;
    b.seed = ge_seed;
    b.restarts = ge_restarts;
    b.moves = ge_moves;
    return b;
  };

  try {
    if (g_build->parsed()) {
      emit(dg::table_to_text(dg::build_group(g_desc)), g_out);
    } else if (g_ingest->parsed()) {
      const auto G = dg::ingest_table(dg::read_file(g_path), g_path);
      std::cout << "valid group table of order " << G.order() << "\n";
    } else if (g_info->parsed()) {
      print_group_info(dg::load_group(g_desc));
    } else if (gr_build->parsed()) {
      const auto G = dg::load_group(gr_group);
      const auto gg = dg::build_group_graph(G, dg::parse_graph_kind(gr_kind));
      emit(gr_fmt == "dot" ? dg::to_dot(gg.graph, gr_kind) : dg::to_edge_list(gg.graph), gr_out);
    } else if (gr_reduce->parsed()) {
      const auto g = dg::parse_edge_list(dg::read_file(gr_in));
      const auto red = dg::reduce_homeomorphic(g);
      emit(dg::to_edge_list(red.graph), gr_out);
      if (!gr_log.empty()) dg::write_file(gr_log, dg::reduction_log_json(red.log).dump(2) + "\n");
    } else if (ge_compute->parsed()) {
      const auto g = load_graph(ge_in);
      dg::GenusOptions opt;
      opt.search = budget();
      if (ge_exact) opt.search.exhaustive_cap = std::numeric_limits<double>::infinity();
      const auto surface = dg::parse_surface(ge_surface);
      const auto r = dg::genus_of_graph(g, surface, opt);
      std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n" << result_text(r);
      if (!ge_cert.empty()) {
        if (!r.certificate) {
          std::cerr << "no certificate: no embedding was found\n";
          return kInputError;
        }
        const int claimed = *r.upper;
        dg::write_file(ge_cert, dg::certificate_json({surface, claimed, *r.certificate}).dump(2) + "\n");
      }
    } else if (ge_verify->parsed()) {
      const auto g = load_graph(gv_graph);
      const auto c = dg::parse_certificate(dg::read_file(gv_cert));
      bool ok = false;
      std::string why;
      try {
        ok = dg::verify_certificate(g, c.scheme, c.surface, c.genus);
        if (!ok) {
          const auto t = dg::trace_faces(g, c.scheme);
          why = "scheme has Euler genus " + std::to_string(t.euler_genus) + (t.orientable ? " (orientable)" : " (nonorientable)");
        }
      } catch (const dg::SchemeMismatch& e) {
        why = e.what();
      }
      std::cout << (ok ? "certificate verified: " : "certificate rejected: ") << dg::to_string(c.surface) << " genus " << c.genus
                << (why.empty() ? "" : "; " + why) << "\n";
      return ok ? kOk : kContradiction;
    } else if (classify->parsed()) {
      const auto G = dg::load_group(cl_group);
      const auto gc = dg::classify_genus(G);
      const auto cc = dg::classify_crosscap(G);
      std::vector<dg::ConditionReport> reports;
      const auto S = dg::sylow_decomposition(G);
      for (std::size_t i = 0; i < S.primes.size(); ++i)
        if (S.primes[i] == 2) {
          const auto P = dg::subgroup_table(G, S.components[i].members, "Sylow 2-subgroup");
          for (auto c : {dg::Condition::C1, dg::Condition::C2, dg::Condition::C3}) reports.push_back(dg::check_condition(P, c));
        }
      if (cl_json) {
        dg::Json j;
        j["group"] = G.source();
        j["order"] = G.order();
        j["genus"] = dg::to_json(gc);
        j["crosscap"] = dg::to_json(cc);
        j["conditions"] = dg::Json::array();
        for (const auto& r : reports) j["conditions"].push_back(condition_json(r));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "genus: " << gc.label() << "  (" << gc.basis << ")";
        if (!gc.witness.empty()) std::cout << " witness " << gc.witness;
        std::cout << "\ncrosscap: " << cc.label() << "  (" << cc.basis << ")";
        if (!cc.witness.empty()) std::cout << " witness " << cc.witness;
        std::cout << "\n";
        for (const auto& r : reports)
          std::cout << dg::to_string(r.condition) << " on the Sylow 2-subgroup: " << (r.holds ? "holds" : "fails") << " ("
                    << r.explanation << ")\n";
      }
    } else if (v_sweep->parsed()) {
      const auto res = dg::verify_sweep(vs_max, dg::verification_options(budget()), vs_threads);
      const auto rep = dg::export_report(res.records);
      std::cout << rep.table << dg::summary_line(res.summary) << "\n";
      if (!vs_report.empty()) dg::write_file(vs_report, rep.records.dump(2) + "\n");
      return res.summary.contradictions == 0 ? kOk : kContradiction;
    } else if (v_group->parsed()) {
      const auto rec = dg::verify_group(dg::load_group(vg_group), dg::verification_options(budget()));
      if (cl_json) {
        std::cout << dg::to_json(rec).dump(2) << "\n";
      } else {
        std::cout << dg::export_report({rec}).table << result_text(rec.computedGenus) << result_text(rec.computedCrosscap);
      }
      return rec.status == dg::Status::Contradiction ? kContradiction : kOk;
    } else if (ca_list->parsed()) {
      for (const auto& e : dg::builtin_catalog(ca_max)) std::cout << e.order << "\t" << e.name << "\n";
    }
  } catch (const dg::NotNilpotent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
