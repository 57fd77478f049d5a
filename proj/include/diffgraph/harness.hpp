#pragma once

#include <atomic>
#include <chrono>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "diffgraph/catalog.hpp"
#include "diffgraph/classifier.hpp"
#include "diffgraph/genus.hpp"
#include "diffgraph/group_graphs.hpp"
#include "diffgraph/io.hpp"

namespace diffgraph {

enum class Status { Consistent, Contradiction, Inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Consistent: return "consistent";
    case Status::Contradiction: return "contradiction";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ClassificationRecord {
  std::string groupName;
  std::size_t order = 0;
  GenusClass predictedGenus;
  GenusClass predictedCrosscap;
  GenusResult computedGenus;
  GenusResult computedCrosscap;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Status status = Status::Consistent;
  std::string note;
  std::map<std::string, double> timings;  // milliseconds per stage
};

/// Status of one computed result against one predicted class.
inline Status compare(const GenusClass& predicted, const GenusResult& computed) {
  if (predicted.value >= kGE3) {
    if (computed.upper && *computed.upper < kGE3) return Status::Contradiction;
    return computed.lower >= kGE3 ? Status::Consistent : Status::Inconclusive;
  }
  if (computed.lower > predicted.value) return Status::Contradiction;
  if (computed.upper && *computed.upper < predicted.value) return Status::Contradiction;
  return computed.exact && computed.lower == predicted.value ? Status::Consistent : Status::Inconclusive;
}

inline Status combine(Status a, Status b) {
  if (a == Status::Contradiction || b == Status::Contradiction) return Status::Contradiction;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Consistent;
}

/// Default options for verification: the search stops once a lower bound
/// reaches 3, since the classifier never predicts a value above 2.
inline GenusOptions verification_options(SearchBudget budget = {}) {
  GenusOptions opt;
  opt.search = budget;
  opt.skip_search_at = kGE3;
  return opt;
}

/// Classifies G, computes genus and cross-cap of D(G) and compares them.
/// p-groups and the trivial group give a consistent row with an empty graph.
/// Throws NotNilpotent for non-nilpotent inputs.
inline ClassificationRecord verify_group(const GroupTable& G, const GenusOptions& opt = verification_options()) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); };
  ClassificationRecord rec;
  rec.groupName = G.source().empty() ? "G" : G.source();
  rec.order = G.order();

  auto t = Clock::now();
  rec.predictedGenus = classify_genus(G);
  rec.predictedCrosscap = classify_crosscap(G);
  rec.timings["classify"] = ms_since(t);

  t = Clock::now();
  const auto D = difference_graph(G);
  rec.vertices = D.graph.vertex_count();
  rec.edges = D.graph.edge_count();
  rec.timings["graph"] = ms_since(t);

  t = Clock::now();
  rec.computedGenus = genus_of_graph(D.graph, Surface::Orientable, opt);
  rec.timings["genus"] = ms_since(t);
  t = Clock::now();
  rec.computedCrosscap = genus_of_graph(D.graph, Surface::Nonorientable, opt);
  rec.timings["crosscap"] = ms_since(t);

  if (D.graph.vertex_count() == 0) rec.note = "null graph";
  rec.status = combine(compare(rec.predictedGenus, rec.computedGenus), compare(rec.predictedCrosscap, rec.computedCrosscap));
  for (const auto* r : {&rec.computedGenus, &rec.computedCrosscap})
    if (r->exact && r->certificate && !verify_certificate(D.graph, *r->certificate, r->surface, r->lower))
      throw std::logic_error("certificate for " + rec.groupName + " does not verify");
  return rec;
}

struct SweepSummary {
  std::size_t consistent = 0;
  std::size_t contradictions = 0;
  std::size_t inconclusive = 0;
  std::size_t skipped_non_nilpotent = 0;
};

struct SweepResult {
  std::vector<ClassificationRecord> records;
  SweepSummary summary;
};

/// verify_group over every nilpotent catalog group of order at most
/// `max_order`, in parallel; records are ordered by (order, name).
inline SweepResult verify_sweep(std::size_t max_order, const GenusOptions& opt = verification_options(),
                                unsigned threads = 0) {
  const auto cat = builtin_catalog(max_order);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<ClassificationRecord>> slots(cat.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cat.size();) {
      const auto G = cat[i].table();
      if (!is_nilpotent(G)) continue;
      slots[i] = verify_group(G, opt);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned k = 0; k < threads; ++k) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  SweepResult out;
  for (auto& s : slots) {
    if (!s) {
      ++out.summary.skipped_non_nilpotent;
      continue;
    }
    switch (s->status) {
      case Status::Consistent: ++out.summary.consistent; break;
      case Status::Contradiction: ++out.summary.contradictions; break;
      case Status::Inconclusive: ++out.summary.inconclusive; break;
    }
    out.records.push_back(std::move(*s));
  }
  std::stable_sort(out.records.begin(), out.records.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.groupName < b.groupName;
  });
  return out;
}

inline Json to_json(const GenusClass& c) {
  Json j;
  j["value"] = c.label();
  j["basis"] = c.basis;
  j["witness"] = c.witness;
  return j;
}

inline Json to_json(const GenusResult& r) {
  Json j;
  j["surface"] = to_string(r.surface);
  j["lower"] = r.lower;
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["exact"] = r.exact;
  Json prov = Json::array();
  for (const auto& p : r.provenance)
    prov.push_back(Json{{"kind", p.kind}, {"detail", p.detail}, {"value", p.value}, {"bound", p.upper ? "upper" : "lower"}});
  j["provenance"] = prov;
  j["certificate"] = r.exact && r.certificate ? certificate_json({r.surface, r.lower, *r.certificate}) : Json(nullptr);
  return j;
}

inline Json to_json(const ClassificationRecord& r) {
  Json j;
  j["groupName"] = r.groupName;
  j["order"] = r.order;
  j["predictedGenus"] = to_json(r.predictedGenus);
  j["predictedCrosscap"] = to_json(r.predictedCrosscap);
  j["computedGenus"] = to_json(r.computedGenus);
  j["computedCrosscap"] = to_json(r.computedCrosscap);
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["status"] = to_string(r.status);
  j["timings"] = r.timings;
  return j;
}

inline std::string bracket(const GenusResult& r) {
  if (r.exact) return std::to_string(r.lower);
  return "[" + std::to_string(r.lower) + "," + (r.upper ? std::to_string(*r.upper) : std::string("?")) + "]";
}

struct Report {
  Json records = Json::array();
  std::string table;
};

inline Report export_report(const std::vector<ClassificationRecord>& records) {
  Report rep;
  std::ostringstream os;
  os << std::left << std::setw(16) << "group" << std::setw(7) << "order" << std::setw(10) << "V/E" << std::setw(7) << "pred.g"
     << std::setw(9) << "genus" << std::setw(7) << "pred.c" << std::setw(9) << "crosscap" << "status\n";
  for (const auto& r : records) {
    rep.records.push_back(to_json(r));
    os << std::setw(16) << r.groupName << std::setw(7) << r.order
       << std::setw(10) << (std::to_string(r.vertices) + "/" + std::to_string(r.edges)) << std::setw(7) << r.predictedGenus.label()
       << std::setw(9) << bracket(r.computedGenus) << std::setw(7) << r.predictedCrosscap.label() << std::setw(9)
       << bracket(r.computedCrosscap) << to_string(r.status) << "\n";
  }
  rep.table = os.str();
  return rep;
}

inline std::string summary_line(const SweepSummary& s) {
  return "consistent: " + std::to_string(s.consistent) + ", inconclusive: " + std::to_string(s.inconclusive) +
         ", contradictions: " + std::to_string(s.contradictions);
}

}  // namespace diffgraph
