#pragma once

// Serialization of reports: JSON records, CSV rows and a plain-text table.
// Rationals are written as "p/q" strings, big integers as decimal strings.

#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "neumaier/characterize.hpp"
#include "neumaier/graph6.hpp"
#include "neumaier/refute.hpp"
#include "neumaier/sweep.hpp"

namespace neumaier {

using Json = nlohmann::ordered_json;

inline Json to_json(const Spectrum& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigs) eigs.push_back({e.value, e.multiplicity});
  Json cp = Json::array();
  for (const auto& c : s.charpoly.coeffs) cp.push_back(c.str());
  return Json{{"eigs", eigs}, {"distinct", s.distinct_count}, {"charpoly", cp}};
}

inline Json to_json(const TheoremOutcome& t) {
  Json j{{"verdict", to_string(t.verdict)}, {"equality", t.equality_case}, {"detail", t.detail}};
  if (t.witness) j["witness"] = *t.witness;
  return j;
}

inline Json to_json(const ClassReport& r, const std::string& graph6) {
  Json j;
  j["graph6"] = graph6;
  j["taxonomy"] = to_string(r.taxonomy);
  j["n"] = r.order;
  j["edges"] = r.edges;
  j["triangles"] = r.triangles;
  j["connected"] = r.connected;
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);

  Json p = Json::object();
  p["v"] = r.order;
  if (r.erg) {
    p["k"] = r.erg->k;
    p["lambda"] = r.erg->lambda;
  }
  if (r.srg) p["mu"] = r.srg->mu;
  if (r.s) p["s"] = *r.s;
  if (r.e) p["e"] = *r.e;
  if (r.avg) {
    p["kbar"] = rational_string(r.avg->kbar);
    p["lambdabar"] = rational_string(r.avg->lambdabar);
    p["mubar"] = rational_string(r.avg->mubar);
    p["sbar"] = r.avg->sbar;
    p["ebar"] = r.avg->ebar;
    p["theta_m"] = r.avg->theta_m;
    p["theta_M"] = r.avg->theta_M;
  }
  j["params"] = p;
  j["spectrum"] = to_json(r.spectrum);

  Json cliques = Json::array();
  for (const auto& c : r.regular_cliques) cliques.push_back(c.members.to_vector());
  j["regular_cliques"] = cliques;
  j["clique_number"] = r.clique_number;
  j["one_walk_regular"] = r.one_walk_regular ? Json(*r.one_walk_regular) : Json(nullptr);
  if (r.extension) j["extension_hypothesis"] = r.extension->holds;

  Json th = Json::object();
  for (const auto& [id, t] : r.theorems) th[id] = to_json(t);
  j["theorems"] = th;
  return j;
}

inline std::string csv_header() { return "taxonomy,v,k,lambda,s,e,distinct,theta_min,theta_max2"; }

inline std::string csv_row(const ClassReport& r) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
  };
  std::string row = to_string(r.taxonomy);
  row += "," + std::to_string(r.order);
  row += "," + (r.erg ? std::to_string(r.erg->k) : std::string{});
  row += "," + (r.erg ? std::to_string(r.erg->lambda) : std::string{});
  row += "," + (r.s ? num(*r.s) : std::string{});
  row += "," + (r.e ? num(*r.e) : std::string{});
  row += "," + std::to_string(r.spectrum.distinct_count);
  row += "," + (r.spectrum.eigs.empty() ? std::string{} : num(r.spectrum.min()));
  row += "," + (r.spectrum.distinct_count >= 2 ? num(named_eigenvalues(r.spectrum).second_max) : std::string{});
  return row;
}

inline std::string human_report(const ClassReport& r, const std::string& graph6) {
  std::ostringstream os;
  os << graph6 << "  " << to_string(r.taxonomy) << "  n=" << r.order << " m=" << r.edges;
  if (r.erg) os << " k=" << r.erg->k << " lambda=" << r.erg->lambda;
  if (r.srg) os << " mu=" << r.srg->mu;
  if (r.s) os << " s=" << *r.s << " e=" << *r.e;
  os << " distinct=" << r.spectrum.distinct_count << "\n";
  for (const auto& [id, t] : r.theorems) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-22s %-9s%s", id.c_str(), to_string(t.verdict),
                  t.equality_case ? " (equality)" : "");
    os << line << "  " << t.detail << "\n";
  }
  return os.str();
}

inline Json to_json(const SweepReport& s) {
  Json buckets = Json::object();
  for (Taxonomy t : kAllTaxonomies) {
    const auto it = s.buckets.find(t);
    buckets[to_string(t)] = it == s.buckets.end() ? 0 : it->second;
  }
  Json th = Json::object();
  for (const auto& [id, t] : s.theorems)
    th[id] = {{"holds", t.holds}, {"violated", t.violated}, {"skipped", t.skipped}, {"equality", t.equality}};
  Json w = Json::array();
  for (const auto& x : s.witnesses) w.push_back({{"index", x.index}, {"graph6", x.graph6}, {"reason", x.reason}});
  return Json{{"graphs", s.graphs},
              {"ok", s.ok()},
              {"buckets", buckets},
              {"theorems", th},
              {"neumaier_four_distinct", s.neumaier_four_distinct},
              {"strictly_neumaier", s.strictly_neumaier},
              {"cluster_retuned", s.cluster_retuned},
              {"internal_errors", s.internal_errors},
              {"failures", s.failures},
              {"witnesses", w}};
}

inline std::string human_report(const SweepReport& s) {
  std::ostringstream os;
  os << "graphs: " << s.graphs << "  failures: " << s.failures << "  internal errors: " << s.internal_errors
     << "  neumaier with 4 eigenvalues: " << s.neumaier_four_distinct << "  cluster tolerance retuned: " << s.cluster_retuned
     << "\n";
  for (Taxonomy t : kAllTaxonomies) {
    const auto it = s.buckets.find(t);
    char line[96];
    std::snprintf(line, sizeof line, "  %-28s %llu\n", to_string(t),
                  static_cast<unsigned long long>(it == s.buckets.end() ? 0 : it->second));
    os << line;
  }
  char head[128];
  std::snprintf(head, sizeof head, "  %-22s %10s %10s %10s %10s\n", "theorem", "holds", "violated", "skipped",
                "equality");
  os << head;
  for (const auto& [id, t] : s.theorems) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-22s %10llu %10llu %10llu %10llu\n", id.c_str(),
                  static_cast<unsigned long long>(t.holds), static_cast<unsigned long long>(t.violated),
                  static_cast<unsigned long long>(t.skipped), static_cast<unsigned long long>(t.equality));
    os << line;
  }
  for (const auto& w : s.witnesses) os << "  witness #" << w.index << " " << w.graph6 << ": " << w.reason << "\n";
  return os.str();
}

inline Json to_json(const FourEvRefutation& r) {
  return Json{{"k", r.k},
              {"theta", r.theta},
              {"theta2", r.theta2},
              {"e", r.e},
              {"s", r.s},
              {"v", r.v},
              {"lambda", r.lambda},
              {"vertex_residual", r.vertex_residual},
              {"triangle_residual", r.triangle_residual},
              {"theta1", r.theta1},
              {"theta1_closed_form", r.theta1_closed},
              {"contradiction", r.contradiction},
              {"reason", r.reason},
              {"integral", {{"s", r.integral_s}, {"v", r.integral_v}, {"lambda", r.integral_lambda}}}};
}

inline std::string human_report(const FourEvRefutation& r) {
  std::ostringstream os;
  os.precision(12);
  os << "inputs: k=" << r.k << " theta=" << r.theta << " theta2=" << r.theta2 << " e=" << r.e << "\n"
     << "s = theta + e = " << r.s << (r.integral_s ? "" : " (non-integral)") << "\n"
     << "v = (s+1)(k-s+e)/e = " << r.v << (r.integral_v ? "" : " (non-integral)") << "\n"
     << "lambda = s-1 + (k-s)(e-1)/s = " << r.lambda << (r.integral_lambda ? "" : " (non-integral)") << "\n"
     << "vertex count residual = " << r.vertex_residual << "\n"
     << "triangle count residual = " << r.triangle_residual << "\n"
     << "theta1 (diagonal walk equation) = " << r.theta1 << "\n"
     << "theta1 closed form -k/(e+theta) = " << r.theta1_closed << "\n"
     << "contradiction: " << (r.contradiction ? "yes" : "no") << " (" << r.reason << ")\n";
  return os.str();
}

}  // namespace neumaier
