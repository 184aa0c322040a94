/* Copyright 2026 The fqcert Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fqcert/bignum.hpp"
#include "fqcert/bounds.hpp"
#include "fqcert/census.hpp"
#include "fqcert/chow.hpp"
#include "fqcert/oracle_check.hpp"

namespace fqcert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exact integers: a JSON number while it fits a double exactly, else a decimal string.
inline Json big_json(const BigInt& x) {
  static const BigInt kLimit = BigInt(1) << 53;
  if (x < kLimit && x > -kLimit) return x.convert_to<std::int64_t>();
  return x.str();
}

inline Json rational_json(const Rational& r) { return Json{{"exact", exact_string(r)}, {"decimal", to_double(r)}}; }

inline Json big_list(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(big_json(x));
  return out;
}

inline Json pattern_json(const DegreePattern& p) {
  return Json{{"n", p.n}, {"s", p.s()}, {"d", p.d}};
}

/// Closed-form report; probability parts appear only when q is given.
inline Json bounds_json(const DegreePattern& p, std::optional<std::uint64_t> q, const std::vector<Certificate>& certs) {
  const auto st = pattern_stats(p);
  Json out;
  out["schema"] = kSchemaVersion;
  out["pattern"] = pattern_json(p);
  out["stats"] = Json{{"delta", big_json(st.delta)}, {"sigma", st.sigma}, {"D", big_list(st.D)}, {"D_total", big_json(st.D_total)}};
  std::optional<BoundsReport> rep;
  if (q) {
    rep = bounds_report(p, *q, certs);
    out["q"] = *q;
    out["p_n"] = big_json(rep->p_n);
    out["p_D"] = big_json(rep->p_D);
    out["p_D_digits"] = rep->p_D.str().size();
  }
  Json per = Json::object();
  for (std::size_t c = 0; c < certs.size(); ++c) {
    const auto db = degree_bounds(p, certs[c]);
    Json entry{{"per_i", big_list(db.per_i)}, {"concise", big_json(db.concise)},
               {"macaulay_degree", certificate_macaulay_degree(p, certs[c])},
               {"test_degrees", recipe_degrees(p, certs[c])}};
    if (rep) {
      const auto& pb = rep->certs[c];
      entry["probability"] = rational_json(pb.concise);
      entry["guard"] = pb.guard_met ? "met" : "unmet";
      entry["guard_threshold"] = Json{{"three_q", big_json(3 * pb.q)}, {"s_times_e", big_json(BigInt(p.s()) * db.concise)}};
      entry["product_probability"] = rational_json(pb.product);
    }
    per[std::string(to_string(certs[c]))] = entry;
  }
  out["certificates"] = per;
  return out;
}

inline Json hypersurface_json(const HypersurfaceCensusBounds& h) {
  return Json{{"n", h.n},
              {"s", h.s},
              {"b", h.b},
              {"q", h.q},
              {"D_b", big_json(h.D_b)},
              {"N_ind", big_json(h.n_ind)},
              {"reference", big_json(h.reference)},
              {"g", big_json(h.g)},
              {"M_s", h.m_s},
              {"loglog_bound", h.loglog},
              {"exceptional_constant", h.exceptional},
              {"hyp_relative_error", rational_json(h.hyp_error)},
              {"hyp_relative_error_loglog", h.hyp_error_loglog},
              {"irr_hyp_relative_error", rational_json(h.irr_hyp_error)},
              {"irr_relative_error", rational_json(h.irr_error)},
              {"irr_relative_error_loglog", h.irr_error_loglog},
              {"p_irr_lower", rational_json(h.p_irr)},
              {"p_irr_lower_loglog", h.p_irr_loglog}};
}

inline Json landscape_json(const PatternLandscape& l) {
  Json pats = Json::array();
  for (const auto& e : l.patterns) {
    pats.push_back(Json{{"d", e.pattern.d}, {"D_total", big_json(e.D_total)}, {"margin", big_json(e.margin)}});
  }
  Json out{{"schema", kSchemaVersion},
           {"b", l.b},
           {"n", l.n},
           {"s", l.s},
           {"patterns", pats},
           {"g", big_json(l.g)},
           {"M_s", l.m_s},
           {"dominance", l.dominance},
           {"g_margin", l.g_margin}};
  out["best_rival_margin"] = l.best_rival_margin ? big_json(*l.best_rival_margin) : Json(nullptr);
  out["g_from_D_difference"] = l.g_difference ? big_json(*l.g_difference) : Json(nullptr);
  return out;
}

inline std::string landscape_csv(const PatternLandscape& l) {
  std::ostringstream out;
  out << "d,D_total,margin\n";
  for (const auto& e : l.patterns) {
    std::string d;
    for (unsigned x : e.pattern.d) d += (d.empty() ? "" : " ") + std::to_string(x);
    out << d << "," << e.D_total.str() << "," << e.margin.str() << "\n";
  }
  return out.str();
}

struct ChowRow {
  std::size_t i = 0;
  BigInt coefficient;
  BigInt closed_form;
  bool match = false;
};

struct ChowTable {
  Certificate cert;
  std::vector<ChowRow> rows;
  BigInt top;
  BigInt top_closed_form;
  bool all_match = false;
};

inline ChowTable chow_table(Certificate cert, const DegreePattern& p) {
  const auto cls = chow_class(cert, p);
  const auto db = degree_bounds(p, cert);
  const auto st = pattern_stats(p);
  ChowTable t{cert, {}, top_coefficient(cls), 0, true};
  const BigInt sigma = st.sigma;
  t.top_closed_form = cert == Certificate::nons ? ipow(sigma, p.n - static_cast<unsigned>(p.s()) + 1) * st.delta
                                                : sigma * sigma * st.delta;
  t.all_match = t.top == t.top_closed_form;
  for (std::size_t i = 1; i <= p.s(); ++i) {
    ChowRow r{i, extract_bound(cls, i), db.per_i[i - 1], false};
    r.match = r.coefficient == r.closed_form;
    t.all_match = t.all_match && r.match;
    t.rows.push_back(r);
  }
  return t;
}

inline Json chow_json(const DegreePattern& p) {
  Json out{{"schema", kSchemaVersion}, {"pattern", pattern_json(p)}};
  bool all = true;
  for (Certificate c : {Certificate::nons, Certificate::irr}) {
    const auto t = chow_table(c, p);
    Json rows = Json::object();
    for (const auto& r : t.rows) {
      rows[std::to_string(r.i)] =
          Json{{"coefficient", big_json(r.coefficient)}, {"closed_form", big_json(r.closed_form)}, {"match", r.match}};
    }
    out[std::string(to_string(c))] = Json{{"theta0_n_theta_i", rows},
                                          {"theta0_n_plus_1", Json{{"coefficient", big_json(t.top)},
                                                                   {"closed_form", big_json(t.top_closed_form)},
                                                                   {"match", t.top == t.top_closed_form}}}};
    all = all && t.all_match;
  }
  out["all_match"] = all;
  return out;
}

inline Json census_json(const CensusReport& r, bool include_runtime = true) {
  const auto& c = r.config;
  Json params{{"n", c.pattern.n}, {"s", c.pattern.s()}, {"d", c.pattern.d}, {"q", c.q}, {"field", r.field->spec()},
              {"certs", Json::array()}, {"exhaustive_cap", c.cap}, {"count_points", c.count_points}};
  for (Certificate cert : c.certs) params["certs"].push_back(std::string(to_string(cert)));
  if (c.mode == CensusMode::monte_carlo) {
    params["trials"] = c.trials;
  } else {
    params["exhaustive_size"] = r.total;
  }
  Json out{{"schema", kSchemaVersion}, {"params", params}, {"mode", std::string(to_string(c.mode))}};
  out["seed"] = c.mode == CensusMode::monte_carlo ? Json(c.seed) : Json(nullptr);
  out["p_D"] = big_json(r.p_D);
  Json per = Json::object();
  for (const auto& t : r.per_cert) {
    Json e{{"count", t.count}, {"total", t.total}, {"freq", rational_json(t.freq)}};
    if (t.interval) e["interval"] = Json{{"lo", t.interval->lo}, {"hi", t.interval->hi}, {"z", 3}};
    e["bound"] = rational_json(t.bound.concise);
    e["guard"] = t.bound.guard_met ? "met" : "unmet";
    e["verdict"] = std::string(to_string(t.verdict));
    e["product_bound"] = rational_json(t.bound.product);
    e["product_verdict"] = std::string(to_string(t.product_verdict));
    if (c.mode == CensusMode::exhaustive) e["required_count"] = rational_json(t.bound.concise * r.p_D);
    per[std::string(to_string(t.cert))] = e;
  }
  out["per_cert"] = per;
  if (c.count_points) {
    out["point_check"] = Json{{"bound", big_json(r.point_bound)},
                              {"ci_certified_checked", r.point_bound_checked},
                              {"violations", r.point_bound_violations},
                              {"max_points", r.max_points},
                              {"max_certified_points", r.max_certified_points}};
  }
  if (!r.records.empty()) {
    Json recs = Json::array();
    for (const auto& t : r.records) {
      Json rec{{"index", t.index}};
      rec["seed"] = t.seed ? Json(*t.seed) : Json(nullptr);
      rec["system"] = t.system;
      Json v = Json::object();
      for (std::size_t k = 0; k < c.certs.size(); ++k) v[std::string(to_string(c.certs[k]))] = static_cast<bool>(t.passed[k]);
      rec["passed"] = v;
      if (t.points) rec["points"] = *t.points;
      recs.push_back(rec);
    }
    out["records"] = recs;
  }
  out["any_violated"] = r.any_violated();
  if (include_runtime) out["runtime_ms"] = r.runtime_ms;
  return out;
}

/// Columns: cert, count, total, freq, lo, hi, bound, verdict.
inline std::string census_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "cert,count,total,freq,lo,hi,bound,verdict\n";
  for (const auto& t : r.per_cert) {
    out << to_string(t.cert) << "," << t.count << "," << t.total << "," << exact_string(t.freq) << ",";
    if (t.interval) {
      out << Json(t.interval->lo).dump() << "," << Json(t.interval->hi).dump();
    } else {
      out << ",";
    }
    out << "," << exact_string(t.bound.concise) << "," << to_string(t.verdict) << "\n";
  }
  return out.str();
}

inline Json oracle_json(const OracleCheckReport& r) {
  Json kinds = Json::object();
  for (std::size_t k = 0; k < r.kind_counts.size(); ++k) kinds[std::string(to_string(static_cast<InstanceKind>(k)))] = r.kind_counts[k];
  Json dis = Json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back(Json{{"index", d.index}, {"kind", std::string(to_string(d.kind))}, {"forms", d.forms},
                       {"macaulay_empty", d.macaulay_empty}, {"brute_nonempty", d.brute_nonempty}});
  }
  return Json{{"schema", kSchemaVersion},
              {"trials", r.trials},
              {"seed", r.seed},
              {"agree", r.agree},
              {"agreement", r.trials == 0 ? 1.0 : static_cast<double>(r.agree) / static_cast<double>(r.trials)},
              {"empty", r.empty},
              {"nonempty", r.nonempty},
              {"witness_in_extension", r.witness_in_extension},
              {"points_visited", r.points_visited},
              {"instance_kinds", kinds},
              {"max_ext_rule", "max(product of degrees, 4)"},
              {"completeness_heuristic", r.completeness_heuristic},
              {"disagreements", dis}};
}

}  // namespace fqcert
