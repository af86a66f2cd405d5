#include "serialize.hpp"

#include <limits>

namespace vinc {

using nlohmann::json;

json to_json(const StatTable& t) {
  json counts = json::object();
  for (const auto& [k, v] : t.counts) counts[k] = v;
  return json{{"counts", counts}, {"total", t.total}};
}

json to_json(const WilfReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"n", row.n},
           {"count_a", row.count_a},
           {"count_b", row.count_b},
           {"counts_agree", row.counts_agree}};
    if (r.stat) j["tables_agree"] = row.tables_agree;
    rows.push_back(std::move(j));
  }
  json out{{"pattern_a", r.pattern_a},
           {"pattern_b", r.pattern_b},
           {"n_max", r.n_max},
           {"rows", rows},
           {"equivalent", r.equivalent}};
  out["stat"] = r.stat ? json(stat_kind_name(*r.stat)) : json(nullptr);
  out["first_mismatch_n"] = r.first_mismatch_n ? json(*r.first_mismatch_n) : json(nullptr);
  return out;
}

json to_json(const SetCoincidenceReport& r) {
  json out{{"vincular", r.vincular},
           {"barred", r.barred},
           {"n_max", r.n_max},
           {"equal", r.equal},
           {"sizes", r.sizes}};
  out["first_mismatch_n"] = r.first_mismatch_n ? json(*r.first_mismatch_n) : json(nullptr);
  out["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
  return out;
}

json to_json(const WilfClasses& c) {
  json classes = json::array();
  for (const auto& cl : c.classes)
    classes.push_back(json{{"patterns", cl.patterns}, {"counts", cl.counts}});
  return json{{"n_max", c.n_max}, {"classes", classes}};
}

json to_json(const BijectionReport& r) {
  json out{{"map", r.map_name},
           {"n", r.n},
           {"domain_size", r.domain_size},
           {"codomain_size", r.codomain_size},
           {"pass", r.pass}};
  out["violation"] = r.violation.empty() ? json(nullptr) : json(r.violation);
  out["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
  out["image"] = r.image ? json(r.image->str()) : json(nullptr);
  return out;
}

json to_json(const RevDelCertificate& c) {
  json out{{"certified", c.certified}, {"n_max", c.n_max}};
  if (c.counterexample) {
    out["counterexample"] = json{{"n", c.counterexample->n},
                                 {"w", word_str(c.counterexample->w)},
                                 {"reason", c.counterexample->reason}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json to_json(const SeriesBruteforceReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches)
    mism.push_back(json{{"pattern", m.pattern},
                        {"n", m.n},
                        {"a", m.a},
                        {"series", m.series_coeff},
                        {"bruteforce", m.brute_count}});
  return json{{"family", family_name(r.family)},
              {"N", r.order},
              {"match", r.match},
              {"mismatches", mism}};
}

json coeff_to_json(SeriesInt v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(series_int_str(v));  // string form past 64 bits
}

json series_to_json(Family f, const FamilySeries& s) {
  const TruncatedSeries F = s.F();
  json rows = json::array();
  for (int n = 1; n <= F.order(); ++n)
    for (int a = 1; a <= n; ++a) {
      const SeriesInt v = F.coeff(n, a);
      if (v != 0) rows.push_back(json{{"n", n}, {"a", a}, {"coeff", coeff_to_json(v)}});
    }
  return json{{"family", family_name(f)}, {"N", F.order()}, {"F", rows}};
}

}  // namespace vinc
