#include "vincular.h"

#include <cstring>
#include <new>
#include <string>

#include "checks.hpp"
#include "serialize.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
vinc_status wrap(Fn&& fn) {
  try {
    fn();
    return VINC_OK;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return VINC_EPARSE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return VINC_EINVAL;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return VINC_EINTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VINC_EINTERNAL;
  }
}

}  // namespace

struct vinc_pattern {
  vinc::AnyPattern value;
};

struct vinc_report {
  std::string body;
  bool passed = false;
};

extern "C" {

const char* vinc_version(void) { return "0.1.0"; }

const char* vinc_last_error(void) { return g_last_error.c_str(); }

vinc_status vinc_pattern_parse(const char* text, vinc_pattern** out) {
  if (!text || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] { *out = new vinc_pattern{vinc::parse_pattern(text)}; });
}

void vinc_pattern_free(vinc_pattern* p) { delete p; }

int vinc_pattern_is_barred(const vinc_pattern* p) {
  return p && std::holds_alternative<vinc::BarredPattern>(p->value) ? 1 : 0;
}

int vinc_pattern_length(const vinc_pattern* p) {
  if (!p) return 0;
  if (const auto* v = std::get_if<vinc::VincularPattern>(&p->value)) return v->length();
  return std::get<vinc::BarredPattern>(p->value).underlying().size();
}

vinc_status vinc_pattern_format(const vinc_pattern* p, char* buf, size_t buflen) {
  if (!p || !buf) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  const std::string s = vinc::pattern_str(p->value);
  if (s.size() + 1 > buflen) {
    set_error("buffer too small");
    return VINC_EINVAL;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return VINC_OK;
}

vinc_status vinc_pattern_symmetry(const vinc_pattern* p, const char* kind, vinc_pattern** out) {
  if (!p || !kind || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto* v = std::get_if<vinc::VincularPattern>(&p->value);
    if (!v) throw std::domain_error("symmetry is defined for vincular patterns only");
    vinc::VincularPattern::Symmetry s;
    const std::string k = kind;
    if (k == "reverse")
      s = vinc::VincularPattern::Symmetry::reverse;
    else if (k == "complement")
      s = vinc::VincularPattern::Symmetry::complement;
    else if (k == "reverse_complement")
      s = vinc::VincularPattern::Symmetry::reverse_complement;
    else
      throw std::invalid_argument("unknown symmetry '" + k + "'");
    *out = new vinc_pattern{v->symmetry(s)};
  });
}

const char* vinc_report_json(const vinc_report* r) { return r ? r->body.c_str() : ""; }

int vinc_report_passed(const vinc_report* r) { return r && r->passed ? 1 : 0; }

void vinc_report_free(vinc_report* r) { delete r; }

vinc_status vinc_count(const char* pattern, int n, int threads, uint64_t* out) {
  if (!pattern || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto p = vinc::parse_pattern(pattern);
    *out = vinc::count_any(p, n, threads);
  });
}

vinc_status vinc_stat(const char* pattern, int n, const char* stat_kind, int threads,
                      vinc_report** out) {
  if (!pattern || !stat_kind || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto p = vinc::parse_pattern(pattern);
    const auto kind = vinc::stat_kind_from_string(stat_kind);
    const auto table = vinc::stat_any(p, n, kind, threads);
    json j = vinc::to_json(table);
    j["pattern"] = vinc::pattern_str(p);
    j["n"] = n;
    j["stat"] = stat_kind;
    *out = new vinc_report{j.dump(), true};
  });
}

vinc_status vinc_equiv(const char* pattern_a, const char* pattern_b, int n_max,
                       const char* stat_kind, int threads, vinc_report** out) {
  if (!pattern_a || !pattern_b || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto a = vinc::parse_pattern(pattern_a);
    const auto b = vinc::parse_pattern(pattern_b);
    std::optional<vinc::StatKind> kind;
    if (stat_kind) kind = vinc::stat_kind_from_string(stat_kind);
    const auto rep = vinc::wilf_check(a, b, n_max, kind, threads);
    *out = new vinc_report{vinc::to_json(rep).dump(), rep.equivalent};
  });
}

vinc_status vinc_bijection(const char* map_name, int n, vinc_report** out) {
  if (!map_name || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto& registry = vinc::bijection_registry();
    const auto it = registry.find(map_name);
    if (it == registry.end())
      throw std::invalid_argument("unknown bijection '" + std::string(map_name) + "'");
    const auto& b = it->second;
    const auto rep = vinc::verify_bijection(b.map, b.domain, b.codomain, n, b.preserved, b.name);
    *out = new vinc_report{vinc::to_json(rep).dump(), rep.pass};
  });
}

vinc_status vinc_series(const char* family, int order, int check_bruteforce, int threads,
                        vinc_report** out) {
  if (!family || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto f = vinc::family_from_string(family);
    const auto sol = vinc::solve_family(f, order);
    json j = vinc::series_to_json(f, sol);
    bool passed = true;
    if (check_bruteforce) {
      const auto rep = vinc::series_vs_bruteforce(f, order, threads);
      j["bruteforce"] = vinc::to_json(rep);
      passed = rep.match;
    }
    *out = new vinc_report{j.dump(), passed};
  });
}

vinc_status vinc_revdel(const char* pattern, const char* prefix, const int* set, size_t set_len,
                        int n_max, vinc_report** out) {
  if (!pattern || !prefix || (!set && set_len > 0) || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto p = vinc::parse_pattern(pattern);
    const auto* v = std::get_if<vinc::VincularPattern>(&p);
    if (!v) throw std::domain_error("reversible deletability applies to vincular patterns");
    const auto pref = vinc::Permutation::of(prefix);
    std::vector<int> r(set, set + set_len);
    const auto cert = vinc::certify_reversibly_deletable({*v}, pref, r, n_max);
    json j = vinc::to_json(cert);
    j["pattern"] = v->str();
    j["prefix"] = pref.str();
    j["set"] = r;
    *out = new vinc_report{j.dump(), cert.certified};
  });
}

vinc_status vinc_barred(const char* vincular_pattern, const char* barred_pattern, int n_max,
                        vinc_report** out) {
  if (!vincular_pattern || !barred_pattern || !out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto v = vinc::VincularPattern::parse(vincular_pattern);
    const auto b = vinc::BarredPattern::parse(barred_pattern);
    const auto rep = vinc::barred_set_coincidence(v, b, n_max);
    *out = new vinc_report{vinc::to_json(rep).dump(), rep.equal};
  });
}

vinc_status vinc_conjecture(int n_max, int threads, vinc_report** out) {
  if (!out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto rep = vinc::run_conjecture(n_max, threads);
    json parts = json::array();
    for (const auto& part : rep.parts) parts.push_back(vinc::to_json(part));
    json j{{"n_max", rep.n_max}, {"pass", rep.pass}, {"parts", parts}};
    *out = new vinc_report{j.dump(), rep.pass};
  });
}

vinc_status vinc_suite(int threads, vinc_report** out) {
  if (!out) {
    set_error("null argument");
    return VINC_EINVAL;
  }
  return wrap([&] {
    const auto results = vinc::run_acceptance_suite(threads);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      arr.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    json j{{"criteria", arr}, {"pass", all}};
    *out = new vinc_report{j.dump(), all};
  });
}

}  // extern "C"
