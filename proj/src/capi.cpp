#include "weylorder/weylorder.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "weylorder/dimension.hpp"
#include "weylorder/error.hpp"
#include "weylorder/poset.hpp"
#include "weylorder/serialize.hpp"
#include "weylorder/sweep.hpp"

using namespace weylorder;

struct wo_poset {
  TuplePoset poset;
  std::vector<CoverEdge> covers;
};

struct wo_report {
  SweepReport report;
};

namespace {

thread_local std::string g_last_error;

wo_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return WO_ERR_INVALID_ARGUMENT;
    case ErrorCode::RankMismatch: return WO_ERR_RANK_MISMATCH;
    case ErrorCode::NotDominant: return WO_ERR_NOT_DOMINANT;
    case ErrorCode::NotAdmissible: return WO_ERR_NOT_ADMISSIBLE;
    case ErrorCode::GuardExceeded: return WO_ERR_GUARD_EXCEEDED;
    case ErrorCode::Parse: return WO_ERR_PARSE;
    case ErrorCode::Internal: return WO_ERR_INTERNAL;
  }
  return WO_ERR_INTERNAL;
}

template <class F>
wo_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return WO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WO_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wo_verdict map_verdict(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::StrictlyLess: return WO_LESS;
    case OrderVerdict::Equivalent: return WO_EQUIVALENT;
    case OrderVerdict::StrictlyGreater: return WO_GREATER;
    case OrderVerdict::Incomparable: return WO_INCOMPARABLE;
  }
  return WO_INCOMPARABLE;
}

std::uint64_t effective_guard(std::uint64_t guard) { return guard == 0 ? kDefaultGuard : guard; }

}  // namespace

extern "C" {

const char* wo_version(void) { return "0.1.0"; }

const char* wo_status_string(wo_status status) {
  switch (status) {
    case WO_OK: return "ok";
    case WO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WO_ERR_RANK_MISMATCH: return "rank mismatch";
    case WO_ERR_NOT_DOMINANT: return "not dominant";
    case WO_ERR_NOT_ADMISSIBLE: return "not admissible";
    case WO_ERR_GUARD_EXCEEDED: return "enumeration guard exceeded";
    case WO_ERR_PARSE: return "parse error";
    case WO_ERR_NULL_ARGUMENT: return "null argument";
    case WO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wo_verdict_string(wo_verdict verdict) {
  switch (verdict) {
    case WO_LESS: return "less";
    case WO_EQUIVALENT: return "equiv";
    case WO_GREATER: return "greater";
    case WO_INCOMPARABLE: return "incomparable";
  }
  return "incomparable";
}

const char* wo_last_error(void) { return g_last_error.c_str(); }

void wo_string_free(char* s) { std::free(s); }

wo_status wo_poset_build(const char* lambda, size_t k, uint64_t guard, unsigned jobs, wo_poset** out) {
  if (!lambda || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto p = build_poset(parse_dominant_spec(lambda), k, PosetOptions{effective_guard(guard), jobs});
    auto covers = p.k() == 2 ? all_covers(p) : std::vector<CoverEdge>{};
    *out = new wo_poset{std::move(p), std::move(covers)};
  });
}

void wo_poset_free(wo_poset* poset) { delete poset; }

size_t wo_poset_class_count(const wo_poset* poset) { return poset ? poset->poset.size() : 0; }

size_t wo_poset_edge_count(const wo_poset* poset) { return poset ? poset->poset.hasse_edges().size() : 0; }

wo_status wo_poset_class_wire(const wo_poset* poset, size_t index, char** out) {
  if (!poset || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (index >= poset->poset.size()) throw Error(ErrorCode::InvalidArgument, "class index out of range");
    *out = dup(to_wire(poset->poset.representative(index)));
  });
}

wo_status wo_poset_verdict(const wo_poset* poset, size_t a, size_t b, wo_verdict* out) {
  if (!poset || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (a >= poset->poset.size() || b >= poset->poset.size())
      throw Error(ErrorCode::InvalidArgument, "class index out of range");
    *out = map_verdict(poset->poset.verdict(a, b));
  });
}

wo_status wo_poset_to_json(const wo_poset* poset, char** out) {
  if (!poset || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto* covers = poset->poset.k() == 2 ? &poset->covers : nullptr;
    *out = dup(poset_to_json(poset->poset, covers).dump(2) + "\n");
  });
}

wo_status wo_poset_to_dot(const wo_poset* poset, char** out) {
  if (!poset || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto* covers = poset->poset.k() == 2 ? &poset->covers : nullptr;
    *out = dup(poset_to_dot(poset->poset, covers));
  });
}

wo_status wo_poset_covers_json(const wo_poset* poset, char** out) {
  if (!poset || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    Json arr = Json::array();
    if (poset->poset.k() == 2) {
      for (const auto& e : poset->covers) arr.push_back(to_json(e, poset->poset));
    } else {
      for (const auto& e : all_covers(poset->poset)) arr.push_back(to_json(e, poset->poset));
    }
    *out = dup(arr.dump(2) + "\n");
  });
}

wo_status wo_maximal_element(const char* lambda, size_t k, char** out_tuple) {
  if (!lambda || !out_tuple) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out_tuple = dup(to_wire(maximal_element(parse_dominant_spec(lambda), k))); });
}

wo_status wo_minimal_element(const char* lambda, size_t k, char** out_tuple) {
  if (!lambda || !out_tuple) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out_tuple = dup(to_wire(minimal_element(parse_dominant_spec(lambda), k))); });
}

wo_status wo_poset_size_k2(const char* lambda, uint64_t* out) {
  if (!lambda || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = poset_size_k2(parse_dominant_spec(lambda)); });
}

wo_status wo_weyl_dim(const char* root_system, const char* weight, char** out_decimal) {
  if (!root_system || !weight || !out_decimal) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto rs = RootSystem::parse(root_system);
    auto w = parse_weight_spec(weight);
    *out_decimal = dup(weyl_dim(rs, w.omega()).str());
  });
}

wo_status wo_tensor_dim(const char* root_system, const char* tuple, char** out_decimal) {
  if (!root_system || !tuple || !out_decimal) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto rs = RootSystem::parse(root_system);
    *out_decimal = dup(tensor_dim(rs, parse_tuple_spec(tuple)).str());
  });
}

wo_status wo_compare(const char* tuple_a, const char* tuple_b, wo_verdict* out) {
  if (!tuple_a || !tuple_b || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = map_verdict(compare(parse_tuple_spec(tuple_a), parse_tuple_spec(tuple_b))); });
}

wo_status wo_compare_prec(const char* root_system, const char* tuple_a, const char* tuple_b, wo_verdict* out) {
  if (!root_system || !tuple_a || !tuple_b || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto rs = RootSystem::parse(root_system);
    *out = map_verdict(compare_prec(parse_tuple_spec(tuple_a), parse_tuple_spec(tuple_b), rs));
  });
}

wo_status wo_coroot_table_json(const char* root_system, char** out) {
  if (!root_system || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto rs = RootSystem::parse(root_system);
    *out = dup(coroot_check_to_json(check_coroot_table(rs.family(), rs.rank())).dump(2) + "\n");
  });
}

wo_status wo_dimension_report_json(const char* root_system, const char* lambda, size_t k, uint64_t guard,
                                   char** out) {
  if (!root_system || !lambda || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto rs = RootSystem::parse(root_system);
    auto p = build_poset(parse_dominant_spec(lambda), k, PosetOptions{effective_guard(guard), 1});
    Json j = Json::object();
    if (k == 2) {
      j["monotone"] = report_to_json(verify_monotone_k2(p, rs));
      j["coroot"] = report_to_json(verify_coroot_inequalities_k2(p, rs));
    }
    j["max_dim"] = report_to_json(verify_max_dim(p, rs));
    *out = dup(j.dump(2) + "\n");
  });
}

wo_status wo_verify_run(const char* config_json, wo_report** out) {
  if (!out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    SweepConfig cfg;
    if (config_json && *config_json) {
      Json j;
      try {
        j = Json::parse(config_json);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("sweep configuration is not valid JSON: ") + e.what());
      }
      cfg = SweepConfig::from_json(j);
    }
    *out = new wo_report{run_sweep(cfg)};
  });
}

void wo_report_free(wo_report* report) { delete report; }

size_t wo_report_row_count(const wo_report* report) { return report ? report->report.rows.size() : 0; }

size_t wo_report_violation_count(const wo_report* report) { return report ? report->report.violations.size() : 0; }

size_t wo_report_skipped_count(const wo_report* report) {
  return report ? report->report.count(RowStatus::Skipped) : 0;
}

wo_status wo_report_to_json(const wo_report* report, char** out) {
  if (!report || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup(sweep_to_json(report->report).dump(2) + "\n"); });
}

wo_status wo_report_to_csv(const wo_report* report, char** out) {
  if (!report || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup(sweep_to_csv(report->report)); });
}

wo_status wo_report_summary(const wo_report* report, char** out) {
  if (!report || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup(sweep_summary(report->report)); });
}

wo_status wo_report_violations(const wo_report* report, char** out) {
  if (!report || !out) return WO_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::string s;
    for (const auto& v : report->report.violations) s += v + "\n";
    *out = dup(s);
  });
}

}  // extern "C"
