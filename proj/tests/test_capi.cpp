#include <doctest.h>
#include <json.hpp>

#include <memory>
#include <string>

#include "weylorder/weylorder.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { wo_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Poset {
  wo_poset* p = nullptr;
  ~Poset() { wo_poset_free(p); }
};

struct Report {
  wo_report* p = nullptr;
  ~Report() { wo_report_free(p); }
};

}  // namespace

TEST_CASE("strings") {
  CHECK(std::string(wo_version()).size() > 0);
  CHECK(std::string(wo_status_string(WO_ERR_GUARD_EXCEEDED)).size() > 0);
  CHECK(std::string(wo_verdict_string(WO_LESS)) != wo_verdict_string(WO_GREATER));
  wo_string_free(nullptr);
}

TEST_CASE("poset handle") {
  Poset p;
  REQUIRE(wo_poset_build("2,1", 2, WO_DEFAULT_GUARD, 1, &p.p) == WO_OK);
  CHECK(wo_poset_class_count(p.p) == 3);
  CHECK(wo_poset_edge_count(p.p) == 2);
  Str w;
  REQUIRE(wo_poset_class_wire(p.p, 2, &w.p) == WO_OK);
  CHECK(w.str() == "1,1/1,0");
  wo_verdict v;
  REQUIRE(wo_poset_verdict(p.p, 0, 2, &v) == WO_OK);
  CHECK(v == WO_LESS);
  CHECK(wo_poset_verdict(p.p, 0, 3, &v) == WO_ERR_INVALID_ARGUMENT);
  CHECK(wo_poset_class_wire(p.p, 9, &w.p) == WO_ERR_INVALID_ARGUMENT);

  Str json, dot, covers;
  REQUIRE(wo_poset_to_json(p.p, &json.p) == WO_OK);
  CHECK(nlohmann::json::parse(json.str()).at("classes").size() == 3);
  REQUIRE(wo_poset_to_dot(p.p, &dot.p) == WO_OK);
  CHECK(dot.str().find("digraph") != std::string::npos);
  REQUIRE(wo_poset_covers_json(p.p, &covers.p) == WO_OK);
  CHECK(nlohmann::json::parse(covers.str()).size() == 2);
}

TEST_CASE("error codes") {
  wo_poset* p = nullptr;
  CHECK(wo_poset_build("2,x", 2, WO_DEFAULT_GUARD, 1, &p) == WO_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(wo_last_error()).size() > 0);
  CHECK(wo_poset_build("2,-1", 2, WO_DEFAULT_GUARD, 1, &p) == WO_ERR_NOT_DOMINANT);
  CHECK(wo_poset_build("9,9,9", 4, 1000, 1, &p) == WO_ERR_GUARD_EXCEEDED);
  CHECK(wo_poset_build(nullptr, 2, WO_DEFAULT_GUARD, 1, &p) == WO_ERR_NULL_ARGUMENT);
  CHECK(wo_poset_build("1", 2, WO_DEFAULT_GUARD, 1, nullptr) == WO_ERR_NULL_ARGUMENT);

  char* s = nullptr;
  CHECK(wo_weyl_dim("C2", "1", &s) == WO_ERR_RANK_MISMATCH);
  CHECK(wo_weyl_dim("E8", "1", &s) != WO_OK);
  CHECK(s == nullptr);
  wo_verdict v;
  CHECK(wo_compare("1,0/0,1", "1,0", &v) != WO_OK);
}

TEST_CASE("queries") {
  Str top, bottom, dim, tdim, table, rep;
  REQUIRE(wo_maximal_element("2,1", 2, &top.p) == WO_OK);
  CHECK(top.str() == "1,1/1,0");
  REQUIRE(wo_minimal_element("2,1", 2, &bottom.p) == WO_OK);
  CHECK(bottom.str() == "2,1/0,0");
  uint64_t size = 0;
  REQUIRE(wo_poset_size_k2("2,2", &size) == WO_OK);
  CHECK(size == 5);
  REQUIRE(wo_weyl_dim("C2", "2,1", &dim.p) == WO_OK);
  CHECK(dim.str() == "35");
  REQUIRE(wo_tensor_dim("C2", "0,1/0,1", &tdim.p) == WO_OK);
  CHECK(tdim.str() == "25");

  wo_verdict v;
  REQUIRE(wo_compare("2,0/0,1", "1,1/1,0", &v) == WO_OK);
  CHECK(v == WO_LESS);
  REQUIRE(wo_compare_prec("C2", "2,0/0,1", "1,1/1,0", &v) == WO_OK);
  CHECK(v == WO_INCOMPARABLE);

  REQUIRE(wo_coroot_table_json("D4", &table.p) == WO_OK);
  CHECK(table.str().find("12") != std::string::npos);
  REQUIRE(wo_dimension_report_json("C2", "2,1", 2, WO_DEFAULT_GUARD, &rep.p) == WO_OK);
  const auto j = nlohmann::json::parse(rep.str());
  CHECK(j.dump().find("35") != std::string::npos);
}

TEST_CASE("verify run") {
  Report r;
  REQUIRE(wo_verify_run(R"({"rank_min":1,"rank_max":2,"m_max":2,"k_max":2})", &r.p) == WO_OK);
  CHECK(wo_report_row_count(r.p) > 0);
  CHECK(wo_report_violation_count(r.p) == 0);
  CHECK(wo_report_skipped_count(r.p) == 0);
  Str json, csv, summary, violations;
  REQUIRE(wo_report_to_json(r.p, &json.p) == WO_OK);
  CHECK(nlohmann::json::parse(json.str()).contains("rows"));
  REQUIRE(wo_report_to_csv(r.p, &csv.p) == WO_OK);
  CHECK(csv.str().find("check") == 0);
  REQUIRE(wo_report_summary(r.p, &summary.p) == WO_OK);
  CHECK(summary.str().find("rows") != std::string::npos);
  REQUIRE(wo_report_violations(r.p, &violations.p) == WO_OK);

  Report bad;
  REQUIRE(wo_verify_run(R"({"rank_min":2,"rank_max":2,"m_max":2,"k_max":2,"corrupt_coroots":true})", &bad.p) ==
          WO_OK);
  CHECK(wo_report_violation_count(bad.p) > 0);
  wo_report* none = nullptr;
  CHECK(wo_verify_run("{", &none) == WO_ERR_PARSE);
}
