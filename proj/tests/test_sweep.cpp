#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "weylorder/error.hpp"
#include "weylorder/sweep.hpp"

using namespace weylorder;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SweepConfig small() {
  SweepConfig c;
  c.rank_min = 1;
  c.rank_max = 2;
  c.m_max = 2;
  c.k_min = 2;
  c.k_max = 3;
  return c;
}

}  // namespace

TEST_CASE("configuration from JSON") {
  const auto c = SweepConfig::from_json(Json::parse(R"({"rank_min":1,"rank_max":3,"m_max":4,"families":["C","B"],"jobs":2})"));
  CHECK(c.rank_min == 1);
  CHECK(c.rank_max == 3);
  CHECK(c.m_max == 4);
  CHECK(c.k_min == 2);
  CHECK(c.jobs == 2);
  CHECK(c.families == std::vector<Family>{Family::C, Family::B});
  CHECK(SweepConfig::from_json(Json::parse(R"({"families":"A,D"})")).families ==
        std::vector<Family>{Family::A, Family::D});
  CHECK(SweepConfig::from_json(c.to_json()).to_json() == c.to_json());

  CHECK_THROWS_AS(SweepConfig::from_json(Json::parse("[1]")), Error);
  CHECK_THROWS_AS(SweepConfig::from_json(Json::parse(R"({"m_max":"x"})")), Error);
  CHECK_THROWS_AS(SweepConfig::from_json(Json::parse(R"({"rank_min":0})")), Error);
  CHECK_THROWS_AS(SweepConfig::from_json(Json::parse(R"({"families":"E"})")), Error);
}

TEST_CASE("compatible root systems") {
  auto names = [](const std::vector<RootSystem>& v) {
    std::vector<std::string> out;
    for (const auto& rs : v) out.push_back(rs.name());
    return out;
  };
  const std::vector<Family> all{Family::A, Family::C, Family::B, Family::D};
  CHECK(names(compatible_root_systems(1, all)) == std::vector<std::string>{"A1", "B2", "D3"});
  CHECK(names(compatible_root_systems(2, all)) == std::vector<std::string>{"A2", "C2", "B3", "D4"});
  CHECK(names(compatible_root_systems(2, {Family::D})) == std::vector<std::string>{"D4"});
  CHECK(compatible_root_systems(2, all, true)[1].coroots().size() == 3);
}

TEST_CASE("default sweep is clean") {
  const auto r = run_sweep(SweepConfig{});
  CHECK(r.ok());
  CHECK(r.rows.size() > 0);
  CHECK(r.count(RowStatus::Violation) == 0);
  CHECK(r.count(RowStatus::Skipped) == 0);
  for (const auto& row : r.rows) CHECK(row.status == RowStatus::Ok);
  CHECK(sweep_summary(r).find("0 violating rows") != std::string::npos);
}

TEST_CASE("rows do not depend on the number of jobs") {
  auto c = small();
  const auto one = run_sweep(c);
  c.jobs = 4;
  const auto four = run_sweep(c);
  CHECK(sweep_to_csv(one) == sweep_to_csv(four));
  CHECK(sweep_to_json(one) == sweep_to_json(four));
}

TEST_CASE("empty ranges") {
  auto c = small();
  c.rank_min = 3;
  c.rank_max = 2;
  const auto r = run_sweep(c);
  CHECK(r.rows.empty());
  CHECK(r.ok());
  c = small();
  c.k_min = 4;
  c.k_max = 3;
  CHECK(run_sweep(c).rows.empty());
}

TEST_CASE("guard overflow is reported as skipped") {
  auto c = small();
  c.guard = 10;
  const auto r = run_sweep(c);
  CHECK(r.ok());
  CHECK(r.count(RowStatus::Skipped) > 0);
  bool poset_row = false;
  for (const auto& row : r.rows)
    if (row.status == RowStatus::Skipped) poset_row = poset_row || row.check == "poset";
  CHECK(poset_row);
}

TEST_CASE("dropping a coroot produces violations") {
  auto c = small();
  c.corrupt_coroots = true;
  const auto r = run_sweep(c);
  CHECK(!r.ok());
  CHECK(r.count(RowStatus::Violation) > 0);
  bool labelled = false;
  for (const auto& row : r.rows) labelled = labelled || row.root_system.find("corrupt") != std::string::npos;
  CHECK(labelled);
}

TEST_CASE("output files") {
  const auto dir = fs::temp_directory_path() / "weylorder_test_sweep";
  fs::remove_all(dir);
  auto c = small();
  c.rank_min = c.rank_max = 2;
  c.k_max = 2;
  c.out_dir = dir.string();
  const auto r = run_sweep(c);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "report.csv"));
  CHECK(fs::exists(dir / "posets" / "poset_2-1_k2.json"));
  CHECK(fs::exists(dir / "dims" / "dim_2-1_k2_C2.json"));
  const auto report = Json::parse(slurp(dir / "report.json"));
  CHECK(report.at("rows").size() == r.rows.size());
  const auto poset = Json::parse(slurp(dir / "posets" / "poset_2-1_k2.json"));
  CHECK(poset.at("classes").size() == 3);
  CHECK(slurp(dir / "report.csv") == sweep_to_csv(r));
  fs::remove_all(dir);
}
