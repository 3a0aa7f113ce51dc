// weylorder command-line tool. Talks to the library through the C API only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "weylorder/weylorder.h"

namespace {

enum Exit { kOk = 0, kViolations = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct CliError {
  int code;
};

int exit_for(wo_status s) {
  switch (s) {
    case WO_OK: return kOk;
    case WO_ERR_GUARD_EXCEEDED: return kGuard;
    case WO_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(wo_status s) {
  if (s == WO_OK) return;
  const std::string msg = wo_last_error();
  std::cerr << "error: " << (msg.empty() ? wo_status_string(s) : msg.c_str()) << "\n";
  throw CliError{exit_for(s)};
}

// Owns a string handed out by the library.
class Owned {
 public:
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { wo_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

struct PosetHandle {
  wo_poset* p = nullptr;
  PosetHandle() = default;
  PosetHandle(const PosetHandle&) = delete;
  PosetHandle& operator=(const PosetHandle&) = delete;
  ~PosetHandle() { wo_poset_free(p); }
};

struct ReportHandle {
  wo_report* r = nullptr;
  ReportHandle() = default;
  ReportHandle(const ReportHandle&) = delete;
  ReportHandle& operator=(const ReportHandle&) = delete;
  ~ReportHandle() { wo_report_free(r); }
};

std::uint64_t default_guard() {
  if (const char* env = std::getenv("WEYL_ORDER_GUARD")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "error: WEYL_ORDER_GUARD must be a positive integer\n";
    throw CliError{kUsage};
  }
  return WO_DEFAULT_GUARD;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw CliError{kUsage};
  }
  out << text;
}

std::string file_key(std::string lambda) {
  for (auto& c : lambda)
    if (c == ',') c = '-';
  return lambda;
}

struct Common {
  std::string lambda;
  std::size_t k = 2;
  std::optional<std::uint64_t> guard;
  unsigned jobs = 1;
  bool json = false;
  bool dot = false;
  std::string out_dir;

  std::uint64_t effective_guard() const { return guard ? *guard : default_guard(); }
};

void add_guard_jobs(CLI::App* cmd, Common& c) {
  cmd->add_option("--guard", c.guard, "Maximum number of ordered tuples to enumerate")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");
}

void build(const Common& c, PosetHandle& h) {
  check(wo_poset_build(c.lambda.c_str(), c.k, c.effective_guard(), c.jobs, &h.p));
}

int cmd_poset(const Common& c) {
  PosetHandle h;
  build(c, h);
  Owned json;
  check(wo_poset_to_json(h.p, json.out()));
  Owned dot;
  if (c.dot) check(wo_poset_to_dot(h.p, dot.out()));

  if (!c.out_dir.empty()) {
    const auto stem = std::filesystem::path(c.out_dir) / ("poset_" + file_key(c.lambda) + "_k" + std::to_string(c.k));
    write_text(stem.string() + ".json", json.str());
    if (c.dot) write_text(stem.string() + ".dot", dot.str());
  }
  if (c.json) {
    std::cout << json.str();
    return kOk;
  }
  if (c.dot) {
    std::cout << dot.str();
    return kOk;
  }

  const auto doc = nlohmann::json::parse(json.str());
  const std::size_t n = wo_poset_class_count(h.p);
  std::cout << n << " classes, " << wo_poset_edge_count(h.p) << " Hasse edges";
  bool chain = true;
  for (std::size_t a = 0; a < n && chain; ++a)
    for (std::size_t b = a + 1; b < n && chain; ++b) {
      wo_verdict v;
      check(wo_poset_verdict(h.p, a, b, &v));
      chain = v != WO_INCOMPARABLE;
    }
  std::cout << (chain ? " (total order)\n" : "\n");
  for (const auto& cls : doc["classes"]) {
    std::cout << "  [" << cls["index"].get<std::size_t>() << "] " << cls["wire"].get<std::string>();
    std::string ups;
    for (const auto& e : doc["hasse"])
      if (e[0] == cls["index"]) {
        ups += (ups.empty() ? "" : ", ") + std::to_string(e[1].get<std::size_t>());
        if (e.size() > 2) ups += " (" + e[2].get<std::string>() + ")";
      }
    if (!ups.empty()) std::cout << "  -> " << ups;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_max(const Common& c) {
  Owned mx, mn;
  check(wo_maximal_element(c.lambda.c_str(), c.k, mx.out()));
  check(wo_minimal_element(c.lambda.c_str(), c.k, mn.out()));
  if (c.json) {
    std::cout << nlohmann::json{{"lambda", c.lambda}, {"k", c.k}, {"maximal", mx.str()}, {"minimal", mn.str()}}.dump(2)
              << "\n";
  } else {
    std::cout << "maximal " << mx.str() << "\nminimal " << mn.str() << "\n";
  }
  return kOk;
}

int cmd_covers(const Common& c) {
  PosetHandle h;
  build(c, h);
  Owned covers;
  check(wo_poset_covers_json(h.p, covers.out()));
  if (c.json) {
    std::cout << covers.str();
    return kOk;
  }
  for (const auto& e : nlohmann::json::parse(covers.str())) {
    std::cout << e["lower_tuple"].get<std::string>() << " < " << e["upper_tuple"].get<std::string>() << "  "
              << e["kind"].get<std::string>();
    if (e.contains("witness")) {
      const auto& w = e["witness"];
      std::cout << "  sigma=" << w["sigma"].get<std::string>();
      if (w.contains("omega_index")) std::cout << " i=" << w["omega_index"].get<std::size_t>();
      if (w.contains("selection")) {
        std::cout << " eps=(";
        bool first = true;
        for (const auto& s : w["selection"]) {
          std::cout << (first ? "" : ",") << s.get<int>();
          first = false;
        }
        std::cout << ")";
      }
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_dim(const Common& c, const std::string& type, const std::string& tuple) {
  if (!tuple.empty()) {
    Owned d;
    check(wo_tensor_dim(type.c_str(), tuple.c_str(), d.out()));
    if (c.json)
      std::cout << nlohmann::json{{"root_system", type}, {"tuple", tuple}, {"dim", d.str()}}.dump(2) << "\n";
    else
      std::cout << d.str() << "\n";
    return kOk;
  }
  if (c.lambda.empty()) {
    std::cerr << "error: dim needs --tuple or --lambda\n";
    return kUsage;
  }
  Owned rep;
  check(wo_dimension_report_json(type.c_str(), c.lambda.c_str(), c.k, c.effective_guard(), rep.out()));
  const auto doc = nlohmann::json::parse(rep.str());
  if (!c.out_dir.empty())
    write_text(std::filesystem::path(c.out_dir) /
                   ("dim_" + file_key(c.lambda) + "_k" + std::to_string(c.k) + "_" + type + ".json"),
               rep.str());
  std::size_t violations = 0;
  for (const auto& [name, r] : doc.items()) violations += r["violations"].size();
  if (c.json) {
    std::cout << rep.str();
  } else {
    for (const auto& cls : doc["max_dim"]["classes"])
      std::cout << "  " << cls["tuple"].get<std::string>() << "  " << cls["dim"].get<std::string>() << "\n";
    for (const auto& [name, r] : doc.items())
      for (const auto& v : r["violations"]) std::cout << "VIOLATION " << name << ": " << v.get<std::string>() << "\n";
    std::cout << (violations ? "violations found\n" : "all checks hold\n");
  }
  return violations ? kViolations : kOk;
}

int cmd_size(const Common& c) {
  std::uint64_t n = 0;
  check(wo_poset_size_k2(c.lambda.c_str(), &n));
  std::cout << n << "\n";
  return kOk;
}

struct VerifyArgs {
  std::optional<std::size_t> rank_min, rank_max, k_min, k_max;
  std::optional<long long> m_max;
  std::string types;
  std::string config_file;
  bool corrupt = false;
};

int cmd_verify(const Common& c, const VerifyArgs& v, bool guard_given) {
  nlohmann::json cfg = nlohmann::json::object();
  if (!v.config_file.empty()) {
    std::ifstream in(v.config_file);
    if (!in) {
      std::cerr << "error: cannot read " << v.config_file << "\n";
      return kUsage;
    }
    try {
      cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: " << v.config_file << ": " << e.what() << "\n";
      return kUsage;
    }
  }
  if (v.rank_min) cfg["rank_min"] = *v.rank_min;
  if (v.rank_max) cfg["rank_max"] = *v.rank_max;
  if (v.m_max) cfg["m_max"] = *v.m_max;
  if (v.k_min) cfg["k_min"] = *v.k_min;
  if (v.k_max) cfg["k_max"] = *v.k_max;
  if (!v.types.empty()) cfg["families"] = v.types;
  if (guard_given || !cfg.contains("guard")) cfg["guard"] = c.effective_guard();
  cfg["jobs"] = c.jobs;
  if (!c.out_dir.empty()) cfg["out_dir"] = c.out_dir;
  if (v.corrupt) cfg["corrupt_coroots"] = true;

  ReportHandle h;
  check(wo_verify_run(cfg.dump().c_str(), &h.r));
  if (c.json) {
    Owned j;
    check(wo_report_to_json(h.r, j.out()));
    std::cout << j.str();
  } else {
    Owned viol, summary;
    check(wo_report_violations(h.r, viol.out()));
    check(wo_report_summary(h.r, summary.out()));
    std::string text = viol.str();
    std::size_t pos = 0, shown = 0;
    while (pos < text.size() && shown < 50) {
      auto end = text.find('\n', pos);
      std::cout << "VIOLATION " << text.substr(pos, end - pos) << "\n";
      pos = end + 1;
      ++shown;
    }
    if (wo_report_violation_count(h.r) > shown)
      std::cout << "... " << wo_report_violation_count(h.r) - shown << " more\n";
    std::cout << summary.str() << "\n";
  }
  return wo_report_violation_count(h.r) ? kViolations : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order on tuples of dominant weights: posets, covers, dimensions and verification sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wo_version()));

  Common common;
  std::string type, tuple;
  VerifyArgs vargs;

  auto lambda_opt = [&](CLI::App* cmd) {
    return cmd->add_option("--lambda", common.lambda, "Dominant weight as comma-separated omega coordinates");
  };

  auto* poset = app.add_subcommand("poset", "Enumerate the quotient poset for (lambda, k)");
  lambda_opt(poset)->required();
  poset->add_option("--k", common.k, "Number of parts")->check(CLI::PositiveNumber);
  poset->add_flag("--dot", common.dot, "Emit Graphviz DOT");
  poset->add_flag("--json", common.json, "Emit JSON");
  poset->add_option("--out-dir", common.out_dir, "Also write poset files here");
  add_guard_jobs(poset, common);

  auto* max = app.add_subcommand("max", "Closed-form maximal and minimal elements");
  lambda_opt(max)->required();
  max->add_option("--k", common.k, "Number of parts")->check(CLI::PositiveNumber);
  max->add_flag("--json", common.json, "Emit JSON");

  auto* covers = app.add_subcommand("covers", "Classify the Hasse edges (k = 2)");
  lambda_opt(covers)->required();
  covers->add_option("--k", common.k, "Number of parts")->check(CLI::PositiveNumber);
  covers->add_flag("--json", common.json, "Emit JSON");
  add_guard_jobs(covers, common);

  auto* dim = app.add_subcommand("dim", "Exact dimensions for a root system");
  dim->add_option("--type", type, "Root system, e.g. C2, B3, D4")->required();
  dim->add_option("--tuple", tuple, "Tuple of weights, parts separated by '/'");
  lambda_opt(dim);
  dim->add_option("--k", common.k, "Number of parts (with --lambda)")->check(CLI::PositiveNumber);
  dim->add_flag("--json", common.json, "Emit JSON");
  dim->add_option("--out-dir", common.out_dir, "Also write the report here (with --lambda)");
  add_guard_jobs(dim, common);

  auto* size = app.add_subcommand("size", "Number of classes for k = 2 from the closed formula");
  lambda_opt(size)->required();

  auto* verify = app.add_subcommand("verify", "Run the verification sweep");
  verify->add_option("--config", vargs.config_file, "JSON sweep configuration");
  verify->add_option("--rank-min", vargs.rank_min, "Smallest rank n");
  verify->add_option("--rank-max", vargs.rank_max, "Largest rank n");
  verify->add_option("--m-max", vargs.m_max, "Largest omega coordinate");
  verify->add_option("--k-min", vargs.k_min, "Smallest k");
  verify->add_option("--k-max", vargs.k_max, "Largest k");
  verify->add_option("--types", vargs.types, "Root-system families, e.g. ACBD");
  verify->add_option("--out-dir", common.out_dir, "Write report.json, report.csv and per-item files here");
  verify->add_flag("--json", common.json, "Print the JSON report");
  verify->add_flag("--corrupt-coroots", vargs.corrupt, "Drop h_1 from every coroot list")->group("");
  add_guard_jobs(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*poset) return cmd_poset(common);
    if (*max) return cmd_max(common);
    if (*covers) return cmd_covers(common);
    if (*dim) return cmd_dim(common, type, tuple);
    if (*size) return cmd_size(common);
    if (*verify) return cmd_verify(common, vargs, common.guard.has_value());
  } catch (const CliError& e) {
    return e.code;
  }
  return kUsage;
}
