#include "weylorder/sweep.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "weylorder/dimension.hpp"
#include "weylorder/error.hpp"

namespace weylorder {

namespace {

namespace fs = std::filesystem;

struct WorkItem {
  DominantWeight lambda;
  std::size_t k;
};

std::vector<DominantWeight> lattice_box(std::size_t n, Coord m_max) {
  std::vector<DominantWeight> out;
  std::vector<Coord> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i-- > 0) {
      if (++cur[i] <= m_max) break;
      cur[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << content;
}

std::string rs_label(const RootSystem& rs, bool corrupt) { return rs.name() + (corrupt ? "-corrupt" : ""); }

SweepRow make_row(std::string check, const WorkItem& item, std::string rs = {}) {
  SweepRow row;
  row.check = std::move(check);
  row.lambda = to_wire(item.lambda.weight());
  row.k = item.k;
  row.root_system = std::move(rs);
  return row;
}

void fail(SweepRow& row, std::vector<std::string>& violations, const std::string& why) {
  row.status = RowStatus::Violation;
  if (row.detail.empty()) row.detail = why;
  std::string where = row.check + " lambda=" + row.lambda + " k=" + std::to_string(row.k);
  if (!row.root_system.empty()) where += " " + row.root_system;
  violations.push_back(where + ": " + why);
}

struct ItemResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> violations;
};

void poset_checks(const TuplePoset& p, const WorkItem& item, ItemResult& res) {
  if (item.k == 2) {
    auto row = make_row("size", item);
    row.checked = 1;
    const auto expected = poset_size_k2(item.lambda);
    row.detail = std::to_string(p.size()) + " classes";
    if (p.size() != expected) fail(row, res.violations, "expected " + std::to_string(expected) + " classes");
    res.rows.push_back(std::move(row));
  }

  {
    auto row = make_row("max_element", item);
    const WeightTuple top = maximal_element(item.lambda, item.k);
    const WeightTuple canon = canonical_form(top);
    const auto maximal = p.maximal_classes();
    const auto cls = p.class_of(top);
    row.checked = p.size();
    row.detail = to_wire(top);
    if (maximal.size() != 1 || !cls || maximal.front() != *cls) {
      fail(row, res.violations, "maximal element is not the unique maximum");
    } else {
      for (const auto& m : p.members(*cls))
        if (canonical_form(m) != canon) fail(row, res.violations, "maximum class contains (" + to_wire(m) + ")");
    }
    if (!has_unit_epsilon_gaps(top)) fail(row, res.violations, "epsilon gaps outside {0,1}");
    const auto minimal = p.minimal_classes();
    if (minimal.size() != 1 || p.class_of(minimal_element(item.lambda, item.k)) != minimal.front())
      fail(row, res.violations, "minimal element is not the unique minimum");
    res.rows.push_back(std::move(row));
  }

  if (item.k == 2) {
    auto row = make_row("covers", item);
    const auto covers = all_covers(p);
    row.checked = covers.size();
    std::vector<std::size_t> type1(p.size(), 0), type2(p.size(), 0);
    for (const auto& e : covers) {
      if (e.kind == CoverKind::Unclassified)
        fail(row, res.violations,
             "unclassified cover (" + to_wire(p.representative(e.lower)) + ") < (" +
                 to_wire(p.representative(e.upper)) + ")");
      else
        ++(e.kind == CoverKind::TypeI ? type1 : type2)[e.lower];
    }
    // At most n covers of type I and 2^{n-1} - 1 of type II per class.
    const std::size_t max1 = p.rank();
    const std::size_t max2 = (std::size_t{1} << (p.rank() - 1)) - 1;
    for (std::size_t c = 0; c < p.size(); ++c)
      if (type1[c] > max1 || type2[c] > max2)
        fail(row, res.violations,
             "cover count bound exceeded at (" + to_wire(p.representative(c)) + "): " + std::to_string(type1[c]) +
                 " of type I, " + std::to_string(type2[c]) + " of type II");
    res.rows.push_back(std::move(row));
  }
}

void dimension_checks(const TuplePoset& p, const RootSystem& rs, const WorkItem& item, bool corrupt,
                      const fs::path* dims_dir, ItemResult& res) {
  const std::string label = rs_label(rs, corrupt);
  Json files = Json::object();
  auto absorb = [&](const char* check, const DimensionReport& rep, std::size_t checked) {
    auto row = make_row(check, item, label);
    row.checked = checked;
    for (const auto& v : rep.violations) fail(row, res.violations, v);
    res.rows.push_back(std::move(row));
    if (dims_dir) files[check] = report_to_json(rep);
  };

  if (item.k == 2) {
    auto mono = verify_monotone_k2(p, rs);
    absorb("monotone", mono, mono.pairs.size());
    auto cor = verify_coroot_inequalities_k2(p, rs);
    absorb("coroot", cor, cor.coroot_ledger.size());
  }
  auto mx = verify_max_dim(p, rs);
  std::size_t tuples = 0;
  for (std::size_t c = 0; c < p.size(); ++c) tuples += p.members(c).size();
  absorb("max_dim", mx, tuples);

  if (dims_dir) {
    const auto name = "dim_" + file_key(item.lambda.weight()) + "_k" + std::to_string(item.k) + "_" + label + ".json";
    write_file(*dims_dir / name, files.dump(2) + "\n");
  }
}

ItemResult run_item(const SweepConfig& cfg, const WorkItem& item, const std::vector<RootSystem>& systems,
                    const fs::path* out) {
  ItemResult res;
  std::optional<TuplePoset> poset;
  try {
    poset = build_poset(item.lambda, item.k, PosetOptions{cfg.guard, 1});
  } catch (const GuardExceeded& e) {
    auto row = make_row("poset", item);
    row.status = RowStatus::Skipped;
    row.detail = e.what();
    res.rows.push_back(std::move(row));
    return res;
  }

  if (out) {
    const auto covers = item.k == 2 ? all_covers(*poset) : std::vector<CoverEdge>{};
    const auto name = "poset_" + file_key(item.lambda.weight()) + "_k" + std::to_string(item.k) + ".json";
    write_file(*out / "posets" / name, poset_to_json(*poset, item.k == 2 ? &covers : nullptr).dump(2) + "\n");
  }

  poset_checks(*poset, item, res);
  const fs::path dims = out ? *out / "dims" : fs::path{};
  for (const auto& rs : systems) dimension_checks(*poset, rs, item, cfg.corrupt_coroots, out ? &dims : nullptr, res);
  return res;
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: throw Error(ErrorCode::Parse, std::string("unknown root-system family '") + c + "'");
  }
}

}  // namespace

SweepConfig SweepConfig::from_json(const Json& j) {
  SweepConfig c;
  if (!j.is_object()) throw Error(ErrorCode::Parse, "sweep configuration must be a JSON object");
  try {
    if (j.contains("rank_min")) c.rank_min = j.at("rank_min").get<std::size_t>();
    if (j.contains("rank_max")) c.rank_max = j.at("rank_max").get<std::size_t>();
    if (j.contains("m_max")) c.m_max = j.at("m_max").get<Coord>();
    if (j.contains("k_min")) c.k_min = j.at("k_min").get<std::size_t>();
    if (j.contains("k_max")) c.k_max = j.at("k_max").get<std::size_t>();
    if (j.contains("guard")) c.guard = j.at("guard").get<std::uint64_t>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("corrupt_coroots")) c.corrupt_coroots = j.at("corrupt_coroots").get<bool>();
    if (j.contains("families")) {
      c.families.clear();
      const auto& f = j.at("families");
      std::string letters;
      if (f.is_string()) {
        letters = f.get<std::string>();
      } else {
        for (const auto& e : f) letters += e.get<std::string>();
      }
      for (char ch : letters)
        if (ch != ',' && ch != ' ') c.families.push_back(family_from_char(ch));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad sweep configuration: ") + e.what());
  }
  if (c.rank_min < 1) throw Error(ErrorCode::InvalidArgument, "rank_min must be at least 1");
  if (c.k_min < 1) throw Error(ErrorCode::InvalidArgument, "k_min must be at least 1");
  if (c.m_max < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be non-negative");
  return c;
}

Json SweepConfig::to_json() const {
  std::string fam;
  for (Family f : families) fam += static_cast<char>(f);
  return Json{{"rank_min", rank_min}, {"rank_max", rank_max}, {"m_max", m_max},   {"k_min", k_min},
              {"k_max", k_max},       {"families", fam},      {"guard", guard},   {"corrupt_coroots", corrupt_coroots}};
}

std::string_view to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Violation: return "VIOLATION";
    case RowStatus::Skipped: return "skipped";
  }
  return "ok";
}

std::size_t SweepReport::count(RowStatus s) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == s;
  return n;
}

RootSystem corrupted(const RootSystem& rs) {
  std::vector<Coroot> kept;
  for (const auto& h : rs.coroots()) {
    bool simple_first = h.coeffs[0] == 1;
    for (std::size_t i = 1; i < h.coeffs.size(); ++i) simple_first = simple_first && h.coeffs[i] == 0;
    if (!simple_first) kept.push_back(h);
  }
  return RootSystem::with_coroots(rs.family(), rs.rank(), std::move(kept));
}

std::vector<RootSystem> compatible_root_systems(std::size_t n, const std::vector<Family>& families, bool corrupt) {
  std::vector<RootSystem> out;
  auto wanted = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };
  if (wanted(Family::A)) out.emplace_back(Family::A, n);
  if (wanted(Family::C) && n >= 2) out.emplace_back(Family::C, n);
  if (wanted(Family::B)) out.emplace_back(Family::B, n + 1);
  if (wanted(Family::D)) out.emplace_back(Family::D, n + 2);
  if (corrupt)
    for (auto& rs : out) rs = corrupted(rs);
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  SweepReport report;
  report.config = cfg;

  std::vector<WorkItem> items;
  std::map<std::size_t, std::vector<RootSystem>> systems;
  for (std::size_t n = cfg.rank_min; n <= cfg.rank_max; ++n) {
    systems.emplace(n, compatible_root_systems(n, cfg.families, cfg.corrupt_coroots));
    for (const auto& lambda : lattice_box(n, cfg.m_max))
      for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) items.push_back({lambda, k});
  }

  std::optional<fs::path> out;
  if (!cfg.out_dir.empty()) {
    out = fs::path(cfg.out_dir);
    fs::create_directories(*out / "posets");
    fs::create_directories(*out / "dims");
  }

  std::vector<ItemResult> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = run_item(cfg, items[i], systems.at(items[i].lambda.rank()), out ? &*out : nullptr);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = cfg.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, items.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : results) {
    std::move(r.rows.begin(), r.rows.end(), std::back_inserter(report.rows));
    std::move(r.violations.begin(), r.violations.end(), std::back_inserter(report.violations));
  }

  if (out) {
    write_file(*out / "report.json", sweep_to_json(report).dump(2) + "\n");
    write_file(*out / "report.csv", sweep_to_csv(report));
  }
  return report;
}

Json sweep_to_json(const SweepReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"check", row.check},
                        {"lambda", row.lambda},
                        {"k", row.k},
                        {"root_system", row.root_system},
                        {"status", std::string(to_string(row.status))},
                        {"checked", row.checked},
                        {"detail", row.detail}});
  }
  return Json{{"config", r.config.to_json()},
              {"summary",
               {{"rows", r.rows.size()},
                {"ok", r.count(RowStatus::Ok)},
                {"violations", r.count(RowStatus::Violation)},
                {"skipped", r.count(RowStatus::Skipped)}}},
              {"rows", std::move(rows)},
              {"violations", r.violations}};
}

std::string sweep_to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "check,lambda,k,root_system,status,checked,detail\n";
  for (const auto& row : r.rows) {
    std::string detail = row.detail;
    for (auto& ch : detail)
      if (ch == '"') ch = '\'';
    os << row.check << ",\"" << row.lambda << "\"," << row.k << ',' << row.root_system << ','
       << to_string(row.status) << ',' << row.checked << ",\"" << detail << "\"\n";
  }
  return os.str();
}

std::string sweep_summary(const SweepReport& r) {
  std::size_t checked = 0;
  for (const auto& row : r.rows) checked += row.checked;
  std::ostringstream os;
  os << r.rows.size() << " rows, " << checked << " items checked, " << r.count(RowStatus::Violation)
     << " violating rows (" << r.violations.size() << " violations), " << r.count(RowStatus::Skipped) << " skipped";
  return os.str();
}

}  // namespace weylorder
