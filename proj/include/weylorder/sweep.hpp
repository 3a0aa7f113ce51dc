#ifndef WEYLORDER_SWEEP_HPP
#define WEYLORDER_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weylorder/poset.hpp"
#include "weylorder/root_system.hpp"
#include "weylorder/serialize.hpp"

namespace weylorder {

struct SweepConfig {
  std::size_t rank_min = 2;
  std::size_t rank_max = 2;
  Coord m_max = 3;
  std::size_t k_min = 2;
  std::size_t k_max = 3;
  std::vector<Family> families{Family::A, Family::C, Family::B, Family::D};
  std::uint64_t guard = kDefaultGuard;
  unsigned jobs = 1;
  /// Empty: no files written.
  std::string out_dir;
  /// Drop h_1 from every coroot list (negative control).
  bool corrupt_coroots = false;

  /// Reads any subset of the keys rank_min, rank_max, m_max, k_min, k_max,
  /// families (["A","C"] or "ACBD"), guard, jobs, out_dir, corrupt_coroots.
  static SweepConfig from_json(const Json& j);
  Json to_json() const;
};

enum class RowStatus { Ok, Violation, Skipped };
std::string_view to_string(RowStatus s) noexcept;

struct SweepRow {
  std::string check;        // size, max_element, covers, monotone, coroot, max_dim
  std::string lambda;       // wire form
  std::size_t k = 0;
  std::string root_system;  // empty for root-system-free checks
  RowStatus status = RowStatus::Ok;
  std::size_t checked = 0;  // pairs / tuples / edges examined
  std::string detail;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<std::string> violations;

  std::size_t count(RowStatus s) const;
  bool ok() const noexcept { return violations.empty(); }
};

/// Root systems whose iota accepts base rank n: A_n, C_n (n >= 2), B_{n+1},
/// D_{n+2}, restricted to `families`.
std::vector<RootSystem> compatible_root_systems(std::size_t n, const std::vector<Family>& families,
                                                bool corrupt = false);

/// Coroot list with h_1 removed.
RootSystem corrupted(const RootSystem& rs);

/// Runs every check over the configured range. Rows are ordered by (rank,
/// lambda, k, check, root system) independent of `jobs`. Writes files when
/// out_dir is set.
SweepReport run_sweep(const SweepConfig& config);

Json sweep_to_json(const SweepReport& r);
std::string sweep_to_csv(const SweepReport& r);
std::string sweep_summary(const SweepReport& r);

}  // namespace weylorder

#endif  // WEYLORDER_SWEEP_HPP
