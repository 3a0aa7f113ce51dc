#ifndef WEYLORDER_POSET_HPP
#define WEYLORDER_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "weylorder/tuple_order.hpp"
#include "weylorder/weight.hpp"

namespace weylorder {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

struct PosetOptions {
  /// Maximum number of ordered tuples to enumerate.
  std::uint64_t guard = kDefaultGuard;
  /// Worker threads for the verdict matrix; 0 means hardware concurrency.
  unsigned jobs = 1;
};

/// prod_i C(m_i + k - 1, k - 1), saturating at UINT64_MAX.
std::uint64_t estimate_tuple_count(const DominantWeight& lambda, std::size_t k);

/// All ordered k-tuples of dominant weights summing to lambda, in odometer
/// order over the per-coordinate compositions.
std::vector<WeightTuple> enumerate_tuples(const DominantWeight& lambda, std::size_t k,
                                          std::uint64_t guard = kDefaultGuard);

/// The quotient P+(lambda,k)/~ with its full verdict matrix and Hasse diagram.
///
/// Classes are ordered by the sum of their r-statistics (which strictly
/// increases along the order), then by representative; index order is
/// therefore a linear extension. Each class keeps all of its ordered members.
class TuplePoset {
 public:
  const DominantWeight& lambda() const noexcept { return lambda_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t rank() const noexcept { return lambda_.rank(); }
  std::size_t size() const noexcept { return classes_.size(); }

  /// canonical_form of the class member with the largest epsilon key.
  const WeightTuple& representative(std::size_t c) const { return classes_.at(c); }
  const std::vector<WeightTuple>& representatives() const noexcept { return classes_; }
  const std::vector<WeightTuple>& members(std::size_t c) const { return members_.at(c); }
  const std::vector<Coord>& profile(std::size_t c) const { return profiles_.at(c); }

  OrderVerdict verdict(std::size_t a, std::size_t b) const { return order_.at(a * size() + b); }
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const noexcept { return hasse_; }
  std::vector<std::size_t> upper_covers(std::size_t c) const;
  std::vector<std::size_t> lower_covers(std::size_t c) const;

  std::vector<std::size_t> minimal_classes() const;
  std::vector<std::size_t> maximal_classes() const;

  /// Class containing the given tuple (by profile).
  std::optional<std::size_t> class_of(const WeightTuple& t) const;

  friend TuplePoset build_poset(const DominantWeight& lambda, std::size_t k, const PosetOptions& options);

 private:
  TuplePoset(DominantWeight lambda, std::size_t k) : lambda_(std::move(lambda)), k_(k) {}

  DominantWeight lambda_;
  std::size_t k_;
  std::vector<WeightTuple> classes_;
  std::vector<std::vector<WeightTuple>> members_;
  std::vector<std::vector<Coord>> profiles_;
  std::vector<OrderVerdict> order_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

TuplePoset build_poset(const DominantWeight& lambda, std::size_t k, const PosetOptions& options = {});

/// (lambda, 0, ..., 0).
WeightTuple minimal_element(const DominantWeight& lambda, std::size_t k);

/// Balanced closed form: with b_i = p_i k + r_i (epsilon coordinates of
/// lambda), part j has epsilon coordinate p_i + 1 for j <= r_i, else p_i.
WeightTuple maximal_element(const DominantWeight& lambda, std::size_t k);

/// True when every pairwise difference of parts (in order) has epsilon
/// coordinates in {0, 1}.
bool has_unit_epsilon_gaps(const WeightTuple& t);

/// Number of k = 2 classes: (prod(m_i+1) + 1)/2 if all m_i even, else prod(m_i+1)/2.
std::uint64_t poset_size_k2(const DominantWeight& lambda);

// --- covers -----------------------------------------------------------------

enum class CoverKind { TypeI, TypeII, Unclassified };
std::string_view to_string(CoverKind kind) noexcept;

struct CoverWitness {
  /// sigma in S_{n+1} with sigma(lambda_1 - lambda_2) dominant.
  Permutation sigma;
  /// Upper pair taken as (mu_2, mu_1) relative to its representative.
  bool upper_swapped = false;
  /// Type I: the fundamental weight index i (1-based).
  std::optional<std::size_t> omega_index;
  /// Type I: mu_1 = lambda_1 - sigma^{-1} omega_i holds / with sigma instead.
  bool inverse_formula_matches = false;
  bool direct_formula_matches = false;
  /// Type II: the selection epsilon in {1,2}^n.
  std::vector<int> selection;
};

struct CoverEdge {
  std::size_t lower;
  std::size_t upper;
  CoverKind kind = CoverKind::Unclassified;
  std::optional<CoverWitness> witness;
};

/// Classifies a Hasse edge of a k = 2 poset. Throws for k != 2.
CoverEdge classify_cover(const TuplePoset& p, std::size_t lower, std::size_t upper);

/// Upper covers of a class; classified when k = 2, Unclassified otherwise.
std::vector<CoverEdge> covers_of(const TuplePoset& p, std::size_t class_index);

/// covers_of for every class, in Hasse-edge order.
std::vector<CoverEdge> all_covers(const TuplePoset& p);

/// Match of an upper cover against the three-case rank-2 list
/// (sigma in {id, s1,2, s2,3}).
struct RankTwoCoverMatch {
  int case_number;  // 1, 2 or 3
  Permutation sigma;
  bool lower_swapped;
};

/// Rank 2, k = 2 only. Tries the lower representative in both orders.
std::optional<RankTwoCoverMatch> match_rank2_cover_list(const TuplePoset& p, std::size_t lower, std::size_t upper);

}  // namespace weylorder

#endif  // WEYLORDER_POSET_HPP
