#ifndef WEYLORDER_DIMENSION_HPP
#define WEYLORDER_DIMENSION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylorder/poset.hpp"
#include "weylorder/root_system.hpp"
#include "weylorder/tuple_order.hpp"

namespace weylorder {

using BigInt = boost::multiprecision::cpp_int;

/// Shifted pairing (lambda + rho)(h). Positive for dominant lambda.
Coord bracket(std::span<const Coord> coords, const Coroot& h);
Coord bracket(const EmbeddedWeight& w, const Coroot& h);

/// Weyl dimension of V(lambda) for a dominant weight of the root system
/// (full-rank omega coordinates). The numerator product is divided by the
/// denominator product once; a remainder throws.
BigInt weyl_dim(const RootSystem& rs, std::span<const Coord> coords);
BigInt weyl_dim(const RootSystem& rs, const EmbeddedWeight& w);

/// Product of weyl_dim over the iota-embedded parts.
BigInt tensor_dim(const RootSystem& rs, const WeightTuple& t);

/// Same as weyl_dim but returns nullopt instead of throwing when the
/// quotient is not an integer (used to flag corrupted tables).
std::optional<BigInt> weyl_dim_if_integral(const RootSystem& rs, std::span<const Coord> coords);

enum class CheckStatus { HoldsStrict, HoldsEqual, Violation };
std::string_view to_string(CheckStatus s) noexcept;

struct PairCheck {
  std::size_t lower;
  std::size_t upper;
  OrderVerdict verdict;
  BigInt lower_dim;
  BigInt upper_dim;
  CheckStatus status;
};

/// One per-coroot factor comparison for a k = 2 pair. For grouped entries
/// the partner is the window coroot h_{i,j-1} and both sides are 4-factor
/// products.
struct CorootCheck {
  std::size_t lower;
  std::size_t upper;
  std::size_t coroot;
  std::optional<std::size_t> partner;
  BigInt lhs;
  BigInt rhs;
  CheckStatus status;
};

struct DimensionReport {
  std::string root_system;
  DominantWeight lambda;
  std::size_t k;
  std::vector<WeightTuple> classes;
  std::vector<BigInt> class_dims;
  std::vector<PairCheck> pairs;
  std::vector<CorootCheck> coroot_ledger;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Dimension monotonicity along the order for k = 2: strict order gives a
/// strictly smaller tensor dimension, members of one class share a dimension.
DimensionReport verify_monotone_k2(const TuplePoset& poset, const RootSystem& rs);
DimensionReport verify_monotone_k2(const DominantWeight& lambda, const RootSystem& rs,
                                   const PosetOptions& options = {});

/// Per-coroot inequalities for every comparable k = 2 pair: height-2 coroots
/// grouped with their window coroot, the rest compared singly. Also checks
/// that the ledger multiplies out to the tensor-dimension numerators.
DimensionReport verify_coroot_inequalities_k2(const TuplePoset& poset, const RootSystem& rs);
DimensionReport verify_coroot_inequalities_k2(const DominantWeight& lambda, const RootSystem& rs,
                                              const PosetOptions& options = {});

/// Every ordered tuple has tensor dimension at most that of maximal_element,
/// with equality exactly on its S_k orbit.
DimensionReport verify_max_dim(const TuplePoset& poset, const RootSystem& rs);
DimensionReport verify_max_dim(const DominantWeight& lambda, std::size_t k, const RootSystem& rs,
                               const PosetOptions& options = {});

enum class LemmaVerdict { HoldsStrict, HoldsEqual, Violated, NotApplicable };
std::string_view to_string(LemmaVerdict v) noexcept;

/// abcd <= (a+1)(b-1)(c-1)(d+1) under a < b < d, a < c < d, b - a >= d - c + 2
/// (all positive). Evaluated arithmetically; NotApplicable when a premise fails.
LemmaVerdict lemma_4tuple_holds(long long a, long long b, long long c, long long d);

}  // namespace weylorder

#endif  // WEYLORDER_DIMENSION_HPP
