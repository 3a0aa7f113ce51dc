#ifndef WEYLORDER_TUPLE_ORDER_HPP
#define WEYLORDER_TUPLE_ORDER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylorder/root_system.hpp"
#include "weylorder/weight.hpp"

namespace weylorder {

/// Ordered k-tuple of dominant weights of a common rank; `lambda()` is the
/// coordinate-wise sum.
class WeightTuple {
 public:
  explicit WeightTuple(std::vector<DominantWeight> parts);

  std::size_t k() const noexcept { return parts_.size(); }
  std::size_t rank() const noexcept { return lambda_.rank(); }
  const std::vector<DominantWeight>& parts() const noexcept { return parts_; }
  const DominantWeight& operator[](std::size_t idx) const { return parts_[idx]; }
  const DominantWeight& lambda() const noexcept { return lambda_; }

  friend bool operator==(const WeightTuple& a, const WeightTuple& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<DominantWeight> parts_;
  DominantWeight lambda_;
};

enum class OrderVerdict { StrictlyLess, Equivalent, StrictlyGreater, Incomparable };

OrderVerdict reversed(OrderVerdict v) noexcept;
/// "less", "equiv", "greater", "incomparable".
std::string_view to_string(OrderVerdict v) noexcept;
OrderVerdict verdict_from_string(std::string_view s);
inline bool is_below_or_equal(OrderVerdict v) noexcept {
  return v == OrderVerdict::StrictlyLess || v == OrderVerdict::Equivalent;
}

/// r_{(i,j),l}: the least sum of the omega_i..omega_j coordinates over all
/// l-element sub-multisets of parts. 1 <= i <= j <= rank, 1 <= l <= k.
Coord r_stat(const WeightTuple& t, std::size_t i, std::size_t j, std::size_t ell);

/// Every r_{(i,j),l} in the fixed order (i, j, l) lexicographic. Two tuples of
/// the same P+(lambda,k) are equivalent iff their profiles are equal.
std::vector<Coord> r_profile(const WeightTuple& t);

/// Componentwise comparison of two equal-length statistic vectors.
OrderVerdict compare_profiles(std::span<const Coord> a, std::span<const Coord> b);

/// The preorder on P+(lambda,k). Throws when lambda, k or rank differ.
OrderVerdict compare(const WeightTuple& a, const WeightTuple& b);

/// Reorders parts: part l of the result is part sigma^{-1}(l) of t.
WeightTuple sk_permute(const WeightTuple& t, const Permutation& sigma);

/// Parts sorted by lexicographically decreasing epsilon coordinates (stable).
WeightTuple canonical_form(const WeightTuple& t);

/// Rank-1 tuple of the (i..j) window sums of each part.
WeightTuple pi_project(const WeightTuple& t, std::size_t i, std::size_t j);

/// Coroot-indexed statistics r_{alpha,l} of the iota-embedded tuple, in the
/// order (coroot, l).
std::vector<Coord> coroot_profile(const WeightTuple& t, const RootSystem& rs);

/// The root-system preorder on iota-embedded tuples.
OrderVerdict compare_prec(const WeightTuple& a, const WeightTuple& b, const RootSystem& rs);

/// Concatenation of parts (used by the tuple-extension property).
WeightTuple concat(const WeightTuple& a, const WeightTuple& b);

/// "2,1/0,0" wire form.
std::string to_wire(const WeightTuple& t);

}  // namespace weylorder

#endif  // WEYLORDER_TUPLE_ORDER_HPP
