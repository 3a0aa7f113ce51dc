#include "weylorder/tuple_order.hpp"

#include <algorithm>
#include <sstream>

#include "weylorder/error.hpp"

namespace weylorder {

namespace {

DominantWeight sum_parts(const std::vector<DominantWeight>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "a weight tuple needs at least one part");
  Weight acc = parts.front().weight();
  for (std::size_t l = 1; l < parts.size(); ++l) acc += parts[l].weight();
  return DominantWeight(std::move(acc));
}

// Sum of the l smallest values, for l = 1..k, written to `out`.
void append_prefix_minima(std::vector<Coord>& values, std::vector<Coord>& out) {
  std::sort(values.begin(), values.end());
  Coord acc = 0;
  for (Coord v : values) {
    acc += v;
    out.push_back(acc);
  }
}

Coord window_sum(const DominantWeight& w, std::size_t i, std::size_t j) {
  Coord s = 0;
  for (std::size_t m = i; m <= j; ++m) s += w[m - 1];
  return s;
}

void check_window(const WeightTuple& t, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > t.rank())
    throw Error(ErrorCode::InvalidArgument, "window (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside 1 <= i <= j <= " + std::to_string(t.rank()));
}

void check_same_poset(const WeightTuple& a, const WeightTuple& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::RankMismatch, "tuples of rank " + std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()) + " are not comparable");
  if (a.k() != b.k() || a.lambda() != b.lambda())
    throw Error(ErrorCode::InvalidArgument, "tuples (" + to_wire(a) + ") and (" + to_wire(b) +
                                                ") do not belong to the same P+(lambda,k)");
}

}  // namespace

WeightTuple::WeightTuple(std::vector<DominantWeight> parts) : parts_(std::move(parts)), lambda_(sum_parts(parts_)) {}

OrderVerdict reversed(OrderVerdict v) noexcept {
  switch (v) {
    case OrderVerdict::StrictlyLess: return OrderVerdict::StrictlyGreater;
    case OrderVerdict::StrictlyGreater: return OrderVerdict::StrictlyLess;
    default: return v;
  }
}

std::string_view to_string(OrderVerdict v) noexcept {
  switch (v) {
    case OrderVerdict::StrictlyLess: return "less";
    case OrderVerdict::Equivalent: return "equiv";
    case OrderVerdict::StrictlyGreater: return "greater";
    case OrderVerdict::Incomparable: return "incomparable";
  }
  return "incomparable";
}

OrderVerdict verdict_from_string(std::string_view s) {
  if (s == "less") return OrderVerdict::StrictlyLess;
  if (s == "equiv") return OrderVerdict::Equivalent;
  if (s == "greater") return OrderVerdict::StrictlyGreater;
  if (s == "incomparable") return OrderVerdict::Incomparable;
  throw Error(ErrorCode::Parse, "unknown verdict '" + std::string(s) + "'");
}

Coord r_stat(const WeightTuple& t, std::size_t i, std::size_t j, std::size_t ell) {
  check_window(t, i, j);
  if (ell < 1 || ell > t.k())
    throw Error(ErrorCode::InvalidArgument, "subset size " + std::to_string(ell) + " outside 1.." + std::to_string(t.k()));
  std::vector<Coord> sums;
  sums.reserve(t.k());
  for (const auto& part : t.parts()) sums.push_back(window_sum(part, i, j));
  std::partial_sort(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(ell), sums.end());
  Coord acc = 0;
  for (std::size_t l = 0; l < ell; ++l) acc += sums[l];
  return acc;
}

std::vector<Coord> r_profile(const WeightTuple& t) {
  const std::size_t n = t.rank();
  const std::size_t k = t.k();
  std::vector<Coord> out;
  out.reserve(n * (n + 1) / 2 * k);
  std::vector<Coord> sums(k);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t l = 0; l < k; ++l) sums[l] = 0;
    for (std::size_t j = i; j <= n; ++j) {
      for (std::size_t l = 0; l < k; ++l) sums[l] += t[l][j - 1];
      auto scratch = sums;
      append_prefix_minima(scratch, out);
    }
  }
  return out;
}

OrderVerdict compare_profiles(std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "statistic vectors differ in length");
  bool le = true;
  bool ge = true;
  for (std::size_t i = 0; i < a.size() && (le || ge); ++i) {
    if (a[i] < b[i]) ge = false;
    if (a[i] > b[i]) le = false;
  }
  if (le && ge) return OrderVerdict::Equivalent;
  if (le) return OrderVerdict::StrictlyLess;
  if (ge) return OrderVerdict::StrictlyGreater;
  return OrderVerdict::Incomparable;
}

OrderVerdict compare(const WeightTuple& a, const WeightTuple& b) {
  check_same_poset(a, b);
  return compare_profiles(r_profile(a), r_profile(b));
}

WeightTuple sk_permute(const WeightTuple& t, const Permutation& sigma) {
  if (sigma.degree() != t.k())
    throw Error(ErrorCode::InvalidArgument, "permutation of degree " + std::to_string(sigma.degree()) +
                                                " cannot reorder a " + std::to_string(t.k()) + "-tuple");
  std::vector<DominantWeight> parts(t.parts());
  for (std::size_t l = 0; l < t.k(); ++l) parts[sigma(l)] = t[l];
  return WeightTuple(std::move(parts));
}

WeightTuple canonical_form(const WeightTuple& t) {
  std::vector<std::pair<std::vector<Coord>, std::size_t>> keyed;
  keyed.reserve(t.k());
  for (std::size_t l = 0; l < t.k(); ++l) keyed.emplace_back(t[l].epsilon(), l);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<DominantWeight> parts;
  parts.reserve(t.k());
  for (const auto& [key, l] : keyed) parts.push_back(t[l]);
  return WeightTuple(std::move(parts));
}

WeightTuple pi_project(const WeightTuple& t, std::size_t i, std::size_t j) {
  check_window(t, i, j);
  std::vector<DominantWeight> parts;
  parts.reserve(t.k());
  for (const auto& part : t.parts()) parts.emplace_back(std::vector<Coord>{window_sum(part, i, j)});
  return WeightTuple(std::move(parts));
}

std::vector<Coord> coroot_profile(const WeightTuple& t, const RootSystem& rs) {
  std::vector<EmbeddedWeight> embedded;
  embedded.reserve(t.k());
  for (const auto& part : t.parts()) embedded.push_back(iota(part, rs));
  std::vector<Coord> out;
  out.reserve(rs.coroots().size() * t.k());
  std::vector<Coord> values(t.k());
  for (const auto& h : rs.coroots()) {
    for (std::size_t l = 0; l < t.k(); ++l) values[l] = pairing(embedded[l], h);
    append_prefix_minima(values, out);
  }
  return out;
}

OrderVerdict compare_prec(const WeightTuple& a, const WeightTuple& b, const RootSystem& rs) {
  check_same_poset(a, b);
  return compare_profiles(coroot_profile(a, rs), coroot_profile(b, rs));
}

WeightTuple concat(const WeightTuple& a, const WeightTuple& b) {
  std::vector<DominantWeight> parts(a.parts());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return WeightTuple(std::move(parts));
}

std::string to_wire(const WeightTuple& t) {
  std::ostringstream os;
  for (std::size_t l = 0; l < t.k(); ++l) os << (l ? "/" : "") << to_wire(t[l].weight());
  return os.str();
}

}  // namespace weylorder
