#include "weylorder/poset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "weylorder/error.hpp"

namespace weylorder {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at every step.
    const u128 next = static_cast<u128>(acc) * (n - r + i) / i;
    if (next >= std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    acc = static_cast<std::uint64_t>(next);
  }
  return acc;
}

// All ordered compositions of m into k non-negative parts.
std::vector<std::vector<Coord>> compositions(Coord m, std::size_t k) {
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> cur(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, Coord left) -> void {
    if (pos + 1 == k) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (Coord a = left; a >= 0; --a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<Coord> epsilon_key(const WeightTuple& t) {
  std::vector<Coord> key;
  for (const auto& part : t.parts()) {
    auto e = part.epsilon();
    key.insert(key.end(), e.begin(), e.end());
  }
  return key;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

void check_k(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
}

}  // namespace

std::uint64_t estimate_tuple_count(const DominantWeight& lambda, std::size_t k) {
  check_k(k);
  std::uint64_t total = 1;
  for (Coord m : lambda.omega())
    total = saturating_mul(total, binomial(static_cast<std::uint64_t>(m) + k - 1, k - 1));
  return total;
}

std::vector<WeightTuple> enumerate_tuples(const DominantWeight& lambda, std::size_t k, std::uint64_t guard) {
  const auto estimate = estimate_tuple_count(lambda, k);
  if (estimate > guard) throw GuardExceeded(estimate, guard);

  const std::size_t n = lambda.rank();
  std::vector<std::vector<std::vector<Coord>>> per_coord;
  per_coord.reserve(n);
  for (Coord m : lambda.omega()) per_coord.push_back(compositions(m, k));

  std::vector<WeightTuple> out;
  out.reserve(static_cast<std::size_t>(estimate));
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    std::vector<DominantWeight> parts;
    parts.reserve(k);
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<Coord> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = per_coord[i][odo[i]][l];
      parts.emplace_back(std::move(w));
    }
    out.emplace_back(std::move(parts));

    std::size_t i = n;
    while (i-- > 0) {
      if (++odo[i] < per_coord[i].size()) break;
      odo[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

TuplePoset build_poset(const DominantWeight& lambda, std::size_t k, const PosetOptions& options) {
  auto tuples = enumerate_tuples(lambda, k, options.guard);

  // Quotient by equality of r-statistic profiles.
  std::map<std::vector<Coord>, std::size_t> by_profile;
  std::vector<std::vector<Coord>> profiles;
  std::vector<std::vector<WeightTuple>> members;
  for (auto& t : tuples) {
    auto prof = r_profile(t);
    auto [it, inserted] = by_profile.try_emplace(prof, profiles.size());
    if (inserted) {
      profiles.push_back(std::move(prof));
      members.emplace_back();
    }
    members[it->second].push_back(std::move(t));
  }

  const std::size_t n_classes = profiles.size();
  std::vector<WeightTuple> reps;
  std::vector<std::vector<Coord>> rep_keys;
  reps.reserve(n_classes);
  for (const auto& group : members) {
    std::optional<WeightTuple> best;
    std::vector<Coord> best_key;
    for (const auto& t : group) {
      auto canon = canonical_form(t);
      auto key = epsilon_key(canon);
      if (!best || key > best_key) {
        best = std::move(canon);
        best_key = std::move(key);
      }
    }
    reps.push_back(std::move(*best));
    rep_keys.push_back(std::move(best_key));
  }

  std::vector<std::size_t> order(n_classes);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Coord> totals(n_classes);
  for (std::size_t c = 0; c < n_classes; ++c)
    totals[c] = std::accumulate(profiles[c].begin(), profiles[c].end(), Coord{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (totals[x] != totals[y]) return totals[x] < totals[y];
    return rep_keys[x] > rep_keys[y];
  });

  TuplePoset p(lambda, k);
  p.classes_.reserve(n_classes);
  for (std::size_t idx : order) {
    p.classes_.push_back(std::move(reps[idx]));
    p.members_.push_back(std::move(members[idx]));
    p.profiles_.push_back(std::move(profiles[idx]));
  }

  // Verdict matrix, rows striped across workers.
  p.order_.assign(n_classes * n_classes, OrderVerdict::Equivalent);
  const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), static_cast<unsigned>(std::max<std::size_t>(1, n_classes)));
  auto fill_rows = [&](unsigned worker) {
    for (std::size_t a = worker; a < n_classes; a += jobs)
      for (std::size_t b = a + 1; b < n_classes; ++b) {
        const auto v = compare_profiles(p.profiles_[a], p.profiles_[b]);
        p.order_[a * n_classes + b] = v;
        p.order_[b * n_classes + a] = reversed(v);
      }
  };
  if (jobs <= 1) {
    fill_rows(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(fill_rows, w);
  }

  // Transitive reduction. Index order is a linear extension, so scanning the
  // strict upper set of a in increasing index finds each cover before any
  // element above it.
  const std::size_t words = (n_classes + 63) / 64;
  std::vector<std::uint64_t> covered(words);
  for (std::size_t a = 0; a < n_classes; ++a) {
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t b = a + 1; b < n_classes; ++b) {
      if (p.verdict(a, b) != OrderVerdict::StrictlyLess) continue;
      if (covered[b / 64] >> (b % 64) & 1u) continue;
      p.hasse_.emplace_back(a, b);
      for (std::size_t c = b + 1; c < n_classes; ++c)
        if (p.verdict(b, c) == OrderVerdict::StrictlyLess) covered[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return p;
}

std::vector<std::size_t> TuplePoset::upper_covers(std::size_t c) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : hasse_)
    if (lo == c) out.push_back(hi);
  return out;
}

std::vector<std::size_t> TuplePoset::lower_covers(std::size_t c) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : hasse_)
    if (hi == c) out.push_back(lo);
  return out;
}

std::vector<std::size_t> TuplePoset::minimal_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < size(); ++c) {
    bool minimal = true;
    for (std::size_t d = 0; d < size() && minimal; ++d)
      if (verdict(d, c) == OrderVerdict::StrictlyLess) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> TuplePoset::maximal_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < size(); ++c) {
    bool maximal = true;
    for (std::size_t d = 0; d < size() && maximal; ++d)
      if (verdict(c, d) == OrderVerdict::StrictlyLess) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> TuplePoset::class_of(const WeightTuple& t) const {
  if (t.k() != k_ || t.lambda() != lambda_) return std::nullopt;
  const auto prof = r_profile(t);
  for (std::size_t c = 0; c < profiles_.size(); ++c)
    if (profiles_[c] == prof) return c;
  return std::nullopt;
}

WeightTuple minimal_element(const DominantWeight& lambda, std::size_t k) {
  check_k(k);
  std::vector<DominantWeight> parts(k, DominantWeight::zero(lambda.rank()));
  parts[0] = lambda;
  return WeightTuple(std::move(parts));
}

WeightTuple maximal_element(const DominantWeight& lambda, std::size_t k) {
  check_k(k);
  const auto b = lambda.epsilon();
  const auto kk = static_cast<Coord>(k);
  std::vector<DominantWeight> parts;
  parts.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Coord> eps(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Coord p = b[i] / kk;
      const Coord r = b[i] % kk;
      eps[i] = static_cast<Coord>(j) <= r ? p + 1 : p;
    }
    parts.emplace_back(epsilon_to_omega(eps));
  }
  return WeightTuple(std::move(parts));
}

bool has_unit_epsilon_gaps(const WeightTuple& t) {
  for (std::size_t x = 0; x < t.k(); ++x)
    for (std::size_t y = x + 1; y < t.k(); ++y) {
      const auto ex = t[x].epsilon();
      const auto ey = t[y].epsilon();
      for (std::size_t i = 0; i < ex.size(); ++i) {
        const Coord c = ex[i] - ey[i];
        if (c != 0 && c != 1) return false;
      }
    }
  return true;
}

std::uint64_t poset_size_k2(const DominantWeight& lambda) {
  std::uint64_t product = 1;
  bool all_even = true;
  for (Coord m : lambda.omega()) {
    product = saturating_mul(product, static_cast<std::uint64_t>(m) + 1);
    if (product == std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorCode::InvalidArgument, "poset size overflows 64 bits");
    all_even = all_even && m % 2 == 0;
  }
  return all_even ? (product + 1) / 2 : product / 2;
}

// --- covers -----------------------------------------------------------------

std::string_view to_string(CoverKind kind) noexcept {
  switch (kind) {
    case CoverKind::TypeI: return "I";
    case CoverKind::TypeII: return "II";
    case CoverKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

CoverEdge classify_cover(const TuplePoset& p, std::size_t lower, std::size_t upper) {
  if (p.k() != 2) throw Error(ErrorCode::InvalidArgument, "cover classification is defined for k = 2 only");
  const std::size_t n = p.rank();
  const WeightTuple& lo = p.representative(lower);
  const WeightTuple& hi = p.representative(upper);
  const Weight& l1 = lo[0].weight();
  const Weight& l2 = lo[1].weight();
  const auto sigmas = dominating_permutations(l1 - l2);

  CoverEdge edge{lower, upper, CoverKind::Unclassified, std::nullopt};

  // Type I: some omega_i is positive in both sigma(l1 - m1) and sigma(m1 - l2).
  std::optional<CoverWitness> first_type1;
  for (bool swapped : {false, true}) {
    const Weight& m1 = hi[swapped ? 1 : 0].weight();
    for (const auto& sigma : sigmas) {
      const Weight x = act(sigma, l1 - m1);
      const Weight y = act(sigma, m1 - l2);
      if (!x.is_dominant() || !y.is_dominant()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= 0 || y[i] <= 0) continue;
        const Weight wi = Weight::fundamental(n, i + 1);
        CoverWitness w{sigma, swapped, i + 1, l1 - act(sigma.inverse(), wi) == m1, l1 - act(sigma, wi) == m1, {}};
        if (w.inverse_formula_matches) {
          edge.kind = CoverKind::TypeI;
          edge.witness = std::move(w);
          return edge;
        }
        if (!first_type1) first_type1 = std::move(w);
      }
    }
  }
  if (first_type1) {
    edge.kind = CoverKind::TypeI;
    edge.witness = std::move(first_type1);
    return edge;
  }

  // Type II: mu_1 = sigma^{-1}( sum_i omega_i^*(sigma(lambda_{eps_i})) omega_i ).
  for (bool swapped : {false, true}) {
    const Weight& m1 = hi[swapped ? 1 : 0].weight();
    for (const auto& sigma : sigmas) {
      const Weight s1 = act(sigma, l1);
      const Weight s2 = act(sigma, l2);
      const Permutation inv = sigma.inverse();
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Coord> v(n);
        std::vector<int> selection(n);
        for (std::size_t i = 0; i < n; ++i) {
          const bool second = (mask >> i) & 1u;
          v[i] = second ? s2[i] : s1[i];
          selection[i] = second ? 2 : 1;
        }
        if (act(inv, Weight(std::move(v))) == m1) {
          edge.kind = CoverKind::TypeII;
          edge.witness = CoverWitness{sigma, swapped, std::nullopt, false, false, std::move(selection)};
          return edge;
        }
      }
    }
  }
  return edge;
}

std::vector<CoverEdge> covers_of(const TuplePoset& p, std::size_t class_index) {
  if (class_index >= p.size()) throw Error(ErrorCode::InvalidArgument, "class index out of range");
  std::vector<CoverEdge> out;
  for (std::size_t upper : p.upper_covers(class_index)) {
    if (p.k() == 2)
      out.push_back(classify_cover(p, class_index, upper));
    else
      out.push_back(CoverEdge{class_index, upper, CoverKind::Unclassified, std::nullopt});
  }
  return out;
}

std::vector<CoverEdge> all_covers(const TuplePoset& p) {
  std::vector<CoverEdge> out;
  out.reserve(p.hasse_edges().size());
  for (const auto& [lo, hi] : p.hasse_edges()) {
    if (p.k() == 2)
      out.push_back(classify_cover(p, lo, hi));
    else
      out.push_back(CoverEdge{lo, hi, CoverKind::Unclassified, std::nullopt});
  }
  return out;
}

std::optional<RankTwoCoverMatch> match_rank2_cover_list(const TuplePoset& p, std::size_t lower, std::size_t upper) {
  if (p.k() != 2 || p.rank() != 2)
    throw Error(ErrorCode::InvalidArgument, "the rank-2 cover list applies to n = 2, k = 2 only");
  const WeightTuple& lo = p.representative(lower);
  const WeightTuple& hi = p.representative(upper);
  const std::vector<Permutation> candidates{Permutation::identity(3), Permutation::transposition(3, 1, 2),
                                            Permutation::transposition(3, 2, 3)};
  const Weight w1 = Weight::fundamental(2, 1);
  const Weight w2 = Weight::fundamental(2, 2);
  auto is_upper = [&](const Weight& m1) { return m1 == hi[0].weight() || m1 == hi[1].weight(); };

  for (bool swapped : {false, true}) {
    const Weight& l1 = lo[swapped ? 1 : 0].weight();
    const Weight& l2 = lo[swapped ? 0 : 1].weight();
    for (const auto& sigma : candidates) {
      const Weight d = act(sigma, l1 - l2);
      if (!d.is_dominant()) continue;
      // All three candidates are involutions, so sigma and sigma^{-1} agree.
      if (d[0] >= 2 && is_upper(l1 - act(sigma, w1))) return RankTwoCoverMatch{1, sigma, swapped};
      if (d[1] >= 2 && is_upper(l1 - act(sigma, w2))) return RankTwoCoverMatch{2, sigma, swapped};
      if (d[0] > 0 && is_upper(l1 - d[0] * act(sigma, w1))) return RankTwoCoverMatch{3, sigma, swapped};
    }
  }
  return std::nullopt;
}

}  // namespace weylorder
