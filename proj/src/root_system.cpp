#include "weylorder/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "weylorder/error.hpp"

namespace weylorder {

int Coroot::rho_pairing() const noexcept { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

std::optional<std::pair<std::size_t, std::size_t>> Coroot::partner_window() const {
  if (!height2_window || height2_window->first >= height2_window->second) return std::nullopt;
  return std::pair{height2_window->first, height2_window->second - 1};
}

Coroot make_coroot(std::vector<int> coeffs) {
  Coroot h{std::move(coeffs), std::nullopt};
  const auto two = std::find(h.coeffs.begin(), h.coeffs.end(), 2);
  if (two != h.coeffs.end()) {
    const auto first = std::find_if(h.coeffs.begin(), h.coeffs.end(), [](int c) { return c != 0; });
    h.height2_window = std::pair<std::size_t, std::size_t>(
        static_cast<std::size_t>(first - h.coeffs.begin()) + 1, static_cast<std::size_t>(two - h.coeffs.begin()) + 1);
  }
  return h;
}

std::size_t minimum_rank(Family family) noexcept {
  switch (family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

namespace {

void check_rank(Family family, std::size_t rank) {
  if (family != Family::A && family != Family::B && family != Family::C && family != Family::D)
    throw Error(ErrorCode::InvalidArgument, "unknown root system family");
  if (rank < minimum_rank(family))
    throw Error(ErrorCode::InvalidArgument, std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                                                " is not a valid classical root system (minimum rank " +
                                                std::to_string(minimum_rank(family)) + ")");
}

// Indicator-style builders with 1-based node numbers.
std::vector<int> interval(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<int> c(n, 0);
  for (std::size_t m = i; m <= j; ++m) c[m - 1] = 1;
  return c;
}

}  // namespace

std::vector<std::vector<int>> printed_coroot_table(Family family, std::size_t n) {
  check_rank(family, n);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) out.push_back(interval(n, i, j));

  switch (family) {
    case Family::A: break;
    case Family::C:
      // h_i + ... + h_{j-1} + 2h_j + ... + 2h_n, i < j
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          std::vector<int> c(n, 0);
          for (std::size_t m = i; m < j; ++m) c[m - 1] = 1;
          for (std::size_t m = j; m <= n; ++m) c[m - 1] = 2;
          out.push_back(std::move(c));
        }
      break;
    case Family::B:
      // h_i + ... + h_{j-1} + 2h_j + ... + 2h_{n-1} + h_n, i <= j
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
          std::vector<int> c(n, 0);
          for (std::size_t m = i; m < j; ++m) c[m - 1] = 1;
          for (std::size_t m = j; m + 1 <= n; ++m) c[m - 1] = 2;
          c[n - 1] = 1;
          out.push_back(std::move(c));
        }
      break;
    case Family::D:
      // h_i + ... + h_{n-2} + h_n, 1 <= i <= n-2
      for (std::size_t i = 1; i + 2 <= n; ++i) {
        std::vector<int> c(n, 0);
        for (std::size_t m = i; m + 2 <= n; ++m) c[m - 1] = 1;
        c[n - 1] = 1;
        out.push_back(std::move(c));
      }
      // h_i + ... + h_{j-1} + 2h_j + ... + 2h_{n-2} + h_{n-1} + h_n, i < j < n-1
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
          std::vector<int> c(n, 0);
          for (std::size_t m = i; m < j; ++m) c[m - 1] = 1;
          for (std::size_t m = j; m + 2 <= n; ++m) c[m - 1] = 2;
          c[n - 2] = 1;
          c[n - 1] = 1;
          out.push_back(std::move(c));
        }
      break;
  }
  return out;
}

std::vector<Coroot> positive_coroots(Family family, std::size_t n) {
  auto printed = printed_coroot_table(family, n);
  std::vector<Coroot> out;
  std::set<std::vector<int>> seen;
  for (auto& c : printed) {
    // In D_n the nodes n-1 and n are not joined, so h_{n-1} + h_n is not a coroot.
    if (family == Family::D && c[n - 2] == 1 && c[n - 1] == 1 &&
        std::count(c.begin(), c.end(), 0) == static_cast<std::ptrdiff_t>(n - 2))
      continue;
    if (!seen.insert(c).second) continue;
    out.push_back(make_coroot(std::move(c)));
  }
  return out;
}

std::vector<std::vector<int>> cartan_matrix(Family family, std::size_t n) {
  check_rank(family, n);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  if (family == Family::D) {
    for (std::size_t i = 0; i + 2 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
    return a;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  if (family == Family::B) a[n - 1][n - 2] = -2;  // alpha_{n-1}(h_n), alpha_n short
  if (family == Family::C) a[n - 2][n - 1] = -2;  // alpha_n(h_{n-1}), alpha_n long
  return a;
}

std::vector<std::vector<int>> positive_roots_from_cartan(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    roots.insert(e);
    queue.push_back(std::move(e));
  }
  // Breadth-first by height: the alpha_j-string through beta is
  // beta - p alpha_j, ..., beta + q alpha_j with p - q = beta(h_j).
  while (!queue.empty()) {
    auto beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      int value = 0;
      for (std::size_t i = 0; i < n; ++i) value += beta[i] * cartan[j][i];
      int p = 0;
      auto down = beta;
      while (true) {
        --down[j];
        if (!roots.contains(down)) break;
        ++p;
      }
      if (p - value > 0) {
        auto up = beta;
        ++up[j];
        if (roots.insert(up).second) queue.push_back(std::move(up));
      }
    }
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  return out;
}

std::vector<std::vector<int>> generated_coroots(Family family, std::size_t n) {
  auto a = cartan_matrix(family, n);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[j][i];
  return positive_roots_from_cartan(t);
}

CorootTableCheck check_coroot_table(Family family, std::size_t n) {
  const auto printed = printed_coroot_table(family, n);
  const auto generated = generated_coroots(family, n);
  const auto validated = positive_coroots(family, n);

  CorootTableCheck r{family, n, printed.size(), 0, generated.size(), 0, {}, {}, {}, false};
  switch (family) {
    case Family::A: r.expected_count = n * (n + 1) / 2; break;
    case Family::B:
    case Family::C: r.expected_count = n * n; break;
    case Family::D: r.expected_count = n * (n - 1); break;
  }

  std::set<std::vector<int>> printed_set;
  std::set<std::vector<int>> dup_set;
  for (const auto& c : printed)
    if (!printed_set.insert(c).second) dup_set.insert(c);
  r.printed_distinct = printed_set.size();
  r.duplicates.assign(dup_set.begin(), dup_set.end());

  const std::set<std::vector<int>> generated_set(generated.begin(), generated.end());
  std::set_difference(printed_set.begin(), printed_set.end(), generated_set.begin(), generated_set.end(),
                      std::back_inserter(r.printed_not_generated));
  std::set_difference(generated_set.begin(), generated_set.end(), printed_set.begin(), printed_set.end(),
                      std::back_inserter(r.generated_not_printed));

  std::set<std::vector<int>> validated_set;
  for (const auto& h : validated) validated_set.insert(h.coeffs);
  r.validated_matches_generated = validated_set == generated_set && validated.size() == generated.size();
  return r;
}

// --- RootSystem ------------------------------------------------------------

RootSystem::RootSystem(Family family, std::size_t rank)
    : family_(family), rank_(rank), coroots_(positive_coroots(family, rank)) {}

RootSystem::RootSystem(Family family, std::size_t rank, std::vector<Coroot> coroots)
    : family_(family), rank_(rank), coroots_(std::move(coroots)) {}

RootSystem RootSystem::with_coroots(Family family, std::size_t rank, std::vector<Coroot> coroots) {
  check_rank(family, rank);
  for (const auto& h : coroots)
    if (h.coeffs.size() != rank) throw Error(ErrorCode::RankMismatch, "coroot length does not match rank");
  return RootSystem(family, rank, std::move(coroots));
}

RootSystem RootSystem::parse(std::string_view name) {
  auto fail = [&] { return Error(ErrorCode::Parse, "cannot parse root system '" + std::string(name) + "'"); };
  if (name.size() < 2) throw fail();
  Family family;
  switch (name[0]) {
    case 'A': case 'a': family = Family::A; break;
    case 'B': case 'b': family = Family::B; break;
    case 'C': case 'c': family = Family::C; break;
    case 'D': case 'd': family = Family::D; break;
    default: throw fail();
  }
  std::size_t rank = 0;
  const auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
  return RootSystem(family, rank);
}

std::string RootSystem::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

std::size_t RootSystem::base_rank() const noexcept {
  switch (family_) {
    case Family::B: return rank_ - 1;
    case Family::D: return rank_ - 2;
    default: return rank_;
  }
}

std::optional<std::size_t> RootSystem::find(std::span<const int> coeffs) const {
  for (std::size_t i = 0; i < coroots_.size(); ++i)
    if (std::equal(coeffs.begin(), coeffs.end(), coroots_[i].coeffs.begin(), coroots_[i].coeffs.end())) return i;
  return std::nullopt;
}

EmbeddedWeight iota(const DominantWeight& w, const RootSystem& rs) {
  if (rs.base_rank() != w.rank())
    throw Error(ErrorCode::RankMismatch, "a rank " + std::to_string(w.rank()) + " weight does not embed into " +
                                             rs.name() + " (expects rank " + std::to_string(rs.base_rank()) + ")");
  std::vector<Coord> coords(rs.rank(), 0);
  std::copy(w.omega().begin(), w.omega().end(), coords.begin());
  return EmbeddedWeight(w, rs.family(), std::move(coords));
}

Coord pairing(std::span<const Coord> coords, const Coroot& h) {
  if (coords.size() != h.coeffs.size())
    throw Error(ErrorCode::RankMismatch, "weight of rank " + std::to_string(coords.size()) +
                                             " paired with a coroot of rank " + std::to_string(h.coeffs.size()));
  Coord s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * h.coeffs[i];
  return s;
}

Coord pairing(const EmbeddedWeight& w, const Coroot& h) { return pairing(w.coords(), h); }

std::vector<Coord> rho(const RootSystem& rs) { return std::vector<Coord>(rs.rank(), 1); }

}  // namespace weylorder
