#include "weylorder/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylorder/error.hpp"

namespace weylorder {

Weight::Weight(std::vector<Coord> omega) : omega_(std::move(omega)) {
  if (omega_.empty()) throw Error(ErrorCode::InvalidArgument, "weight rank must be at least 1");
}

Weight Weight::zero(std::size_t rank) { return Weight(std::vector<Coord>(rank, 0)); }

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank)
    throw Error(ErrorCode::InvalidArgument,
                "fundamental weight index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  std::vector<Coord> v(rank, 0);
  v[i - 1] = 1;
  return Weight(std::move(v));
}

std::vector<Coord> Weight::epsilon() const { return omega_to_epsilon(*this); }

bool Weight::is_dominant() const noexcept {
  return std::all_of(omega_.begin(), omega_.end(), [](Coord a) { return a >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(omega_.begin(), omega_.end(), [](Coord a) { return a == 0; });
}

Coord Weight::level() const noexcept { return std::accumulate(omega_.begin(), omega_.end(), Coord{0}); }

Weight& Weight::operator+=(const Weight& other) {
  if (rank() != other.rank())
    throw Error(ErrorCode::RankMismatch, "cannot add weights of rank " + std::to_string(rank()) + " and " +
                                             std::to_string(other.rank()));
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] += other.omega_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (rank() != other.rank())
    throw Error(ErrorCode::RankMismatch, "cannot subtract weights of rank " + std::to_string(rank()) +
                                             " and " + std::to_string(other.rank()));
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] -= other.omega_[i];
  return *this;
}

Weight operator*(Coord scalar, Weight w) {
  for (auto& a : w.omega_) a *= scalar;
  return w;
}

DominantWeight::DominantWeight(Weight w) : weight_(std::move(w)) {
  if (!weight_.is_dominant()) throw Error(ErrorCode::NotDominant, "weight (" + to_wire(weight_) + ") is not dominant");
}

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorCode::InvalidArgument, "permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidArgument, "permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> v(degree);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t degree, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > degree || j > degree)
    throw Error(ErrorCode::InvalidArgument, "transposition letters outside 1.." + std::to_string(degree));
  auto p = identity(degree);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != j) return false;
  return true;
}

bool Permutation::is_involution() const noexcept {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[images_[j]] != j) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::InvalidArgument, "cannot compose permutations of different degree");
  std::vector<std::size_t> v(a.degree());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a(b(j));
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  if (is_identity()) return "id";
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x + 1);
    }
    cycles.push_back(std::move(cycle));
  }
  std::ostringstream os;
  if (cycles.size() == 1 && cycles[0].size() == 2) {
    os << 's' << cycles[0][0] << ',' << cycles[0][1];
    return os.str();
  }
  for (const auto& cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

// --- basis changes and the symmetric-group action --------------------------

std::vector<Coord> omega_to_epsilon(const Weight& w) {
  const auto a = w.omega();
  std::vector<Coord> b(a.size());
  Coord acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc += a[i];
    b[i] = acc;
  }
  return b;
}

Weight epsilon_to_omega(std::span<const Coord> epsilon) {
  std::vector<Coord> a(epsilon.size());
  for (std::size_t i = 0; i < epsilon.size(); ++i)
    a[i] = epsilon[i] - (i + 1 < epsilon.size() ? epsilon[i + 1] : 0);
  return Weight(std::move(a));
}

namespace {

std::vector<Coord> padded_epsilon(const Weight& w) {
  auto b = omega_to_epsilon(w);
  b.push_back(0);
  return b;
}

// Reads a padded epsilon vector modulo the all-ones vector.
Weight from_padded(std::vector<Coord> padded) {
  const Coord shift = padded.back();
  padded.pop_back();
  for (auto& x : padded) x -= shift;
  return epsilon_to_omega(padded);
}

std::vector<Coord> permute(const Permutation& perm, std::span<const Coord> v) {
  std::vector<Coord> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[perm(j)] = v[j];
  return out;
}

}  // namespace

Weight act(const Permutation& perm, const Weight& w) {
  const std::size_t n = w.rank();
  if (perm.degree() == n) return epsilon_to_omega(permute(perm, omega_to_epsilon(w)));
  if (perm.degree() == n + 1) return from_padded(permute(perm, padded_epsilon(w)));
  throw Error(ErrorCode::InvalidArgument, "permutation of degree " + std::to_string(perm.degree()) +
                                              " cannot act on a rank " + std::to_string(n) + " weight");
}

DominantRepresentative dominant_representative(const Weight& w) {
  const auto padded = padded_epsilon(w);
  std::vector<std::size_t> order(padded.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return padded[x] > padded[y]; });
  // order[r] is the letter moved to position r.
  std::vector<std::size_t> images(padded.size());
  for (std::size_t r = 0; r < order.size(); ++r) images[order[r]] = r;
  Permutation sorting(std::move(images));
  return {DominantWeight(act(sorting, w)), std::move(sorting)};
}

std::vector<Permutation> dominating_permutations(const Weight& w) {
  const auto padded = padded_epsilon(w);
  const std::size_t m = padded.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return padded[x] > padded[y]; });

  // Blocks of equal entries may be arranged freely among their target slots.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < m;) {
    std::size_t e = s + 1;
    while (e < m && padded[order[e]] == padded[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }

  std::vector<Permutation> out;
  auto current = order;
  auto emit = [&] {
    std::vector<std::size_t> images(m);
    for (std::size_t r = 0; r < m; ++r) images[current[r]] = r;
    out.emplace_back(std::move(images));
  };
  // Odometer over the per-block arrangements.
  for (auto& [s, e] : blocks) std::sort(current.begin() + s, current.begin() + e);
  while (true) {
    emit();
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [s, e] = blocks[b];
      if (std::next_permutation(current.begin() + s, current.begin() + e)) break;
    }
    if (b == blocks.size()) break;
  }
  return out;
}

std::string to_wire(const Weight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

}  // namespace weylorder
