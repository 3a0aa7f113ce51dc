#ifndef WEYLORDER_ROOT_SYSTEM_HPP
#define WEYLORDER_ROOT_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylorder/weight.hpp"

namespace weylorder {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

/// A positive coroot as coefficients over the simple coroots h_1..h_rank.
struct Coroot {
  std::vector<int> coeffs;

  /// For coroots with a coefficient 2: (i, j) with i the first supported node
  /// and j the first node carrying coefficient 2 (1-based). When i < j the
  /// coroot is h_{i,j-1} + 2 h_{j..} + ... and pairs with the window coroot
  /// h_{i,j-1}.
  std::optional<std::pair<std::size_t, std::size_t>> height2_window;

  int rho_pairing() const noexcept;
  /// (i, j-1) when the coroot has a non-empty window partner.
  std::optional<std::pair<std::size_t, std::size_t>> partner_window() const;

  friend bool operator==(const Coroot& a, const Coroot& b) { return a.coeffs == b.coeffs; }
};

Coroot make_coroot(std::vector<int> coeffs);

/// Smallest rank accepted for a family: A1, B2, C2, D3.
std::size_t minimum_rank(Family family) noexcept;

/// Classical root system with its positive coroots.
class RootSystem {
 public:
  RootSystem(Family family, std::size_t rank);

  /// Parses "A2", "C3", "B4", "D5".
  static RootSystem parse(std::string_view name);
  /// Root system with an explicit coroot list; used for negative controls.
  static RootSystem with_coroots(Family family, std::size_t rank, std::vector<Coroot> coroots);

  Family family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Coroot>& coroots() const noexcept { return coroots_; }
  std::string name() const;

  /// Rank n of the lattice Z^n embedded by iota: rank for A/C, rank-1 for B,
  /// rank-2 for D.
  std::size_t base_rank() const noexcept;

  /// Index of the coroot with the given coefficients, if present.
  std::optional<std::size_t> find(std::span<const int> coeffs) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.coroots_ == b.coroots_;
  }

 private:
  RootSystem(Family family, std::size_t rank, std::vector<Coroot> coroots);

  Family family_;
  std::size_t rank_;
  std::vector<Coroot> coroots_;
};

/// Validated list of positive coroots (duplicates and non-coroots of the
/// printed tables removed), ordered as the printed lists.
std::vector<Coroot> positive_coroots(Family family, std::size_t rank);

/// Literal transcription of the printed classical coroot lists, including
/// repeated entries (B) and the entry h_{n-1}+h_n (D).
std::vector<std::vector<int>> printed_coroot_table(Family family, std::size_t rank);

/// Cartan matrix with entry [i][j] = alpha_j(h_i) (Bourbaki numbering).
std::vector<std::vector<int>> cartan_matrix(Family family, std::size_t rank);

/// Positive roots of a Cartan matrix in simple-root coordinates, generated by
/// root-string closure from the simple roots. Sorted by height, then lex.
std::vector<std::vector<int>> positive_roots_from_cartan(const std::vector<std::vector<int>>& cartan);

/// Positive coroots generated from the transposed Cartan matrix.
std::vector<std::vector<int>> generated_coroots(Family family, std::size_t rank);

struct CorootTableCheck {
  Family family;
  std::size_t rank;
  std::size_t printed_entries;
  std::size_t printed_distinct;
  std::size_t generated_count;
  std::size_t expected_count;
  std::vector<std::vector<int>> duplicates;          // repeated in the printed list
  std::vector<std::vector<int>> printed_not_generated;
  std::vector<std::vector<int>> generated_not_printed;
  bool validated_matches_generated;                   // positive_coroots() == generated set

  bool printed_matches_generated() const noexcept {
    return printed_not_generated.empty() && generated_not_printed.empty();
  }
};

CorootTableCheck check_coroot_table(Family family, std::size_t rank);

/// A weight of the lattice Z^n placed in the dominant weights of a root
/// system: omega coordinates copied, spin nodes zero.
class EmbeddedWeight {
 public:
  EmbeddedWeight(DominantWeight base, Family family, std::vector<Coord> coords)
      : base_(std::move(base)), family_(family), coords_(std::move(coords)) {}

  const DominantWeight& base() const noexcept { return base_; }
  Family family() const noexcept { return family_; }
  std::size_t target_rank() const noexcept { return coords_.size(); }
  std::span<const Coord> coords() const noexcept { return coords_; }

 private:
  DominantWeight base_;
  Family family_;
  std::vector<Coord> coords_;
};

EmbeddedWeight iota(const DominantWeight& w, const RootSystem& rs);

/// lambda(h) for a full-rank coordinate vector.
Coord pairing(std::span<const Coord> coords, const Coroot& h);
Coord pairing(const EmbeddedWeight& w, const Coroot& h);

/// rho has every omega coordinate equal to 1.
std::vector<Coord> rho(const RootSystem& rs);

}  // namespace weylorder

#endif  // WEYLORDER_ROOT_SYSTEM_HPP
