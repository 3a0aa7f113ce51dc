#ifndef WEYLORDER_WEIGHT_HPP
#define WEYLORDER_WEIGHT_HPP

// Integer weight lattice Z^n with the fundamental-weight (omega) basis as the
// stored coordinates and the epsilon basis as a derived view:
//
//   b_i = a_i + a_{i+1} + ... + a_n      (epsilon from omega)
//   a_i = b_i - b_{i+1},  b_{n+1} := 0   (omega from epsilon)
//
// The symmetric group acts by permuting epsilon coordinates. Two conventions
// are supported: the plain S_n action on (b_1..b_n), and the S_{n+1} action on
// the padded vector (b_1..b_n, 0) read modulo the all-ones vector, which is
// the Weyl group of sl_{n+1} acting on its weight lattice.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weylorder {

using Coord = std::int64_t;

class Weight {
 public:
  explicit Weight(std::vector<Coord> omega);

  static Weight zero(std::size_t rank);
  /// omega_i for 1 <= i <= rank.
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return omega_.size(); }
  std::span<const Coord> omega() const noexcept { return omega_; }
  Coord operator[](std::size_t idx) const { return omega_[idx]; }

  std::vector<Coord> epsilon() const;
  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;
  /// Sum of omega coordinates.
  Coord level() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Coord scalar, Weight w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<Coord> omega_;
};

/// A weight whose omega coordinates are all non-negative.
class DominantWeight {
 public:
  explicit DominantWeight(Weight w);
  explicit DominantWeight(std::vector<Coord> omega) : DominantWeight(Weight(std::move(omega))) {}

  static DominantWeight zero(std::size_t rank) { return DominantWeight(Weight::zero(rank)); }

  const Weight& weight() const noexcept { return weight_; }
  operator const Weight&() const noexcept { return weight_; }  // NOLINT(google-explicit-constructor)

  std::size_t rank() const noexcept { return weight_.rank(); }
  std::span<const Coord> omega() const noexcept { return weight_.omega(); }
  Coord operator[](std::size_t idx) const { return weight_[idx]; }
  std::vector<Coord> epsilon() const { return weight_.epsilon(); }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  Weight weight_;
};

/// Bijection of {1..m}, stored 0-based. `(*this)(j)` is the image of letter j.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t degree);
  /// The transposition s_{i,j} of letters i and j (1-based).
  static Permutation transposition(std::size_t degree, std::size_t i, std::size_t j);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t j) const { return images_[j]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept;

  /// Composition: (a * b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation with 1-based letters, e.g. "id", "s2,3", "(1 3 2)".
  std::string to_string() const;

 private:
  std::vector<std::size_t> images_;
};

std::vector<Coord> omega_to_epsilon(const Weight& w);
Weight epsilon_to_omega(std::span<const Coord> epsilon);

/// Permutes epsilon coordinates: s(e_j) = e_{s(j)}. A permutation of degree
/// rank acts on (b_1..b_n); degree rank+1 acts on the padded vector and the
/// result is normalized by subtracting its last entry.
Weight act(const Permutation& perm, const Weight& w);

struct DominantRepresentative {
  DominantWeight weight;
  /// act(sorting, w) == weight (extended S_{n+1} convention).
  Permutation sorting;
};

/// Unique dominant weight in the S_{n+1} orbit of w, with a permutation that
/// reaches it. Ties are broken stably, so dominant input maps via identity.
DominantRepresentative dominant_representative(const Weight& w);

/// Elements of S_{n+1} (as permutations of the padded epsilon vector) whose
/// action sends w to a dominant weight. Never empty.
std::vector<Permutation> dominating_permutations(const Weight& w);

/// "2,1" style rendering of omega coordinates.
std::string to_wire(const Weight& w);

}  // namespace weylorder

#endif  // WEYLORDER_WEIGHT_HPP
