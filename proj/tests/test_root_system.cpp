#include <doctest.h>

#include <algorithm>
#include <set>

#include "freudenthal.hpp"
#include "weylorder/error.hpp"
#include "weylorder/root_system.hpp"

using namespace weylorder;

namespace {

using CoeffSet = std::set<std::vector<int>>;

CoeffSet as_set(const std::vector<Coroot>& cs) {
  CoeffSet s;
  for (const auto& c : cs) s.insert(c.coeffs);
  return s;
}

CoeffSet as_set(const std::vector<std::vector<int>>& cs) { return CoeffSet(cs.begin(), cs.end()); }

std::size_t expected_count(Family f, std::size_t n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

DominantWeight dw(std::vector<Coord> c) { return DominantWeight(std::move(c)); }

const std::pair<Family, std::size_t> kTables[] = {
    {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
    {Family::C, 2}, {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4}, {Family::D, 5}};

}  // namespace

TEST_CASE("positive coroots match the Cartan-matrix oracle") {
  for (const auto& [f, n] : kTables) {
    CAPTURE(static_cast<char>(f));
    CAPTURE(n);
    const auto oracle_set = as_set(oracle::positive_coroots(static_cast<char>(f), static_cast<int>(n)));
    CHECK(oracle_set.size() == expected_count(f, n));
    const auto lib = positive_coroots(f, n);
    CHECK(lib.size() == oracle_set.size());
    CHECK(as_set(lib) == oracle_set);
    CHECK(as_set(generated_coroots(f, n)) == oracle_set);
  }
}

TEST_CASE("printed tables against the generated sets") {
  for (const auto& [f, n] : kTables) {
    const auto check = check_coroot_table(f, n);
    CAPTURE(static_cast<char>(f));
    CAPTURE(n);
    CHECK(check.validated_matches_generated);
    CHECK(check.generated_count == expected_count(f, n));
    switch (f) {
      case Family::A:
      case Family::C:
        CHECK(check.printed_matches_generated());
        CHECK(check.duplicates.empty());
        break;
      case Family::B:
        // The rows with j = n repeat entries listed earlier.
        CHECK(check.printed_matches_generated());
        CHECK(check.duplicates.size() == n);
        CHECK(check.printed_entries == check.printed_distinct + n);
        break;
      case Family::D: {
        std::vector<int> bad(n, 0);
        bad[n - 2] = bad[n - 1] = 1;
        CHECK(check.printed_not_generated == std::vector<std::vector<int>>{bad});
        CHECK(check.generated_not_printed.empty());
        break;
      }
    }
  }
}

TEST_CASE("small coroot lists") {
  CHECK(as_set(RootSystem(Family::C, 2).coroots()) == CoeffSet{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(as_set(RootSystem(Family::A, 2).coroots()) == CoeffSet{{1, 0}, {0, 1}, {1, 1}});
  CHECK(RootSystem(Family::B, 3).coroots().size() == 9);
}

TEST_CASE("rank floors and parsing") {
  CHECK_THROWS_AS(RootSystem(Family::B, 1), Error);
  CHECK_THROWS_AS(RootSystem(Family::C, 1), Error);
  CHECK_THROWS_AS(RootSystem(Family::D, 2), Error);
  CHECK(RootSystem::parse("D5") == RootSystem(Family::D, 5));
  CHECK(RootSystem::parse("c3").name() == "C3");
  CHECK_THROWS_AS(RootSystem::parse("E6"), Error);
  CHECK_THROWS_AS(RootSystem::parse("A"), Error);
  CHECK_THROWS_AS(RootSystem::parse("A0"), Error);
}

TEST_CASE("embedding into each family") {
  const auto lam = dw({2, 1});
  CHECK(std::ranges::equal(iota(lam, RootSystem(Family::C, 2)).coords(), std::vector<Coord>{2, 1}));
  CHECK(std::ranges::equal(iota(lam, RootSystem(Family::A, 2)).coords(), std::vector<Coord>{2, 1}));
  CHECK(std::ranges::equal(iota(lam, RootSystem(Family::B, 3)).coords(), std::vector<Coord>{2, 1, 0}));
  CHECK(std::ranges::equal(iota(lam, RootSystem(Family::D, 4)).coords(), std::vector<Coord>{2, 1, 0, 0}));
  CHECK_THROWS_AS(iota(lam, RootSystem(Family::C, 3)), Error);
  CHECK_THROWS_AS(iota(lam, RootSystem(Family::B, 2)), Error);
}

TEST_CASE("pairings") {
  const RootSystem c2(Family::C, 2);
  const auto w = iota(dw({2, 1}), c2);
  const Coroot h12 = make_coroot({1, 2});
  CHECK(pairing(w, h12) == 4);
  CHECK(pairing(w, make_coroot({1, 0})) == 2);
  CHECK(pairing(w, make_coroot({0, 1})) == 1);
  CHECK(h12.rho_pairing() == 3);
  CHECK(make_coroot({1, 1}).rho_pairing() == 2);
  CHECK(make_coroot({0, 1}).rho_pairing() == 1);

  const RootSystem b3(Family::B, 3);
  const auto v = iota(dw({2, 1}), b3);
  const auto idx = b3.find(std::vector<int>{1, 2, 1});
  REQUIRE(idx);
  CHECK(pairing(v, b3.coroots()[*idx]) == 4);
}

TEST_CASE("rho has all coordinates one") {
  CHECK(rho(RootSystem(Family::D, 4)) == std::vector<Coord>{1, 1, 1, 1});
}

TEST_CASE("pairing is linear") {
  for (const auto& [f, n] : kTables) {
    const RootSystem rs(f, n);
    for (Coord a = 0; a <= 2; ++a)
      for (Coord b = 0; b <= 2; ++b) {
        std::vector<Coord> x(n, 0), y(n, 0), s(n, 0);
        x[0] = a;
        y[n - 1] = b;
        for (std::size_t i = 0; i < n; ++i) s[i] = x[i] + y[i];
        for (const auto& h : rs.coroots()) CHECK(pairing(s, h) == pairing(x, h) + pairing(y, h));
      }
  }
}

TEST_CASE("interval coroots pair to window sums") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<RootSystem> systems{RootSystem(Family::A, n), RootSystem(Family::B, n + 1),
                                    RootSystem(Family::D, n + 2)};
    if (n >= 2) systems.emplace_back(Family::C, n);
    std::vector<Coord> c(n, 0);
    for (int trial = 0; trial < 30; ++trial) {
      for (std::size_t i = 0; i < n; ++i) c[i] = (trial * 7 + static_cast<int>(i) * 3) % 4;
      const auto lam = dw(c);
      for (const auto& rs : systems) {
        const auto e = iota(lam, rs);
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = i; j <= n; ++j) {
            std::vector<int> coeffs(rs.rank(), 0);
            for (std::size_t m = i; m <= j; ++m) coeffs[m - 1] = 1;
            const auto idx = rs.find(coeffs);
            REQUIRE(idx);
            Coord window = 0;
            for (std::size_t m = i; m <= j; ++m) window += c[m - 1];
            CHECK(pairing(e, rs.coroots()[*idx]) == window);
          }
        if (rs.family() == Family::B) {
          // 2h_i + ... + 2h_n + h_{n+1} pairs to twice the (i..n) window.
          for (std::size_t i = 1; i <= n; ++i) {
            std::vector<int> coeffs(rs.rank(), 0);
            for (std::size_t m = i; m <= n; ++m) coeffs[m - 1] = 2;
            coeffs[n] = 1;
            const auto idx = rs.find(coeffs);
            REQUIRE(idx);
            Coord window = 0;
            for (std::size_t m = i; m <= n; ++m) window += c[m - 1];
            CHECK(pairing(e, rs.coroots()[*idx]) == 2 * window);
          }
        }
      }
    }
  }
}

TEST_CASE("height-2 window partners") {
  for (const auto& [f, n] : kTables) {
    const RootSystem rs(f, n);
    for (const auto& h : rs.coroots()) {
      const bool has_two = std::ranges::find(h.coeffs, 2) != h.coeffs.end();
      CHECK(h.height2_window.has_value() == has_two);
      if (auto w = h.partner_window()) {
        std::vector<int> coeffs(n, 0);
        for (std::size_t m = w->first; m <= w->second; ++m) coeffs[m - 1] = 1;
        CHECK(rs.find(coeffs).has_value());
      }
    }
  }
}
