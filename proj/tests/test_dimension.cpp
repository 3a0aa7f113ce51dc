#include <doctest.h>

#include <algorithm>
#include <functional>

#include "freudenthal.hpp"
#include "weylorder/dimension.hpp"
#include "weylorder/error.hpp"
#include "weylorder/serialize.hpp"
#include "weylorder/sweep.hpp"

using namespace weylorder;

namespace {

WeightTuple T(const char* s) { return parse_tuple_spec(s); }
DominantWeight L(const char* s) { return parse_dominant_spec(s); }

std::vector<DominantWeight> box(std::size_t n, Coord m) {
  std::vector<DominantWeight> out;
  std::vector<Coord> c(n, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = n;
    while (i-- > 0) {
      if (++c[i] <= m) break;
      c[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

void all_below(std::vector<Coord>& c, std::size_t pos, Coord left, const std::function<void()>& f) {
  if (pos == c.size()) {
    f();
    return;
  }
  for (Coord x = 0; x <= left; ++x) {
    c[pos] = x;
    all_below(c, pos + 1, left - x, f);
  }
  c[pos] = 0;
}

}  // namespace

TEST_CASE("Weyl dimension against the Freudenthal oracle") {
  const std::pair<Family, std::size_t> systems[] = {{Family::A, 2}, {Family::A, 3}, {Family::C, 2},
                                                    {Family::B, 3}, {Family::C, 3}, {Family::D, 4}};
  for (const auto& [f, n] : systems) {
    const RootSystem rs(f, n);
    const auto g = oracle::make_algebra(static_cast<char>(f), static_cast<int>(n));
    std::vector<Coord> c(n, 0);
    all_below(c, 0, 3, [&] {
      CAPTURE(rs.name());
      CAPTURE(to_wire(Weight(c)));
      const std::vector<int> lam(c.begin(), c.end());
      CHECK(weyl_dim(rs, c) == BigInt(oracle::dimension(g, lam)));
    });
  }
}

TEST_CASE("dimension examples") {
  const RootSystem c2(Family::C, 2);
  CHECK(weyl_dim(c2, std::vector<Coord>{0, 0}) == 1);
  CHECK(weyl_dim(RootSystem(Family::A, 2), std::vector<Coord>{1, 0}) == 3);
  CHECK(weyl_dim(c2, std::vector<Coord>{0, 1}) == 5);
  CHECK(weyl_dim(c2, std::vector<Coord>{2, 1}) == 35);
  CHECK(tensor_dim(c2, T("0,1/0,1")) == 25);
  CHECK(tensor_dim(c2, T("2,1")) == 35);
  CHECK(tensor_dim(RootSystem(Family::B, 3), T("1,0/0,1")) == 7 * 21);
  CHECK(weyl_dim(RootSystem(Family::A, 1), std::vector<Coord>{3}) == 4);
  CHECK_THROWS_AS(weyl_dim(c2, std::vector<Coord>{1}), Error);
  CHECK_THROWS_AS(weyl_dim(c2, std::vector<Coord>{-1, 0}), Error);
  CHECK(bracket(std::vector<Coord>{2, 1}, make_coroot({1, 2})) == 7);
}

TEST_CASE("a missing coroot breaks integrality somewhere") {
  const auto bad = corrupted(RootSystem(Family::C, 2));
  CHECK(bad.coroots().size() == 3);
  bool non_integral = false;
  for (const auto& lam : box(2, 3)) {
    const auto c = lam.weight().omega();
    non_integral = non_integral || !weyl_dim_if_integral(bad, std::vector<Coord>(c.begin(), c.end()));
  }
  CHECK(non_integral);
}

TEST_CASE("monotonicity on the rank 2 chain") {
  const auto r = verify_monotone_k2(L("2,1"), RootSystem(Family::C, 2));
  CHECK(r.ok());
  REQUIRE(r.classes.size() == 3);
  CHECK(r.class_dims == std::vector<BigInt>{35, 50, 64});
  CHECK(r.pairs.size() == 3);
  for (const auto& p : r.pairs) {
    CHECK(p.status == CheckStatus::HoldsStrict);
    CHECK(p.lower_dim < p.upper_dim);
  }
  CHECK(to_string(CheckStatus::Violation) == "VIOLATION");

  const auto z = verify_monotone_k2(L("0,0"), RootSystem(Family::C, 2));
  CHECK(z.ok());
  CHECK(z.pairs.empty());
  CHECK_THROWS_AS(verify_monotone_k2(L("1,1,1"), RootSystem(Family::C, 2)), Error);
}

TEST_CASE("monotonicity over small boxes") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& rs : compatible_root_systems(n, {Family::A, Family::B, Family::C, Family::D}))
      for (const auto& lam : box(n, n == 3 ? 2 : 3)) {
        CAPTURE(rs.name());
        CAPTURE(to_wire(lam.weight()));
        const auto r = verify_monotone_k2(lam, rs);
        CHECK(r.ok());
      }
}

TEST_CASE("coroot ledger for the rank 2 chain") {
  const auto r = verify_coroot_inequalities_k2(L("2,1"), RootSystem(Family::C, 2));
  CHECK(r.ok());
  REQUIRE(!r.coroot_ledger.empty());
  bool grouped = false;
  for (const auto& e : r.coroot_ledger) {
    CHECK(e.status != CheckStatus::Violation);
    CHECK(e.lhs <= e.rhs);
    grouped = grouped || e.partner.has_value();
  }
  // h_1 + 2h_2 is paired with h_1.
  CHECK(grouped);
}

TEST_CASE("grouped height-2 coroots") {
  const RootSystem c3(Family::C, 3);
  const auto r = verify_coroot_inequalities_k2(L("1,1,1"), c3);
  CHECK(r.ok());
  std::size_t grouped = 0;
  for (const auto& e : r.coroot_ledger) {
    if (!e.partner) continue;
    ++grouped;
    const auto& h = c3.coroots()[e.coroot];
    const auto w = h.partner_window();
    REQUIRE(w);
    std::vector<int> coeffs(3, 0);
    for (std::size_t m = w->first; m <= w->second; ++m) coeffs[m - 1] = 1;
    CHECK(c3.coroots()[*e.partner].coeffs == coeffs);
  }
  CHECK(grouped > 0);
}

TEST_CASE("coroot ledger over small boxes") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& rs : compatible_root_systems(n, {Family::A, Family::B, Family::C, Family::D}))
      for (const auto& lam : box(n, 2)) {
        CAPTURE(rs.name());
        CAPTURE(to_wire(lam.weight()));
        CHECK(verify_coroot_inequalities_k2(lam, rs).ok());
      }
}

TEST_CASE("maximal element has the largest dimension") {
  const auto a1 = verify_max_dim(L("3"), 3, RootSystem(Family::A, 1));
  CHECK(a1.ok());
  BigInt top = 0;
  for (const auto& d : a1.class_dims) top = std::max(top, d);
  CHECK(top == 8);
  CHECK(tensor_dim(RootSystem(Family::A, 1), T("3/0/0")) == 4);

  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& rs : compatible_root_systems(n, {Family::A, Family::B, Family::C, Family::D}))
      for (const auto& lam : box(n, 3))
        for (std::size_t k = 1; k <= 3; ++k) {
          CAPTURE(rs.name());
          CAPTURE(to_wire(lam.weight()));
          CAPTURE(k);
          CHECK(verify_max_dim(lam, k, rs).ok());
        }
}

TEST_CASE("negative control with a dropped coroot") {
  std::size_t failures = 0;
  for (const auto& lam : box(2, 3)) {
    for (const auto& rs : compatible_root_systems(2, {Family::C, Family::B}, true)) {
      failures += !verify_monotone_k2(lam, rs).ok();
      failures += !verify_coroot_inequalities_k2(lam, rs).ok();
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("four-factor inequality premises") {
  CHECK(lemma_4tuple_holds(1, 4, 2, 4) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(1, 5, 3, 4) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(1, 4, 3, 4) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(1, 5, 2, 5) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(1, 6, 2, 5) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(0, 4, 2, 5) == LemmaVerdict::NotApplicable);
  CHECK(lemma_4tuple_holds(1, 4, 4, 5) == LemmaVerdict::HoldsStrict);
  CHECK(to_string(LemmaVerdict::NotApplicable) == "not_applicable");
}

TEST_CASE("four-factor inequality never fails") {
  std::size_t applicable = 0;
  for (long long a = 1; a <= 40; ++a)
    for (long long b = a + 1; b <= 40; ++b)
      for (long long c = a + 1; c <= 40; ++c)
        for (long long d = std::max(b, c) + 1; d <= 40; ++d) {
          const auto v = lemma_4tuple_holds(a, b, c, d);
          if (b - a < d - c + 2) {
            CHECK(v == LemmaVerdict::NotApplicable);
            continue;
          }
          ++applicable;
          CHECK(v != LemmaVerdict::Violated);
          CHECK(v != LemmaVerdict::NotApplicable);
          const bool strict = a * b * c * d < (a + 1) * (b - 1) * (c - 1) * (d + 1);
          CHECK((v == LemmaVerdict::HoldsStrict) == strict);
        }
  CHECK(applicable > 0);
}

TEST_CASE("two-factor step") {
  // (x+1)(y-1) >= xy when x < y, equality iff x = y - 1.
  for (long long x = 0; x <= 30; ++x)
    for (long long y = x + 1; y <= 31; ++y) {
      CHECK((x + 1) * (y - 1) >= x * y);
      CHECK(((x + 1) * (y - 1) == x * y) == (x == y - 1));
    }
}
