#include "weylorder/dimension.hpp"

#include <algorithm>

#include "weylorder/error.hpp"

namespace weylorder {

namespace {

void check_full_rank(const RootSystem& rs, std::span<const Coord> coords) {
  if (coords.size() != rs.rank())
    throw Error(ErrorCode::RankMismatch, "weight of rank " + std::to_string(coords.size()) + " given to " + rs.name());
  for (Coord c : coords)
    if (c < 0) throw Error(ErrorCode::NotDominant, "weight is not dominant for " + rs.name());
}

BigInt numerator(const RootSystem& rs, std::span<const Coord> coords) {
  BigInt num = 1;
  for (const auto& h : rs.coroots()) num *= bracket(coords, h);
  return num;
}

BigInt denominator(const RootSystem& rs) {
  BigInt den = 1;
  for (const auto& h : rs.coroots()) den *= h.rho_pairing();
  return den;
}

// Everything the checks need about one ordered k = 2 tuple.
struct Evaluated {
  std::vector<std::vector<Coord>> brackets;  // [part][coroot]
  BigInt numerator = 1;                      // prod over parts and coroots
  std::optional<BigInt> dim;                 // nullopt when the quotient is not integral
};

Evaluated evaluate(const WeightTuple& t, const RootSystem& rs, const BigInt& den) {
  Evaluated e;
  BigInt den_power = 1;
  for (const auto& part : t.parts()) {
    auto w = iota(part, rs);
    std::vector<Coord> row;
    row.reserve(rs.coroots().size());
    for (const auto& h : rs.coroots()) {
      row.push_back(bracket(w, h));
      e.numerator *= row.back();
    }
    e.brackets.push_back(std::move(row));
    den_power *= den;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(e.numerator, den_power, q, r);
  if (r == 0) e.dim = q;
  return e;
}

CheckStatus status_of(const BigInt& lhs, const BigInt& rhs) {
  if (lhs < rhs) return CheckStatus::HoldsStrict;
  if (lhs == rhs) return CheckStatus::HoldsEqual;
  return CheckStatus::Violation;
}

std::string pair_label(const TuplePoset& p, std::size_t a, std::size_t b) {
  return "(" + to_wire(p.representative(a)) + ") vs (" + to_wire(p.representative(b)) + ")";
}

DimensionReport start_report(const TuplePoset& p, const RootSystem& rs, const BigInt& den,
                             std::vector<Evaluated>& evals) {
  DimensionReport report{rs.name(), p.lambda(), p.k(), p.representatives(), {}, {}, {}, {}};
  evals.reserve(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    evals.push_back(evaluate(p.representative(c), rs, den));
    if (evals.back().dim) {
      report.class_dims.push_back(*evals.back().dim);
    } else {
      report.class_dims.push_back(-1);
      report.violations.push_back("non-integral dimension for (" + to_wire(p.representative(c)) + ") under " +
                                  rs.name());
    }
  }
  return report;
}

void require_k2(const TuplePoset& p) {
  if (p.k() != 2) throw Error(ErrorCode::InvalidArgument, "this check is defined for k = 2 only");
}

}  // namespace

Coord bracket(std::span<const Coord> coords, const Coroot& h) {
  if (coords.size() != h.coeffs.size()) throw Error(ErrorCode::RankMismatch, "coroot and weight ranks differ");
  Coord s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += (coords[i] + 1) * h.coeffs[i];
  return s;
}

Coord bracket(const EmbeddedWeight& w, const Coroot& h) { return bracket(w.coords(), h); }

BigInt weyl_dim(const RootSystem& rs, std::span<const Coord> coords) {
  auto d = weyl_dim_if_integral(rs, coords);
  if (!d) throw Error(ErrorCode::Internal, "Weyl quotient is not an integer for " + rs.name());
  return *d;
}

BigInt weyl_dim(const RootSystem& rs, const EmbeddedWeight& w) { return weyl_dim(rs, w.coords()); }

std::optional<BigInt> weyl_dim_if_integral(const RootSystem& rs, std::span<const Coord> coords) {
  check_full_rank(rs, coords);
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator(rs, coords), denominator(rs), q, r);
  if (r != 0) return std::nullopt;
  return q;
}

BigInt tensor_dim(const RootSystem& rs, const WeightTuple& t) {
  BigInt d = 1;
  for (const auto& part : t.parts()) d *= weyl_dim(rs, iota(part, rs));
  return d;
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::HoldsStrict: return "holds_strict";
    case CheckStatus::HoldsEqual: return "holds_equal";
    case CheckStatus::Violation: return "VIOLATION";
  }
  return "VIOLATION";
}

DimensionReport verify_monotone_k2(const TuplePoset& p, const RootSystem& rs) {
  require_k2(p);
  const BigInt den = denominator(rs);
  std::vector<Evaluated> evals;
  DimensionReport report = start_report(p, rs, den, evals);

  // Members of one class share the dimension.
  for (std::size_t c = 0; c < p.size(); ++c) {
    for (const auto& m : p.members(c)) {
      if (evaluate(m, rs, den).numerator != evals[c].numerator)
        report.violations.push_back("class (" + to_wire(p.representative(c)) + ") member (" + to_wire(m) +
                                    ") has a different dimension under " + rs.name());
    }
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b || p.verdict(a, b) != OrderVerdict::StrictlyLess) continue;
      // Denominators agree, so numerators order the dimensions.
      CheckStatus st = evals[a].numerator < evals[b].numerator ? CheckStatus::HoldsStrict : CheckStatus::Violation;
      report.pairs.push_back({a, b, OrderVerdict::StrictlyLess, report.class_dims[a], report.class_dims[b], st});
      if (st == CheckStatus::Violation)
        report.violations.push_back("monotonicity fails for " + pair_label(p, a, b) + " under " + rs.name());
    }
  }
  return report;
}

DimensionReport verify_monotone_k2(const DominantWeight& lambda, const RootSystem& rs, const PosetOptions& options) {
  return verify_monotone_k2(build_poset(lambda, 2, options), rs);
}

DimensionReport verify_coroot_inequalities_k2(const TuplePoset& p, const RootSystem& rs) {
  require_k2(p);
  const BigInt den = denominator(rs);
  std::vector<Evaluated> evals;
  DimensionReport report = start_report(p, rs, den, evals);
  const auto& coroots = rs.coroots();

  std::vector<std::optional<std::size_t>> partner(coroots.size());
  for (std::size_t h = 0; h < coroots.size(); ++h) {
    auto w = coroots[h].partner_window();
    if (!w) continue;
    std::vector<int> coeffs(rs.rank(), 0);
    for (std::size_t m = w->first; m <= w->second; ++m) coeffs[m - 1] = 1;
    partner[h] = rs.find(coeffs);
  }

  auto factor = [](const Evaluated& e, std::size_t h) { return BigInt(e.brackets[0][h]) * e.brackets[1][h]; };

  BigInt den_sq = den * den;
  for (std::size_t c = 0; c < p.size(); ++c) {
    BigInt prod = 1;
    for (std::size_t h = 0; h < coroots.size(); ++h) prod *= factor(evals[c], h);
    if (prod != evals[c].numerator || (evals[c].dim && *evals[c].dim * den_sq != prod))
      report.violations.push_back("coroot ledger does not multiply out to the tensor dimension for (" +
                                  to_wire(p.representative(c)) + ") under " + rs.name());
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      OrderVerdict v = p.verdict(a, b);
      if (!is_below_or_equal(v)) continue;
      for (std::size_t h = 0; h < coroots.size(); ++h) {
        BigInt lhs = factor(evals[a], h);
        BigInt rhs = factor(evals[b], h);
        if (partner[h]) {
          lhs *= factor(evals[a], *partner[h]);
          rhs *= factor(evals[b], *partner[h]);
        }
        CheckStatus st = status_of(lhs, rhs);
        report.coroot_ledger.push_back({a, b, h, partner[h], lhs, rhs, st});
        if (st == CheckStatus::Violation)
          report.violations.push_back("coroot inequality fails at coroot #" + std::to_string(h + 1) + " for " +
                                      pair_label(p, a, b) + " under " + rs.name());
      }
    }
  }
  return report;
}

DimensionReport verify_coroot_inequalities_k2(const DominantWeight& lambda, const RootSystem& rs,
                                              const PosetOptions& options) {
  return verify_coroot_inequalities_k2(build_poset(lambda, 2, options), rs);
}

DimensionReport verify_max_dim(const TuplePoset& p, const RootSystem& rs) {
  const BigInt den = denominator(rs);
  std::vector<Evaluated> evals;
  DimensionReport report = start_report(p, rs, den, evals);

  const WeightTuple top = maximal_element(p.lambda(), p.k());
  const WeightTuple top_canon = canonical_form(top);
  const Evaluated top_eval = evaluate(top, rs, den);
  auto top_class = p.class_of(top);
  if (!top_class) throw Error(ErrorCode::Internal, "maximal element is missing from the poset");

  for (std::size_t c = 0; c < p.size(); ++c) {
    for (const auto& m : p.members(c)) {
      const bool in_orbit = canonical_form(m) == top_canon;
      const Evaluated e = evaluate(m, rs, den);
      if (e.numerator > top_eval.numerator) {
        report.violations.push_back("(" + to_wire(m) + ") exceeds the maximal element's dimension under " + rs.name());
      } else if ((e.numerator == top_eval.numerator) != in_orbit) {
        report.violations.push_back("(" + to_wire(m) + ") " + (in_orbit ? "is below" : "ties") +
                                    " the maximal element's dimension under " + rs.name());
      }
    }
    if (c == *top_class) continue;
    CheckStatus st = evals[c].numerator < top_eval.numerator ? CheckStatus::HoldsStrict : CheckStatus::Violation;
    report.pairs.push_back({c, *top_class, p.verdict(c, *top_class), report.class_dims[c],
                            report.class_dims[*top_class], st});
  }
  return report;
}

DimensionReport verify_max_dim(const DominantWeight& lambda, std::size_t k, const RootSystem& rs,
                               const PosetOptions& options) {
  return verify_max_dim(build_poset(lambda, k, options), rs);
}

std::string_view to_string(LemmaVerdict v) noexcept {
  switch (v) {
    case LemmaVerdict::HoldsStrict: return "holds_strict";
    case LemmaVerdict::HoldsEqual: return "holds_equal";
    case LemmaVerdict::Violated: return "VIOLATION";
    case LemmaVerdict::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

LemmaVerdict lemma_4tuple_holds(long long a, long long b, long long c, long long d) {
  if (a <= 0 || b <= 0 || c <= 0 || d <= 0) return LemmaVerdict::NotApplicable;
  if (!(a < b && b < d && a < c && c < d && b - a >= d - c + 2)) return LemmaVerdict::NotApplicable;
  BigInt lhs = BigInt(a) * b * c * d;
  BigInt rhs = BigInt(a + 1) * (b - 1) * (c - 1) * (d + 1);
  if (lhs < rhs) return LemmaVerdict::HoldsStrict;
  if (lhs == rhs) return LemmaVerdict::HoldsEqual;
  return LemmaVerdict::Violated;
}

}  // namespace weylorder
