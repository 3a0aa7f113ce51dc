#include "weylorder/serialize.hpp"

#include <charconv>
#include <sstream>

#include "weylorder/error.hpp"

namespace weylorder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Json coords_json(std::span<const Coord> v) { return Json(std::vector<Coord>(v.begin(), v.end())); }

std::string big(const BigInt& v) { return v.str(); }

const CoverEdge* find_cover(const std::vector<CoverEdge>* covers, std::size_t lo, std::size_t hi) {
  if (!covers) return nullptr;
  for (const auto& e : *covers)
    if (e.lower == lo && e.upper == hi) return &e;
  return nullptr;
}

}  // namespace

Weight parse_weight_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty weight");
  std::vector<Coord> coords;
  for (auto field : split(text, ',')) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    Coord v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw Error(ErrorCode::Parse, "cannot read '" + std::string(field) + "' in weight '" + std::string(text) + "'");
    coords.push_back(v);
  }
  return Weight(std::move(coords));
}

DominantWeight parse_dominant_spec(std::string_view text) { return DominantWeight(parse_weight_spec(text)); }

WeightTuple parse_tuple_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty tuple");
  std::vector<DominantWeight> parts;
  for (auto field : split(text, '/')) parts.push_back(parse_dominant_spec(field));
  for (const auto& part : parts)
    if (part.rank() != parts.front().rank())
      throw Error(ErrorCode::RankMismatch, "tuple parts of different rank in '" + std::string(text) + "'");
  return WeightTuple(std::move(parts));
}

Json to_json(const Weight& w) { return Json{{"rank", w.rank()}, {"omega", coords_json(w.omega())}}; }

Json to_json(const WeightTuple& t) {
  Json parts = Json::array();
  for (const auto& part : t.parts()) parts.push_back(coords_json(part.omega()));
  return Json{{"k", t.k()}, {"parts", std::move(parts)}};
}

Json to_json(const CoverEdge& e, const TuplePoset& p) {
  Json j{{"lower", e.lower},
         {"upper", e.upper},
         {"lower_tuple", to_wire(p.representative(e.lower))},
         {"upper_tuple", to_wire(p.representative(e.upper))},
         {"kind", std::string(to_string(e.kind))}};
  if (e.witness) {
    Json w{{"sigma", e.witness->sigma.to_string()}, {"upper_swapped", e.witness->upper_swapped}};
    if (e.witness->omega_index) {
      w["omega_index"] = *e.witness->omega_index;
      w["inverse_formula"] = e.witness->inverse_formula_matches;
      w["direct_formula"] = e.witness->direct_formula_matches;
    }
    if (!e.witness->selection.empty()) w["selection"] = e.witness->selection;
    j["witness"] = std::move(w);
  }
  return j;
}

Json poset_to_json(const TuplePoset& p, const std::vector<CoverEdge>* covers) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < p.size(); ++c) {
    classes.push_back(Json{{"index", c},
                           {"representative", to_json(p.representative(c))["parts"]},
                           {"wire", to_wire(p.representative(c))},
                           {"members", p.members(c).size()}});
  }
  Json hasse = Json::array();
  for (const auto& [lo, hi] : p.hasse_edges()) {
    Json edge = Json::array({lo, hi});
    if (const auto* e = find_cover(covers, lo, hi)) edge.push_back(std::string(to_string(e->kind)));
    hasse.push_back(std::move(edge));
  }
  Json minimal = p.minimal_classes();
  Json maximal = p.maximal_classes();
  return Json{{"lambda", to_json(p.lambda().weight())},
              {"k", p.k()},
              {"classes", std::move(classes)},
              {"hasse", std::move(hasse)},
              {"minimal", std::move(minimal)},
              {"maximal", std::move(maximal)}};
}

std::string poset_to_dot(const TuplePoset& p, const std::vector<CoverEdge>* covers) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < p.size(); ++c) os << "  c" << c << " [label=\"" << to_wire(p.representative(c)) << "\"];\n";
  for (const auto& [lo, hi] : p.hasse_edges()) {
    os << "  c" << lo << " -> c" << hi;
    if (const auto* e = find_cover(covers, lo, hi)) {
      if (e->kind == CoverKind::TypeI)
        os << " [label=\"I\"]";
      else if (e->kind == CoverKind::TypeII)
        os << " [label=\"II\", style=dashed]";
      else
        os << " [style=dotted]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Json report_to_json(const DimensionReport& r) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    classes.push_back(Json{{"index", c}, {"tuple", to_wire(r.classes[c])}, {"dim", big(r.class_dims[c])}});
  Json pairs = Json::array();
  for (const auto& pc : r.pairs) {
    pairs.push_back(Json{{"lower", pc.lower},
                         {"upper", pc.upper},
                         {"verdict", std::string(to_string(pc.verdict))},
                         {"lower_dim", big(pc.lower_dim)},
                         {"upper_dim", big(pc.upper_dim)},
                         {"status", std::string(to_string(pc.status))}});
  }
  Json ledger = Json::array();
  for (const auto& cc : r.coroot_ledger) {
    Json row{{"lower", cc.lower}, {"upper", cc.upper}, {"coroot", cc.coroot}};
    row["partner"] = cc.partner ? Json(*cc.partner) : Json(nullptr);
    row["lhs"] = big(cc.lhs);
    row["rhs"] = big(cc.rhs);
    row["status"] = std::string(to_string(cc.status));
    ledger.push_back(std::move(row));
  }
  return Json{{"root_system", r.root_system},
              {"lambda", to_json(r.lambda.weight())},
              {"k", r.k},
              {"classes", std::move(classes)},
              {"pairs", std::move(pairs)},
              {"coroot_ledger", std::move(ledger)},
              {"violations", r.violations}};
}

std::string report_to_csv(const DimensionReport& r) {
  std::ostringstream os;
  os << "kind,lower,upper,verdict,lower_dim,upper_dim,status\n";
  for (const auto& pc : r.pairs) {
    os << "pair," << pc.lower << ',' << pc.upper << ',' << to_string(pc.verdict) << ',' << big(pc.lower_dim) << ','
       << big(pc.upper_dim) << ',' << to_string(pc.status) << '\n';
  }
  for (const auto& cc : r.coroot_ledger) {
    os << "coroot" << cc.coroot << ',' << cc.lower << ',' << cc.upper << ",," << big(cc.lhs) << ',' << big(cc.rhs)
       << ',' << to_string(cc.status) << '\n';
  }
  return os.str();
}

Json coroot_check_to_json(const CorootTableCheck& c) {
  return Json{{"root_system", std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank)},
              {"printed_entries", c.printed_entries},
              {"printed_distinct", c.printed_distinct},
              {"generated", c.generated_count},
              {"expected", c.expected_count},
              {"duplicates", c.duplicates},
              {"printed_not_generated", c.printed_not_generated},
              {"generated_not_printed", c.generated_not_printed},
              {"printed_matches_generated", c.printed_matches_generated()},
              {"validated_matches_generated", c.validated_matches_generated}};
}

std::string file_key(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += '-';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace weylorder
