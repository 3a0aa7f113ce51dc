#ifndef WEYLORDER_SERIALIZE_HPP
#define WEYLORDER_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "weylorder/dimension.hpp"
#include "weylorder/poset.hpp"
#include "weylorder/root_system.hpp"
#include "weylorder/tuple_order.hpp"
#include "weylorder/weight.hpp"

namespace weylorder {

using Json = nlohmann::ordered_json;

/// "2,1" -> omega coordinates. Throws ErrorCode::Parse.
Weight parse_weight_spec(std::string_view text);
DominantWeight parse_dominant_spec(std::string_view text);
/// "2,1/0,0" -> tuple of dominant weights of a common rank.
WeightTuple parse_tuple_spec(std::string_view text);

Json to_json(const Weight& w);
Json to_json(const WeightTuple& t);
Json to_json(const CoverEdge& e, const TuplePoset& p);

/// {"lambda", "k", "classes": [...], "hasse": [[lower, upper, kind], ...]}.
/// Kinds are taken from `covers` when given (matched by edge), else omitted.
Json poset_to_json(const TuplePoset& p, const std::vector<CoverEdge>* covers = nullptr);

/// Graphviz digraph, edges pointing upward; Type I solid, Type II dashed.
std::string poset_to_dot(const TuplePoset& p, const std::vector<CoverEdge>* covers = nullptr);

Json report_to_json(const DimensionReport& r);
/// One row per pair: kind,lower,upper,verdict,lower_dim,upper_dim,status.
std::string report_to_csv(const DimensionReport& r);

Json coroot_check_to_json(const CorootTableCheck& c);

/// Canonical file stem component: "2-1" for 2,1.
std::string file_key(const Weight& w);

}  // namespace weylorder

#endif  // WEYLORDER_SERIALIZE_HPP
