#pragma once

#include "synpath/flow.hpp"
#include "synpath/graph.hpp"
#include "synpath/realizability.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace synpath {

using Json = nlohmann::ordered_json;

// Decimal with 12 significant digits, kept as a JSON number.
double round_significant(double value, int digits = 12);

Json to_json(const SyncSequence& seq);
Json to_json(const Configuration& x);
Json to_json(const ExactConfiguration& x);  // values as "p/q" strings
Json to_json(const IncrementOrder& order);  // [[n,k], ...] or [[n,m,q], ...]
Json edge_json(const Edge& e);

// "0,2,5,9" (exact decimals or p/q) into a configuration of the given spec.
ExactConfiguration parse_configuration(const GraphSpec& spec, std::string_view text);

}  // namespace synpath
