#include "synpath/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace synpath {

double round_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const SyncSequence& seq) {
    Json j;
    j["initial_code"] = to_text(seq.initial());
    auto events = Json::array();
    for (const auto& e : seq.events) {
        Json ev;
        ev["t"] = round_significant(e.t);
        ev["site"] = e.site;
        ev["sign"] = e.sign;
        ev["edge"] = edge_json(e.edge);
        if (!e.added) ev["added"] = false;
        events.push_back(std::move(ev));
    }
    j["events"] = std::move(events);
    j["final_code"] = to_text(seq.final_code());
    return j;
}

Json to_json(const Configuration& x) {
    Json j;
    j["family"] = std::string(family_name(x.spec.family));
    j["n"] = x.spec.n;
    j["values"] = x.values;
    return j;
}

Json to_json(const ExactConfiguration& x) {
    Json j;
    j["family"] = std::string(family_name(x.spec.family));
    j["n"] = x.spec.n;
    auto vals = Json::array();
    for (const auto& v : x.values) vals.push_back(to_string(v));
    j["values"] = std::move(vals);
    return j;
}

Json to_json(const IncrementOrder& order) {
    auto arr = Json::array();
    for (const auto& l : order.labels) {
        if (order.spec.family == Family::CompleteN) arr.push_back(Json::array({l.n, l.k}));
        else arr.push_back(Json::array({l.n, l.k, l.sign}));
    }
    return arr;
}

ExactConfiguration parse_configuration(const GraphSpec& spec, std::string_view text) {
    std::vector<Rational> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        values.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return ExactConfiguration(spec, std::move(values));
}

}  // namespace synpath
