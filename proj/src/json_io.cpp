#include "doubled/json_io.hpp"

namespace doubled {

using nlohmann::json;

json certificate_json(const DoubledCertificate& c) {
    json pairs_m = json::array(), pairs_a = json::array();
    for (auto [u, v] : c.matched) pairs_m.push_back(json::array({u, v}));
    for (auto [u, v] : c.antimatched) pairs_a.push_back(json::array({u, v}));
    return json{{"A", c.a_side}, {"B", c.b_side}, {"matched_pairs", pairs_m},
                {"antimatched_pairs", pairs_a}};
}

DoubledCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B"))
        throw std::invalid_argument("certificate JSON: expected object with A and B");
    DoubledCertificate c;
    c.a_side = j.at("A").get<std::vector<int>>();
    c.b_side = j.at("B").get<std::vector<int>>();
    auto pairs = [](const json& arr, const char* what) {
        std::vector<std::pair<int, int>> out;
        if (arr.is_null()) return out;
        if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected array");
        for (const auto& p : arr) {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument(std::string(what) + ": expected [u,v] pairs");
            out.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
        return out;
    };
    c.matched = pairs(j.value("matched_pairs", json::array()), "matched_pairs");
    c.antimatched = pairs(j.value("antimatched_pairs", json::array()), "antimatched_pairs");
    return c;
}

json outcome_json(const std::string& class_name, const RecognitionOutcome& out) {
    json j{{"class", class_name}};
    if (out.certificate) {
        j["result"] = "member";
        j["certificate"] = certificate_json(*out.certificate);
    } else {
        j["result"] = "non-member";
        json w{{"vertices", out.witness->vertices}};
        w["kind"] = out.witness->kind ? json(PatternCatalog::name(*out.witness->kind)) : json(nullptr);
        j["witness"] = w;
    }
    return j;
}

json obstruction_summary_json(const ObstructionSet& obs) {
    json hist = json::object();
    for (auto [order, count] : obs.order_histogram()) hist[std::to_string(order)] = count;
    return json{{"class", obs.class_name},
                {"max_order", obs.max_order},
                {"count", obs.members.size()},
                {"order-histogram", hist},
                {"complement-closure", obs.complement_closed()},
                {"up-to-complement-count", obs.up_to_complement_count()}};
}

} // namespace doubled
