#pragma once

#include <string>

#include <json.hpp>

#include "rap/circulant.hpp"
#include "rap/classify.hpp"
#include "rap/fmu.hpp"
#include "rap/oracles.hpp"

namespace rap {

using Json = nlohmann::ordered_json;

/// Exact values become literal strings over zeta_N, N the document's
/// root_order; floats become [re, im].
Json scalar_json(const Cyclo& x, int root_order);
Json scalar_json(const ComplexF& x, int root_order = 1);

template <class T>
Json scalar_list(const std::vector<T>& xs, int root_order) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(scalar_json(x, root_order));
    return out;
}

/// Smallest N that every value embeds into, starting from `base`.
int document_order(int base, const std::vector<Cyclo>& values);

Json to_json(const PeriodInfo& pi);

template <class T>
Json to_json(const EventualPeriod<T>& ep, int root_order) {
    Json j;
    j["preperiod"] = ep.preperiod;
    j["period"] = ep.period;
    j["prefix"] = scalar_list(ep.prefix, root_order);
    j["block"] = scalar_list(ep.block, root_order);
    return j;
}

/// Includes its own root_order field.
Json to_json(const Classification& cls, int root_order);
Json to_json(const IdentityReport& r);
Json to_json(const FmuPoly& f, const std::vector<RealRoot>& roots);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

} // namespace rap
