// SPDX-License-Identifier: Apache-2.0
#include "steklov/harness/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace steklov::harness {

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Json json_number(double value) {
    if (std::isnan(value)) return nullptr;
    if (std::isinf(value)) return format_number(value);
    return std::strtod(format_number(value).c_str(), nullptr);
}

Json to_json(const bounds::BoundReport& r) {
    Json j;
    j["input"] = {{"n", r.n}, {"K", json_number(r.K)}, {"H", json_number(r.H)}, {"R", json_number(r.R)}};
    j["firstZero"] = json_number(r.first_zero);
    j["q1Lower"] = json_number(r.q1_lower);
    auto opt = [&](const char* key, const std::optional<double>& v) {
        if (v) j[key] = json_number(*v);
    };
    opt("q1LowerClosedForm", r.q1_lower_closed_form);
    if (r.ball_comparison) {
        j["ballComparison"] = {{"q1Bar", json_number(*r.ball_comparison)},
                               {"radius", json_number(*r.ball_comparison_radius)}};
    }
    opt("innerRadiusBound", r.inner_radius_bound);
    opt("rough", r.rough);
    opt("mckean", r.mckean);
    opt("chengUpper", r.cheng_upper);
    opt("isoperimetricUpper", r.isoperimetric_upper);

    Json classical = Json::object();
    if (r.payne) classical["payne"] = json_number(*r.payne);
    if (r.wang_xia) classical["wangXia"] = json_number(*r.wang_xia);
    j["classical"] = classical;

    Json dominance = Json::object();
    if (r.main_dominates_wang_xia) dominance["mainDominatesWangXia"] = *r.main_dominates_wang_xia;
    if (r.inner_radius_dominates_payne) dominance["innerRadiusDominatesPayne"] = *r.inner_radius_dominates_payne;
    j["dominance"] = dominance;

    if (r.sandwich_consistent) j["sandwichConsistent"] = *r.sandwich_consistent;
    j["smoothnessCaveat"] = r.smoothness_caveat;

    Json prov = Json::array();
    for (const auto& p : r.provenance) prov.push_back({{"bound", p.bound}, {"theorem", p.theorem}});
    j["provenance"] = prov;
    return j;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace steklov::harness
