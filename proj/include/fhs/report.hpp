#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhs/bounds.hpp"
#include "fhs/correlation.hpp"
#include "fhs/sequence.hpp"

namespace fhs {

// Everything cmd_analyze reports about one set. Rationals and 128-bit sums
// serialize as decimal strings so equality survives any JSON reader.
struct analysis_report {
    std::uint32_t n = 0, m = 0, l = 0;
    provenance prov;

    std::vector<bool> balanced;
    std::vector<bool> perfectly_balanced;
    bool uniformly_distributed = false;
    std::vector<std::int64_t> set_counts;

    std::optional<std::int64_t> h_auto, h_cross;
    int128 s_auto = 0, s_cross = 0;
    std::optional<rational> a_auto, a_cross;

    std::int64_t lg = 0;               // single-sequence floor at (N, M)
    std::int64_t lg_max_attained = 0;  // max over members of H(X)
    bool lg_met_by_all = false;        // every member's H(X) >= floor
    optimality_verdict mhc, ahc;

    std::optional<std::vector<std::string>> labels;
    std::int64_t timing_ms = 0;

    friend bool operator==(const analysis_report& a, const analysis_report& b) {
        // JSON objects come back with alphabetized keys, so compare the
        // key-value collections order-insensitively.
        auto key = [](const analysis_report& r) {
            std::ostringstream os;
            os << r.n << '|' << r.m << '|' << r.l << '|' << r.prov.construction << '|';
            auto params = r.prov.params;
            std::sort(params.begin(), params.end());
            for (const auto& [k2, v] : params) os << k2 << '=' << v << ',';
            os << '|';
            for (const auto& s : r.prov.notes) os << s << ';';
            for (bool x : r.balanced) os << x;
            for (bool x : r.perfectly_balanced) os << x;
            os << '|' << r.uniformly_distributed << '|';
            for (auto c : r.set_counts) os << c << ',';
            os << '|' << (r.h_auto ? std::to_string(*r.h_auto) : "-") << '|'
               << (r.h_cross ? std::to_string(*r.h_cross) : "-") << '|' << int128_str(r.s_auto) << '|'
               << int128_str(r.s_cross) << '|' << (r.a_auto ? r.a_auto->str() : "-") << '|'
               << (r.a_cross ? r.a_cross->str() : "-") << '|' << r.lg << '|' << r.lg_max_attained << '|'
               << r.lg_met_by_all << '|' << verdict_name(r.mhc.verdict) << '|' << verdict_name(r.ahc.verdict) << '|';
            auto wkey = [&os](const optimality_verdict& v) {
                auto ws = v.witnesses;
                std::sort(ws.begin(), ws.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                for (const auto& [k3, w] : ws) os << k3 << '=' << int128_str(w) << ',';
            };
            wkey(r.mhc);
            wkey(r.ahc);
            if (r.labels) {
                os << "|L:";
                for (const auto& s : *r.labels) os << s << ';';
            }
            os << '|' << r.timing_ms;
            return os.str();
        };
        return key(a) == key(b);
    }
};

inline analysis_report build_analysis_report(const sequence_set& set) {
    auto start = std::chrono::steady_clock::now();
    analysis_report rep;
    auto r = full_report(set);
    auto d = distribution(set);

    rep.n = r.n;
    rep.m = r.m;
    rep.l = r.l;
    rep.prov = set.prov;
    rep.balanced = d.balanced;
    rep.perfectly_balanced = d.perfectly_balanced;
    rep.uniformly_distributed = d.uniformly_distributed;
    rep.set_counts = d.set_counts;
    rep.h_auto = r.h_auto;
    rep.h_cross = r.h_cross;
    rep.s_auto = r.s_auto;
    rep.s_cross = r.s_cross;
    rep.a_auto = r.a_auto;
    rep.a_cross = r.a_cross;

    if (r.n >= 2) {
        rep.lg = lg_bound(r.n, r.m);
        rep.lg_met_by_all = true;
        for (std::uint32_t i = 0; i < r.l; ++i) {
            std::int64_t h = r.max_out_of_phase_auto(i);
            rep.lg_max_attained = std::max(rep.lg_max_attained, h);
            if (h < rep.lg) rep.lg_met_by_all = false;
        }
    }
    rep.mhc = mhc_verdict(r);
    rep.ahc = ahc_verdict(r);
    rep.labels = set.sequences.front().labels;

    rep.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace detail {

inline nlohmann::json witnesses_json(const optimality_verdict& v) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, x] : v.witnesses) w[k] = int128_str(x);
    return w;
}

inline void witnesses_from_json(const nlohmann::json& j, optimality_verdict& v) {
    for (auto it = j.begin(); it != j.end(); ++it)
        v.witnesses.emplace_back(it.key(), int128_parse(it.value().get<std::string>()));
}

} // namespace detail

inline nlohmann::json report_to_json(const analysis_report& r) {
    nlohmann::json j;
    j["shape"] = {{"n", r.n}, {"m", r.m}, {"l", r.l}};
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.prov.params) params[k] = v;
    j["provenance"] = {{"construction", r.prov.construction}, {"params", params}, {"notes", r.prov.notes}};
    j["distribution"] = {{"balanced", r.balanced},
                         {"perfectly_balanced", r.perfectly_balanced},
                         {"uniformly_distributed", r.uniformly_distributed},
                         {"set_counts", r.set_counts}};
    nlohmann::json corr;
    corr["h_a"] = r.h_auto ? nlohmann::json(*r.h_auto) : nlohmann::json(nullptr);
    corr["h_c"] = r.h_cross ? nlohmann::json(*r.h_cross) : nlohmann::json(nullptr);
    corr["s_a"] = int128_str(r.s_auto);
    corr["s_c"] = int128_str(r.s_cross);
    corr["a_a"] = r.a_auto ? nlohmann::json(r.a_auto->str()) : nlohmann::json(nullptr);
    corr["a_c"] = r.a_cross ? nlohmann::json(r.a_cross->str()) : nlohmann::json(nullptr);
    j["correlation"] = corr;
    j["bounds"] = {{"lempel_greenberger",
                    {{"bound", r.lg}, {"max_attained", r.lg_max_attained}, {"all_members_meet_bound", r.lg_met_by_all}}},
                   {"mhc", {{"verdict", verdict_name(r.mhc.verdict)}, {"witnesses", detail::witnesses_json(r.mhc)}}},
                   {"ahc", {{"verdict", verdict_name(r.ahc.verdict)}, {"witnesses", detail::witnesses_json(r.ahc)}}}};
    j["timing"] = {{"elapsed_ms", r.timing_ms}};
    if (r.labels) j["labels"] = *r.labels;
    return j;
}

inline analysis_report report_from_json(const nlohmann::json& j) {
    analysis_report r;
    r.n = j.at("shape").at("n").get<std::uint32_t>();
    r.m = j.at("shape").at("m").get<std::uint32_t>();
    r.l = j.at("shape").at("l").get<std::uint32_t>();
    r.prov.construction = j.at("provenance").at("construction").get<std::string>();
    {
        const auto& params = j.at("provenance").at("params");
        for (auto it = params.begin(); it != params.end(); ++it)
            r.prov.params.emplace_back(it.key(), it.value().get<std::int64_t>());
        r.prov.notes = j.at("provenance").at("notes").get<std::vector<std::string>>();
    }
    const auto& d = j.at("distribution");
    r.balanced = d.at("balanced").get<std::vector<bool>>();
    r.perfectly_balanced = d.at("perfectly_balanced").get<std::vector<bool>>();
    r.uniformly_distributed = d.at("uniformly_distributed").get<bool>();
    r.set_counts = d.at("set_counts").get<std::vector<std::int64_t>>();
    const auto& c = j.at("correlation");
    if (!c.at("h_a").is_null()) r.h_auto = c.at("h_a").get<std::int64_t>();
    if (!c.at("h_c").is_null()) r.h_cross = c.at("h_c").get<std::int64_t>();
    r.s_auto = int128_parse(c.at("s_a").get<std::string>());
    r.s_cross = int128_parse(c.at("s_c").get<std::string>());
    if (!c.at("a_a").is_null()) r.a_auto = rational::parse(c.at("a_a").get<std::string>());
    if (!c.at("a_c").is_null()) r.a_cross = rational::parse(c.at("a_c").get<std::string>());
    const auto& b = j.at("bounds");
    r.lg = b.at("lempel_greenberger").at("bound").get<std::int64_t>();
    r.lg_max_attained = b.at("lempel_greenberger").at("max_attained").get<std::int64_t>();
    r.lg_met_by_all = b.at("lempel_greenberger").at("all_members_meet_bound").get<bool>();
    r.mhc.bound_name = "peng_fan";
    r.mhc.verdict = verdict_from_name(b.at("mhc").at("verdict").get<std::string>());
    detail::witnesses_from_json(b.at("mhc").at("witnesses"), r.mhc);
    r.ahc.bound_name = "average_hamming";
    r.ahc.verdict = verdict_from_name(b.at("ahc").at("verdict").get<std::string>());
    detail::witnesses_from_json(b.at("ahc").at("witnesses"), r.ahc);
    r.timing_ms = j.at("timing").at("elapsed_ms").get<std::int64_t>();
    if (j.contains("labels")) r.labels = j.at("labels").get<std::vector<std::string>>();
    return r;
}

inline std::string report_to_text(const analysis_report& r) {
    std::ostringstream os;
    os << "shape: N=" << r.n << " M=" << r.m << " L=" << r.l << "\n";
    os << "provenance: " << r.prov.construction;
    for (const auto& [k, v] : r.prov.params) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& note : r.prov.notes) os << "  note: " << note << "\n";
    int bal = 0, pb = 0;
    for (bool x : r.balanced) bal += x ? 1 : 0;
    for (bool x : r.perfectly_balanced) pb += x ? 1 : 0;
    os << "distribution: balanced " << bal << "/" << r.l << ", perfectly balanced " << pb << "/" << r.l
       << ", uniformly distributed: " << (r.uniformly_distributed ? "yes" : "no") << "\n";
    os << "correlation: H_a=" << (r.h_auto ? std::to_string(*r.h_auto) : "n/a")
       << " H_c=" << (r.h_cross ? std::to_string(*r.h_cross) : "n/a") << " S_a=" << int128_str(r.s_auto)
       << " S_c=" << int128_str(r.s_cross) << " A_a=" << (r.a_auto ? r.a_auto->str() : "n/a")
       << " A_c=" << (r.a_cross ? r.a_cross->str() : "n/a") << "\n";
    os << "bounds: lempel_greenberger bound=" << r.lg << " max_attained=" << r.lg_max_attained
       << " met_by_all=" << (r.lg_met_by_all ? "yes" : "no") << "\n";
    os << "        mhc verdict=" << verdict_name(r.mhc.verdict);
    for (const auto& [k, v] : r.mhc.witnesses) os << " " << k << "=" << int128_str(v);
    os << "\n";
    os << "        ahc verdict=" << verdict_name(r.ahc.verdict);
    for (const auto& [k, v] : r.ahc.witnesses) os << " " << k << "=" << int128_str(v);
    os << "\n";
    os << "timing: " << r.timing_ms << " ms\n";
    return os.str();
}

} // namespace fhs
