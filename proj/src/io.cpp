#include "sumprod/io.hpp"

#include <cstdio>
#include <cstdlib>

namespace sumprod {

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::json json_double(double x) { return round12(x); }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

nlohmann::json json_u128(u128 v) {
    if (v <= u128(UINT64_MAX)) return static_cast<uint64_t>(v);
    return to_string(v);
}

nlohmann::json set_to_json(const FpSet& a) {
    nlohmann::json els = nlohmann::json::array();
    a.for_each([&](uint32_t x) { els.push_back(x); });
    return {{"p", a.p()}, {"elements", els}};
}

FpSet set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("elements"))
        throw Error("set literal must be an object with \"p\" and \"elements\"");
    if (!j["p"].is_number_unsigned() && !j["p"].is_number_integer()) throw Error("set literal: \"p\" must be an integer");
    int64_t p64 = j["p"].get<int64_t>();
    if (p64 < 3 || p64 > INT32_MAX) throw Error("set literal: p out of range");
    PrimeModulus m = make_modulus(static_cast<uint32_t>(p64));
    if (!j["elements"].is_array()) throw Error("set literal: \"elements\" must be an array");
    std::vector<uint32_t> els;
    int64_t prev = -1;
    for (const auto& e : j["elements"]) {
        if (!e.is_number_integer() && !e.is_number_unsigned()) throw Error("set literal: elements must be integers");
        int64_t v = e.get<int64_t>();
        if (v < 0 || v >= p64) throw Error("set literal: element out of [0, p)");
        if (v <= prev) throw Error("set literal: elements must be strictly increasing");
        prev = v;
        els.push_back(static_cast<uint32_t>(v));
    }
    return FpSet::from_elements(m, els);
}

nlohmann::json energy_to_json(const EnergyReport& r) {
    nlohmann::json j{{"quadruple_count", json_u128(r.quadruples)},
                     {"size_a", r.size_a},
                     {"size_b", r.size_b},
                     {"omega", json_double(r.omega())}};
    if (auto ex = r.omega_exact()) j["omega_exact"] = ex->str();
    return j;
}

nlohmann::json alg_to_json(const AlgReport& r) {
    nlohmann::json ratios = nlohmann::json::array();
    for (uint32_t xi = 1; xi < r.ratios.size(); ++xi)
        ratios.push_back({{"xi", xi}, {"ratio", r.ratios[xi].str()}});
    nlohmann::json els = nlohmann::json::array();
    r.members.for_each([&](uint32_t x) { els.push_back(x); });
    return {{"K", r.threshold_k.str()}, {"members", els}, {"ratios", ratios}};
}

nlohmann::json spectrum_to_json(const SpectrumReport& r, size_t magnitudes_cap) {
    nlohmann::json j{{"alpha", json_double(r.alpha)}, {"spec", set_to_json(r.spec)}};
    if (r.invariance_group) j["invariance_order"] = r.invariance_group->order;
    if (r.magnitudes.size() <= magnitudes_cap) {
        nlohmann::json mags = nlohmann::json::array();
        for (double v : r.magnitudes) mags.push_back(json_double(v));
        j["magnitudes"] = mags;
    } else {
        j["magnitudes_elided"] = r.magnitudes.size();
    }
    return j;
}

nlohmann::json pair_difference_to_json(const PairDifferenceReport& r) {
    return {{"alpha", json_double(r.alpha)},
            {"b_size", r.b_size},
            {"qualifying_pairs", json_u128(r.qualifying_pairs)},
            {"proportion", json_double(r.proportion)},
            {"bound", json_double(r.bound)},
            {"holds", r.holds}};
}

nlohmann::json spec_energy_to_json(const SpecEnergyBound& r) {
    return {{"alpha", json_double(r.alpha)},
            {"size_a", r.size_a},
            {"size_a_prime", r.size_a_prime},
            {"L", r.l_ratio.str()},
            {"min_energy", json_double(r.min_energy)},
            {"argmin_h", r.argmin_h},
            {"bound", json_double(r.bound)},
            {"holds", r.holds}};
}

nlohmann::json max_gauss_to_json(const MaxGauss& r, const SubgroupSpec& h) {
    return {{"p", h.modulus.p()},
            {"d", h.order},
            {"delta", json_double(h.delta())},
            {"max_gauss", json_double(r.value)},
            {"argmax_xi", r.argmax_xi},
            {"delta_prime", json_double(r.delta_prime)}};
}

nlohmann::json scale_trace_to_json(const ScaleTrace& t) {
    nlohmann::json alphas = nlohmann::json::array();
    for (double a : t.alphas) alphas.push_back(json_double(a));
    return {{"eta", json_double(t.eta)},
            {"J", t.j_levels},
            {"alphas", alphas},
            {"spec_sizes", t.spec_sizes},
            {"chosen_i", t.chosen_i},
            {"L", t.l_ratio.str()},
            {"trivial_start", t.trivial_start}};
}

nlohmann::json growth_trace_to_json(const GrowthTrace& t) {
    return {{"initial", set_to_json(t.initial)},
            {"sizes", t.sizes},
            {"iterations_used", t.iterations_used},
            {"reached_full", t.reached_full},
            {"stalled", t.stalled}};
}

nlohmann::json record_to_json(const VerificationRecord& r) {
    return {{"check", r.check_id},
            {"params", r.params},
            {"pass", r.pass},
            {"measured", r.measured},
            {"witness", r.witness}};
}

std::string gauss_row_csv(const GaussRow& row) {
    return std::to_string(row.p) + "," + std::to_string(row.d) + "," + format_double(row.delta) + "," +
           format_double(row.max_gauss) + "," + format_double(row.delta_prime);
}

}  // namespace sumprod
