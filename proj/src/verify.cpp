#include "sumprod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sumprod/io.hpp"
#include "sumprod/parallel.hpp"

namespace sumprod {

namespace {

nlohmann::json elements_json(const FpSet& a) {
    nlohmann::json arr = nlohmann::json::array();
    a.for_each([&](uint32_t x) { arr.push_back(x); });
    return arr;
}

// compact description: full element list only for small sets
nlohmann::json describe_set(const FpSet& a) {
    if (a.size() <= 128) return elements_json(a);
    return nlohmann::json{{"size", a.size()}};
}

uint64_t splitmix_next(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> ds;
    for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

}  // namespace

VerificationRecord check_lemma61(const FpSet& a) {
    VerificationRecord r;
    r.check_id = "lemma61";
    const uint64_t n = a.size();
    const uint64_t bound2x = std::min<uint64_t>(n * n, a.p());
    BestXi bx = best_xi(a);
    XiEnergyIdentity id = xi_energy_average(a);
    bool bound_ok = 2ull * bx.sumset_size >= bound2x;
    r.pass = bound_ok && id.matches;
    r.measured = {{"best_xi", bx.xi},
                  {"max_sumset_size", bx.sumset_size},
                  {"min_required", (bound2x + 1) / 2},
                  {"energy_sum", id.empirical.str()},
                  {"closed_form", id.closed_form.str()},
                  {"total_quadruples", json_u128(id.total_quadruples)}};
    if (!r.pass) r.witness = {{"a", elements_json(a)}};
    return r;
}

VerificationRecord check_growth(const FpSet& a) {
    VerificationRecord r;
    r.check_id = "growth3A2";
    const uint64_t n = a.size();
    const uint64_t bound2x = std::min<uint64_t>(n * n, a.p());
    FpSet g = grow_step(a);
    r.pass = 2ull * g.size() >= bound2x;
    r.measured = {{"grow_size", g.size()}, {"min_required", (bound2x + 1) / 2}};
    if (!r.pass) r.witness = {{"a", elements_json(a)}};
    return r;
}

GrowthTrace iterate_to_full(const FpSet& a, uint32_t max_iter) {
    if (a.empty()) throw EmptyOperand("iterate_to_full: empty operand");
    if (max_iter < 1) throw NonPositiveK("iterate_to_full needs max_iter >= 1");
    const uint32_t p = a.p();
    GrowthTrace t{a, {a.size()}, 0, false, false, a};
    FpSet s = a;
    while (t.iterations_used < max_iter) {
        if (s.is_full()) break;
        FpSet next = (2ull * s.size() > p) ? sumset(s, s)  // |S| > p/2 forces S+S = F_p
                                           : grow_step(s);
        if (next == s) {
            t.stalled = true;
            break;
        }
        s = std::move(next);
        t.sizes.push_back(s.size());
        ++t.iterations_used;
    }
    t.reached_full = s.is_full();
    t.final_set = std::move(s);
    return t;
}

VerificationRecord bkt_growth_measure(const FpSet& a) {
    if (a.size() < 2) throw TooSmall("bkt_growth_measure needs |A| >= 2");
    VerificationRecord r;
    r.check_id = "bkt";
    const uint32_t n = a.size();
    uint32_t sum_size = sumset(a, a).size();
    uint32_t prod_size = productset(a, a).size();
    uint32_t mx = std::max(sum_size, prod_size);
    bool in_range = n < a.p();  // |A| = p leaves no room to grow
    r.pass = !in_range || mx > n;
    double exponent = std::log(static_cast<double>(mx)) / std::log(static_cast<double>(n)) - 1.0;
    r.measured = {{"sum_size", sum_size},
                  {"prod_size", prod_size},
                  {"exponent", json_double(exponent)},
                  {"in_range", in_range}};
    if (!r.pass) r.witness = {{"a", elements_json(a)}};
    return r;
}

FpSet random_subset(const PrimeModulus& m, uint64_t seed, uint64_t index) {
    const uint32_t p = m.p();
    uint64_t s = seed ^ (uint64_t(p) << 32) ^ (index * 0xC2B2AE3D27D4EB4Full);
    splitmix_next(s);
    uint32_t size = 1 + static_cast<uint32_t>(splitmix_next(s) % p);
    std::vector<uint32_t> pool(p);
    std::iota(pool.begin(), pool.end(), 0u);
    BitVec bits(p);
    for (uint32_t i = 0; i < size; ++i) {
        uint32_t j = i + static_cast<uint32_t>(splitmix_next(s) % (p - i));
        std::swap(pool[i], pool[j]);
        bits.set(pool[i]);
    }
    return FpSet(m, std::move(bits));
}

namespace {

enum class InstanceKind { Set, SetAlpha, SubgroupAlpha, Pair, Triple };

struct CheckSpec {
    InstanceKind kind;
    std::vector<double> default_alpha;
};

const std::map<std::string, CheckSpec>& check_registry() {
    static const std::map<std::string, CheckSpec> reg = {
        {"lemma61", {InstanceKind::Set, {}}},
        {"growth3A2", {InstanceKind::Set, {}}},
        {"bkt", {InstanceKind::Set, {}}},
        {"parseval", {InstanceKind::Set, {}}},
        {"cbs", {InstanceKind::Set, {}}},
        {"alg-inverse", {InstanceKind::Set, {}}},
        {"addspec", {InstanceKind::SetAlpha, {0.15, 0.35, 0.55, 0.75}}},
        {"addspec-energy", {InstanceKind::SubgroupAlpha, {0.2, 0.4, 0.6, 0.8}}},
        {"cs-energy", {InstanceKind::Pair, {}}},
        {"ruzsa-triangle", {InstanceKind::Triple, {}}},
    };
    return reg;
}

struct BaseInstance {
    FpSet set;
    uint32_t subgroup_order = 0;  // nonzero for Subgroups generator
};

VerificationRecord run_parseval(const FpSet& a) {
    VerificationRecord r;
    r.check_id = "parseval";
    auto mags = fourier_magnitudes(a);
    double sum_sq = 0;
    for (double v : mags) sum_sq += v * v;
    double expected = static_cast<double>(a.p()) * static_cast<double>(a.size());
    double rel = std::abs(sum_sq - expected) / expected;
    r.pass = rel <= 1e-9;
    r.measured = {{"sum_sq", json_double(sum_sq)}, {"expected", json_double(expected)}, {"rel_error", json_double(rel)}};
    if (!r.pass) r.witness = {{"a", describe_set(a)}};
    return r;
}

VerificationRecord run_cbs(const FpSet& a) {
    // family: all dilates xi*A, xi in F_p^x; each has density exactly |A|/p
    VerificationRecord r;
    r.check_id = "cbs";
    const uint32_t p = a.p();
    std::vector<BitVec> family;
    family.reserve(p - 1);
    for (uint32_t xi = 1; xi < p; ++xi) family.push_back(dilate(xi, a).bits());
    Rat delta(a.size(), p);
    auto res = popular_intersection_index(p, family, delta);
    // |qualifying| >= delta^2 k / 2, exactly
    u128 num = static_cast<u128>(delta.num), den = static_cast<u128>(delta.den);
    u128 k = p - 1;
    r.pass = cmp_products(2 * u128(res.qualifying.size()), den * den, num * num, k) >= 0;
    r.measured = {{"k", p - 1},
                  {"delta", delta.str()},
                  {"selected_index", res.index},
                  {"qualifying", res.qualifying.size()},
                  {"overlap_sum", json_u128(res.overlap_sum)}};
    if (!r.pass) r.witness = {{"a", describe_set(a)}};
    return r;
}

VerificationRecord run_alg_inverse(const FpSet& a) {
    VerificationRecord r;
    r.check_id = "alg-inverse";
    const auto& m = a.modulus();
    r.pass = true;
    uint32_t checked = 0;
    for (uint32_t xi = 1; xi < m.p(); ++xi) {
        uint32_t s1 = sumset(a, dilate(xi, a)).size();
        uint32_t s2 = sumset(a, dilate(m.inverse(xi), a)).size();
        ++checked;
        if (s1 != s2) {
            r.pass = false;
            r.witness = {{"a", elements_json(a)}, {"xi", xi}, {"size_xi", s1}, {"size_inv", s2}};
            break;
        }
    }
    r.measured = {{"xi_checked", checked}};
    return r;
}

VerificationRecord run_addspec(const FpSet& a, double alpha) {
    VerificationRecord r;
    r.check_id = "addspec";
    auto pd = spec_pair_difference_proportion(a, alpha);
    r.pass = pd.holds;
    r.measured = {{"proportion", json_double(pd.proportion)},
                  {"bound", json_double(pd.bound)},
                  {"spec_size", pd.b_size},
                  {"qualifying_pairs", json_u128(pd.qualifying_pairs)}};
    if (!r.pass) r.witness = {{"a", describe_set(a)}, {"alpha", json_double(alpha)}};
    return r;
}

VerificationRecord run_addspec_energy(const SubgroupSpec& h, double alpha) {
    VerificationRecord r;
    r.check_id = "addspec-energy";
    auto eb = spec_energy_bound_check(h, alpha);
    r.pass = eb.holds;
    r.measured = {{"size_a", eb.size_a},
                  {"size_a_prime", eb.size_a_prime},
                  {"L", eb.l_ratio.str()},
                  {"min_energy", json_double(eb.min_energy)},
                  {"argmin_h", eb.argmin_h},
                  {"bound", json_double(eb.bound)}};
    if (!r.pass) r.witness = {{"d", h.order}, {"alpha", json_double(alpha)}};
    return r;
}

VerificationRecord run_cs_energy(const FpSet& a, const FpSet& b) {
    VerificationRecord r;
    r.check_id = "cs-energy";
    u128 q = quadruple_count(a, b);
    uint32_t s = sumset(a, b).size();
    r.pass = energy_cs_bound_holds(q, a.size(), b.size(), s);
    r.measured = {{"quadruples", json_u128(q)}, {"sumset_size", s}};
    if (!r.pass) r.witness = {{"a", elements_json(a)}, {"b", elements_json(b)}};
    return r;
}

VerificationRecord run_ruzsa_triangle(const FpSet& a, const FpSet& b, const FpSet& c) {
    VerificationRecord r;
    r.check_id = "ruzsa-triangle";
    uint64_t ac = difference(a, c).size();
    uint64_t ab = difference(a, b).size();
    uint64_t bc = difference(b, c).size();
    r.pass = ac * b.size() <= ab * bc;
    r.measured = {{"d_ac", ac}, {"d_ab", ab}, {"d_bc", bc}, {"size_b", b.size()}};
    if (!r.pass) r.witness = {{"a", elements_json(a)}, {"b", elements_json(b)}, {"c", elements_json(c)}};
    return r;
}

VerificationRecord run_bkt_lenient(const FpSet& a) {
    if (a.size() >= 2) return bkt_growth_measure(a);
    VerificationRecord r;
    r.check_id = "bkt";
    r.pass = true;  // premise |A| >= 2 not met; vacuous
    r.measured = {{"in_range", false}, {"size", a.size()}};
    return r;
}

// lexicographic combinations of {0..p-1}, sizes ascending
std::vector<FpSet> enumerate_subsets(const PrimeModulus& m, uint32_t max_size, uint64_t hard_cap) {
    const uint32_t p = m.p();
    const uint32_t cap = max_size == 0 ? p : std::min(max_size, p);
    std::vector<FpSet> out;
    std::vector<uint32_t> idx;
    for (uint32_t s = 1; s <= cap; ++s) {
        idx.resize(s);
        std::iota(idx.begin(), idx.end(), 0u);
        for (;;) {
            out.push_back(FpSet::from_elements(m, idx));
            if (out.size() > hard_cap) throw CaseExplosion("subset enumeration exceeds the instance cap");
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && idx[i] == p - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (uint32_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

u128 count_subsets(uint32_t p, uint32_t max_size) {
    const uint32_t cap = max_size == 0 ? p : std::min(max_size, p);
    u128 total = 0;
    u128 binom = 1;
    for (uint32_t s = 1; s <= cap; ++s) {
        binom = binom * (p - s + 1) / s;  // C(p, s), exact since computed in order
        total += binom;
        if (total > (u128(1) << 100)) break;  // already far beyond any guard
    }
    return total;
}

}  // namespace

SweepSummary sweep(const SweepConfig& cfg, const std::function<void(const VerificationRecord&)>& emit) {
    constexpr u128 kCaseGuard = 100000000;  // 10^8
    constexpr uint64_t kBaseCap = 10000000;

    for (const auto& c : cfg.checks)
        if (!check_registry().count(c)) throw Error("unknown check id: " + c);
    if (cfg.generator == GeneratorKind::Random && cfg.random_count == 0)
        throw Error("random generator needs a positive instance count");
    for (double alpha : cfg.alpha_grid)
        if (!(alpha > 0.0 && alpha < 1.0)) throw BadThreshold("alpha grid values must lie in (0, 1)");

    // pre-count cases across the whole sweep before doing any work
    u128 total_cases = 0;
    for (uint32_t p : cfg.p_list) {
        u128 base = 0;
        switch (cfg.generator) {
            case GeneratorKind::AllSubsets: base = count_subsets(p, cfg.max_size); break;
            case GeneratorKind::Random: base = cfg.random_count; break;
            case GeneratorKind::Subgroups: base = divisors_of(p - 1).size(); break;
        }
        for (const auto& c : cfg.checks) {
            const auto& spec_c = check_registry().at(c);
            u128 grid = cfg.alpha_grid.empty() ? spec_c.default_alpha.size() : cfg.alpha_grid.size();
            switch (spec_c.kind) {
                case InstanceKind::Set: total_cases += base; break;
                case InstanceKind::SetAlpha:
                case InstanceKind::SubgroupAlpha: total_cases += base * grid; break;
                case InstanceKind::Pair: total_cases += base * base; break;
                case InstanceKind::Triple: total_cases += base * base * base; break;
            }
            if (total_cases > kCaseGuard)
                throw CaseExplosion("sweep would run more than 10^8 cases; narrow the generator");
        }
    }

    SweepSummary summary;
    for (uint32_t p : cfg.p_list) {
        PrimeModulus m = make_modulus(p);

        std::vector<BaseInstance> base;
        switch (cfg.generator) {
            case GeneratorKind::AllSubsets:
                for (auto& s : enumerate_subsets(m, cfg.max_size, kBaseCap)) base.push_back({std::move(s), 0});
                break;
            case GeneratorKind::Random:
                for (uint64_t i = 0; i < cfg.random_count; ++i) base.push_back({random_subset(m, cfg.seed, i), 0});
                break;
            case GeneratorKind::Subgroups:
                for (uint32_t d : divisors_of(p - 1)) base.push_back({subgroup(m, d).elements, d});
                break;
        }
        const uint64_t nb = base.size();

        for (const auto& check : cfg.checks) {
            const auto& spec_c = check_registry().at(check);
            const std::vector<double>& grid = cfg.alpha_grid.empty() ? spec_c.default_alpha : cfg.alpha_grid;
            if (spec_c.kind == InstanceKind::SubgroupAlpha && cfg.generator != GeneratorKind::Subgroups)
                throw Error("check " + check + " requires the subgroups generator");

            uint64_t n_cases = 0;
            switch (spec_c.kind) {
                case InstanceKind::Set: n_cases = nb; break;
                case InstanceKind::SetAlpha:
                case InstanceKind::SubgroupAlpha: n_cases = nb * grid.size(); break;
                case InstanceKind::Pair: n_cases = nb * nb; break;
                case InstanceKind::Triple: n_cases = nb * nb * nb; break;
            }

            auto run_case = [&](uint64_t i) -> VerificationRecord {
                VerificationRecord r;
                switch (spec_c.kind) {
                    case InstanceKind::Set: {
                        const auto& inst = base[i];
                        if (check == "lemma61") r = check_lemma61(inst.set);
                        else if (check == "growth3A2") r = check_growth(inst.set);
                        else if (check == "bkt") r = run_bkt_lenient(inst.set);
                        else if (check == "parseval") r = run_parseval(inst.set);
                        else if (check == "cbs") r = run_cbs(inst.set);
                        else r = run_alg_inverse(inst.set);
                        r.params = {{"p", p}, {"index", i}, {"a", describe_set(inst.set)}};
                        if (inst.subgroup_order) r.params["d"] = inst.subgroup_order;
                        break;
                    }
                    case InstanceKind::SetAlpha: {
                        const auto& inst = base[i / grid.size()];
                        double alpha = grid[i % grid.size()];
                        r = run_addspec(inst.set, alpha);
                        r.params = {{"p", p}, {"index", i}, {"a", describe_set(inst.set)}, {"alpha", json_double(alpha)}};
                        if (inst.subgroup_order) r.params["d"] = inst.subgroup_order;
                        break;
                    }
                    case InstanceKind::SubgroupAlpha: {
                        const auto& inst = base[i / grid.size()];
                        double alpha = grid[i % grid.size()];
                        SubgroupSpec h = subgroup(m, inst.subgroup_order);
                        r = run_addspec_energy(h, alpha);
                        r.params = {{"p", p}, {"index", i}, {"d", inst.subgroup_order}, {"alpha", json_double(alpha)}};
                        break;
                    }
                    case InstanceKind::Pair: {
                        const auto& ia = base[i / nb];
                        const auto& ib = base[i % nb];
                        r = run_cs_energy(ia.set, ib.set);
                        r.params = {{"p", p}, {"index", i}, {"a", describe_set(ia.set)}, {"b", describe_set(ib.set)}};
                        break;
                    }
                    case InstanceKind::Triple: {
                        const auto& ia = base[i / (nb * nb)];
                        const auto& ib = base[(i / nb) % nb];
                        const auto& ic = base[i % nb];
                        r = run_ruzsa_triangle(ia.set, ib.set, ic.set);
                        r.params = {{"p", p},
                                    {"index", i},
                                    {"a", describe_set(ia.set)},
                                    {"b", describe_set(ib.set)},
                                    {"c", describe_set(ic.set)}};
                        break;
                    }
                }
                if (cfg.generator == GeneratorKind::Random) r.params["seed"] = cfg.seed;
                return r;
            };

            // chunked execution: parallel within a chunk, emission in order
            constexpr uint64_t kChunk = 4096;
            for (uint64_t lo = 0; lo < n_cases; lo += kChunk) {
                const uint64_t hi = std::min(lo + kChunk, n_cases);
                std::vector<VerificationRecord> slot(hi - lo);
                parallel_for(hi - lo, cfg.parallelism, [&](uint64_t k) {
                    try {
                        slot[k] = run_case(lo + k);
                    } catch (const std::exception& e) {  // never abort a sweep
                        slot[k].check_id = check;
                        slot[k].params = {{"p", p}, {"index", lo + k}};
                        slot[k].pass = false;
                        slot[k].witness = {{"error", e.what()}};
                    }
                });
                for (auto& rec : slot) {
                    ++summary.records;
                    if (rec.pass) ++summary.passed;
                    else ++summary.failed;
                    emit(rec);
                }
            }
        }
    }
    return summary;
}

std::vector<GaussRow> gauss_decay_table(uint32_t p_min, uint32_t p_max, double min_delta) {
    if (p_min < 3) p_min = 3;
    std::vector<GaussRow> rows;
    for (uint32_t p = p_min; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        PrimeModulus m = make_modulus(p);
        const double dmin = std::pow(static_cast<double>(p), min_delta) * (1.0 - 1e-12);
        for (uint32_t d : divisors_of(p - 1)) {
            if (static_cast<double>(d) < dmin) continue;
            SubgroupSpec h = subgroup(m, d);
            MaxGauss mg = max_gauss(h);
            rows.push_back(GaussRow{p, d, h.delta(), mg.value, mg.delta_prime});
        }
    }
    return rows;
}

}  // namespace sumprod
