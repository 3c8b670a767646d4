// sumprod: exact set algebra, additive statistics, Fourier spectra and
// verification sweeps over prime fields, with machine-readable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumprod/io.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/verify.hpp"

namespace {

using namespace sumprod;
using nlohmann::json;

std::vector<uint32_t> parse_uint_list(const std::string& s, const char* what) {
    std::vector<uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos, 10);
        if (pos != tok.size() || v > UINT32_MAX) throw Error(std::string(what) + ": bad integer '" + tok + "'");
        out.push_back(static_cast<uint32_t>(v));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw Error(std::string(what) + ": bad number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

FpSet load_set_file(const std::string& path, std::optional<uint32_t> expect_p) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open set file: " + path);
    json j;
    in >> j;
    FpSet s = set_from_json(j);
    if (expect_p && s.p() != *expect_p)
        throw ModulusMismatch("set file " + path + " has p = " + std::to_string(s.p()) + ", expected " +
                              std::to_string(*expect_p));
    return s;
}

struct SetInput {
    std::string inline_list;
    std::string file;

    bool given() const { return !inline_list.empty() || !file.empty(); }

    FpSet resolve(std::optional<PrimeModulus>& m, uint32_t p_flag, const char* name) const {
        if (!inline_list.empty() && !file.empty()) throw Error(std::string("give only one of --") + name + "/--" + name + "-file");
        if (!file.empty()) {
            FpSet s = load_set_file(file, p_flag ? std::optional<uint32_t>(p_flag) : std::nullopt);
            if (!m) m = s.modulus();
            else if (*m != s.modulus()) throw ModulusMismatch("sets disagree on p");
            return s;
        }
        if (!m) {
            if (p_flag == 0) throw Error("--p is required with inline sets");
            m = make_modulus(p_flag);
        }
        auto els = parse_uint_list(inline_list, name);
        std::sort(els.begin(), els.end());
        els.erase(std::unique(els.begin(), els.end()), els.end());
        return FpSet::from_elements(*m, els);
    }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_setop(const std::string& op, uint32_t p_flag, const SetInput& ain, const SetInput& bin, uint32_t xi, uint32_t k,
              const std::string& format) {
    std::optional<PrimeModulus> m;
    FpSet a = ain.resolve(m, p_flag, "a");
    const bool needs_b = (op == "sum" || op == "diff" || op == "prod");
    std::optional<FpSet> b;
    if (needs_b) {
        if (!bin.given()) throw Error("setop " + op + " needs --b/--b-file");
        b = bin.resolve(m, p_flag, "b");
    }

    FpSet out = [&]() -> FpSet {
        if (op == "sum") return sumset(a, *b);
        if (op == "diff") return difference(a, *b);
        if (op == "prod") return productset(a, *b);
        if (op == "dilate") return dilate(xi, a);
        if (op == "itersum") return iterated_sumset(k, a);
        if (op == "iterprod") return iterated_product(k, a);
        if (op == "grow") return grow_step(a);
        if (op == "ratio") return ratio_difference_quotient(a);
        throw Error("unknown setop operation: " + op);
    }();

    if (format == "plain") {
        bool first = true;
        out.for_each([&](uint32_t x) {
            std::cout << (first ? "" : " ") << x;
            first = false;
        });
        std::cout << "\n";
    } else {
        emit(set_to_json(out));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact additive-combinatorics toolkit over F_p"};
    app.require_subcommand(1);

    // ---- setop
    std::string so_op, so_format = "json";
    uint32_t so_p = 0, so_xi = 0, so_k = 1;
    SetInput so_a, so_b;
    auto* setop = app.add_subcommand("setop", "set algebra: sum, diff, prod, dilate, itersum, iterprod, grow, ratio");
    setop->add_option("operation", so_op, "one of sum|diff|prod|dilate|itersum|iterprod|grow|ratio")->required();
    setop->add_option("--p", so_p, "prime modulus");
    setop->add_option("--a", so_a.inline_list, "set A as comma-separated residues");
    setop->add_option("--a-file", so_a.file, "set A as a JSON set literal file");
    setop->add_option("--b", so_b.inline_list, "set B as comma-separated residues");
    setop->add_option("--b-file", so_b.file, "set B as a JSON set literal file");
    setop->add_option("--xi", so_xi, "dilation ratio (dilate)");
    setop->add_option("--k", so_k, "iteration count (itersum/iterprod)");
    setop->add_option("--format", so_format, "json|plain")->check(CLI::IsMember({"json", "plain"}));

    // ---- energy
    uint32_t en_p = 0;
    SetInput en_a, en_b;
    auto* energy = app.add_subcommand("energy", "additive energy omega_+(A,B) and the exact quadruple count");
    energy->add_option("--p", en_p, "prime modulus");
    energy->add_option("--a", en_a.inline_list, "set A");
    energy->add_option("--a-file", en_a.file, "set A literal file");
    energy->add_option("--b", en_b.inline_list, "set B (defaults to A)");
    energy->add_option("--b-file", en_b.file, "set B literal file");

    // ---- alg
    uint32_t al_p = 0;
    double al_k = 2.0;
    SetInput al_a;
    auto* alg = app.add_subcommand("alg", "Alg_K(A): dilation ratios with |A + xi*A| <= K|A|");
    alg->add_option("--p", al_p, "prime modulus");
    alg->add_option("--a", al_a.inline_list, "set A");
    alg->add_option("--a-file", al_a.file, "set A literal file");
    alg->add_option("--K", al_k, "threshold K >= 1")->required();

    // ---- spec
    uint32_t sp_p = 0, sp_d = 0;
    double sp_alpha = 0.5;
    size_t sp_cap = 4096;
    SetInput sp_a;
    auto* specc = app.add_subcommand("spec", "large spectrum Spec_alpha(A)");
    specc->add_option("--p", sp_p, "prime modulus");
    specc->add_option("--a", sp_a.inline_list, "set A");
    specc->add_option("--a-file", sp_a.file, "set A literal file");
    specc->add_option("--subgroup", sp_d, "use the multiplicative subgroup of this order (enables H-invariance)");
    specc->add_option("--alpha", sp_alpha, "threshold in (0, 1]")->required();
    specc->add_option("--magnitudes-cap", sp_cap, "omit the magnitude table above this p");

    // ---- gauss
    std::string ga_range, ga_format = "csv";
    double ga_delta = 0.0;
    auto* gauss = app.add_subcommand("gauss", "normalized Gauss-sum maxima over subgroups, per prime");
    gauss->add_option("--p-range", ga_range, "prime range as min:max")->required();
    gauss->add_option("--min-delta", ga_delta, "keep subgroups with |H| >= p^delta");
    gauss->add_option("--format", ga_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // ---- scale
    uint32_t sc_p = 0, sc_d = 0, sc_j = 3;
    double sc_eta = 0.5;
    auto* scale = app.add_subcommand("scale", "pigeonhole scale finder over Spec_{alpha_i}(H)");
    scale->add_option("--p", sc_p, "prime modulus")->required();
    scale->add_option("--subgroup", sc_d, "subgroup order d | p-1")->required();
    scale->add_option("--eta", sc_eta, "initial threshold in (0, 1)")->required();
    scale->add_option("--J", sc_j, "number of pigeonhole levels")->required();

    // ---- verify
    std::string ve_checks, ve_p, ve_alpha;
    uint64_t ve_random = 0, ve_seed = 1;
    uint32_t ve_max_size = 0;
    bool ve_all = false, ve_subgroups = false, ve_summary_only = false;
    unsigned ve_par = default_parallelism();
    auto* verify = app.add_subcommand("verify", "run verification sweeps; JSON-lines records plus a summary");
    verify->add_option("--checks", ve_checks, "comma-separated check ids")->required();
    verify->add_option("--p", ve_p, "comma-separated primes")->required();
    verify->add_flag("--all-subsets", ve_all, "exhaustive over nonempty subsets");
    verify->add_option("--max-size", ve_max_size, "cap |A| for --all-subsets");
    verify->add_option("--random", ve_random, "number of seeded random subsets per prime");
    verify->add_option("--seed", ve_seed, "random generator seed");
    verify->add_flag("--subgroups", ve_subgroups, "one instance per multiplicative subgroup");
    verify->add_option("--alpha-grid", ve_alpha, "comma-separated alpha values for spectrum checks");
    verify->add_option("--parallelism", ve_par, "worker threads (default: SUMPROD_PARALLELISM or 1)");
    verify->add_flag("--summary-only", ve_summary_only, "suppress per-record output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*setop) return cmd_setop(so_op, so_p, so_a, so_b, so_xi, so_k, so_format);

        if (*energy) {
            std::optional<PrimeModulus> m;
            FpSet a = en_a.resolve(m, en_p, "a");
            FpSet b = en_b.given() ? en_b.resolve(m, en_p, "b") : a;
            EnergyReport r = additive_energy(a, b);
            json j = energy_to_json(r);
            j["sumset_size"] = sumset(a, b).size();
            emit(j);
            return 0;
        }

        if (*alg) {
            std::optional<PrimeModulus> m;
            FpSet a = al_a.resolve(m, al_p, "a");
            emit(alg_to_json(alg_set(a, Rat::from_double_exact(al_k))));
            return 0;
        }

        if (*specc) {
            std::optional<PrimeModulus> m;
            if (sp_d > 0) {
                if (sp_p == 0) throw Error("--subgroup needs --p");
                PrimeModulus mm = make_modulus(sp_p);
                SubgroupSpec h = subgroup(mm, sp_d);
                emit(spectrum_to_json(spec(h.elements, sp_alpha, &h), sp_cap));
            } else {
                FpSet a = sp_a.resolve(m, sp_p, "a");
                emit(spectrum_to_json(spec(a, sp_alpha), sp_cap));
            }
            return 0;
        }

        if (*gauss) {
            auto sep = ga_range.find(':');
            if (sep == std::string::npos) throw Error("--p-range must look like 3:100");
            uint32_t lo = static_cast<uint32_t>(std::stoul(ga_range.substr(0, sep)));
            uint32_t hi = static_cast<uint32_t>(std::stoul(ga_range.substr(sep + 1)));
            auto rows = gauss_decay_table(lo, hi, ga_delta);
            if (ga_format == "csv") {
                std::cout << kGaussCsvHeader << "\n";
                for (const auto& row : rows) std::cout << gauss_row_csv(row) << "\n";
            } else {
                for (const auto& row : rows)
                    emit(json{{"p", row.p},
                              {"d", row.d},
                              {"delta", json_double(row.delta)},
                              {"max_gauss", json_double(row.max_gauss)},
                              {"delta_prime", json_double(row.delta_prime)}});
            }
            return 0;
        }

        if (*scale) {
            PrimeModulus m = make_modulus(sc_p);
            ScaleTrace t = scale_finder(subgroup(m, sc_d), sc_eta, sc_j);
            if (t.trivial_start) std::cerr << "warning: Spec_eta(H) = {0}; eta may be too large\n";
            emit(scale_trace_to_json(t));
            return 0;
        }

        if (*verify) {
            SweepConfig cfg;
            cfg.p_list = parse_uint_list(ve_p, "--p");
            std::sort(cfg.p_list.begin(), cfg.p_list.end());
            cfg.p_list.erase(std::unique(cfg.p_list.begin(), cfg.p_list.end()), cfg.p_list.end());
            int gens = int(ve_all) + int(ve_random > 0) + int(ve_subgroups);
            if (gens != 1) throw Error("choose exactly one of --all-subsets, --random N, --subgroups");
            cfg.generator = ve_all ? GeneratorKind::AllSubsets
                                   : (ve_subgroups ? GeneratorKind::Subgroups : GeneratorKind::Random);
            cfg.max_size = ve_max_size;
            cfg.random_count = ve_random;
            cfg.seed = ve_seed;
            {
                std::stringstream ss(ve_checks);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) cfg.checks.push_back(tok);
            }
            if (cfg.checks.empty()) throw Error("--checks must name at least one check");
            if (!ve_alpha.empty()) cfg.alpha_grid = parse_double_list(ve_alpha, "--alpha-grid");
            cfg.parallelism = ve_par;

            SweepSummary s = sweep(cfg, [&](const VerificationRecord& r) {
                if (!ve_summary_only) emit(record_to_json(r));
            });
            emit(json{{"summary", {{"records", s.records}, {"passed", s.passed}, {"failed", s.failed}}}});
            return s.failed == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
