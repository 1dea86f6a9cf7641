/*
 * Copyright 2026 The ltfprg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Batch front-end: parameter planning, generation, counting, fooling
// measurement, verification sweeps, and diagnostics. Every run emits its
// fully resolved configuration; all randomness is keyed by --stream-id.

#include <iostream>

#include <CLI11.hpp>

#include "ltfprg/diagnostics.hpp"
#include "ltfprg/problem_io.hpp"

namespace {

using namespace ltfprg;
using nlohmann::json;

struct CommonOpts {
    std::string input;
    std::string params_path;
    std::string output;
    uint64_t n = 0;
    uint64_t k = 1;
    uint64_t t = 1;
    uint32_t s = 0;
    double tau = 0.0;
    double delta_target = 0.1;
    uint64_t N = 100000;
    uint64_t stream_id = 0;
    uint64_t cap = 24;
    unsigned workers = 1;
    std::string mode = "exact-both";
    std::string format = "json";
    prggen::Overrides ov;
    // raw override holders (CLI11 needs stable storage)
    uint32_t ov_ell = 0, ov_rh = 0, ov_rb = 0;
    double ov_dcnf = 0.0;
};

void add_override_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--ell", o.ov_ell, "pin bucket count (power of two)");
    cmd->add_option("--r-hash", o.ov_rh, "pin hash independence");
    cmd->add_option("--r-bucket", o.ov_rb, "pin bucket independence");
    cmd->add_option("--delta-cnf", o.ov_dcnf, "pin CNF-fooling accuracy");
    cmd->add_option("--c-br", o.ov.c_br, "constant in the r_bucket CNF term")
        ->default_val(1.0);
}

void collect_overrides(CommonOpts& o) {
    if (o.ov_ell) o.ov.ell = o.ov_ell;
    if (o.ov_rh) o.ov.r_hash = o.ov_rh;
    if (o.ov_rb) o.ov.r_bucket = o.ov_rb;
    if (o.ov_dcnf > 0.0) o.ov.delta_cnf = o.ov_dcnf;
}

json resolved_config(const std::string& subcommand, const CommonOpts& o) {
    json cfg{{"subcommand", subcommand},
             {"stream_id", o.stream_id},
             {"cap_bits", o.cap},
             {"workers", o.workers},
             {"N", o.N},
             {"mode", o.mode},
             {"format", o.format}};
    if (!o.input.empty()) cfg["input"] = o.input;
    if (!o.params_path.empty()) cfg["params"] = o.params_path;
    if (!o.output.empty()) cfg["output"] = o.output;
    if (o.ov.ell) cfg["ell_override"] = *o.ov.ell;
    if (o.ov.r_hash) cfg["r_hash_override"] = *o.ov.r_hash;
    if (o.ov.r_bucket) cfg["r_bucket_override"] = *o.ov.r_bucket;
    if (o.ov.delta_cnf) cfg["delta_cnf_override"] = *o.ov.delta_cnf;
    cfg["c_br"] = o.ov.c_br;
    return cfg;
}

void emit(const json& report, const CommonOpts& o) {
    std::string text = report.dump(2) + "\n";
    if (o.output.empty())
        std::cout << text;
    else
        io::write_text(o.output, text);
}

// Loads explicit params when --params is given, else plans from the flags.
prggen::GenParams resolve_params(const CommonOpts& o, uint64_t n) {
    if (!o.params_path.empty()) return io::load_params(o.params_path);
    if (o.tau <= 0.0)
        throw param_error("either --params or --tau (with --k/--s) is required");
    return prggen::plan_params(n, o.k, o.s, o.tau, o.delta_target, o.ov);
}

eval_count::BoolFn intersection_fn(const ltf::Intersection& F) {
    return [F](std::span<const int8_t> x) { return ltf::evaluate_intersection(F, x); };
}

int run(int argc, char** argv) {
    CLI::App app{"explicit PRG for intersections of sparse-or-regular LTFs: "
                 "planning, generation, counting, and verification"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", o.output, "write the JSON report here (default stdout)");
        cmd->add_option("--stream-id", o.stream_id, "RNG stream id")->default_val(0);
        cmd->add_option("--cap", o.cap, "exact-enumeration cap (bits)")->default_val(24);
        cmd->add_option("--workers", o.workers, "worker threads")->default_val(1);
    };

    auto* plan = app.add_subcommand("plan", "compute a generator parameter schedule");
    plan->add_option("--n", o.n, "output length")->required();
    plan->add_option("--k", o.k, "number of LTFs")->default_val(1);
    plan->add_option("--s", o.s, "sparsity bound");
    plan->add_option("--tau", o.tau, "regularity parameter");
    plan->add_option("--t", o.t, "weight bound (plan from weight instead of --s/--tau)");
    plan->add_option("--delta-target", o.delta_target, "target fooling error")->default_val(0.1);
    add_override_flags(plan, o);
    add_common(plan);

    auto* gen = app.add_subcommand("gen", "emit one pseudorandom output string");
    gen->add_option("--params", o.params_path, "GenParams JSON")->required();
    std::string seed_hex;
    uint64_t seed_counter = 0;
    bool have_counter = false;
    gen->add_option("--seed-hex", seed_hex, "seed in normative hex layout");
    gen->add_option("--seed-counter", seed_counter, "seed as enumeration counter")
        ->each([&](const std::string&) { have_counter = true; });
    add_common(gen);

    auto* count = app.add_subcommand("count", "approximate satisfying-assignment count");
    count->add_option("--input", o.input, "problem JSON")->required();
    count->add_option("--params", o.params_path, "GenParams JSON");
    count->add_option("--k", o.k, "")->default_val(1);
    count->add_option("--s", o.s, "");
    count->add_option("--tau", o.tau, "");
    count->add_option("--delta-target", o.delta_target, "")->default_val(0.1);
    count->add_option("--mode", o.mode, "exact-seeds | mc")->default_val("exact-seeds");
    count->add_option("--N", o.N, "Monte Carlo samples")->default_val(100000);
    add_override_flags(count, o);
    add_common(count);

    auto* fool = app.add_subcommand("fool", "measure fooling error");
    fool->add_option("--input", o.input, "problem JSON")->required();
    fool->add_option("--params", o.params_path, "GenParams JSON");
    fool->add_option("--k", o.k, "")->default_val(1);
    fool->add_option("--s", o.s, "");
    fool->add_option("--tau", o.tau, "");
    fool->add_option("--delta-target", o.delta_target, "")->default_val(0.1);
    fool->add_option("--mode", o.mode, "exact-both | mc")->default_val("exact-both");
    fool->add_option("--N", o.N, "Monte Carlo samples")->default_val(100000);
    add_override_flags(fool, o);
    add_common(fool);

    auto* dich = app.add_subcommand("dichotomy", "classify constraints sparse-or-regular");
    dich->add_option("--input", o.input, "problem JSON")->required();
    dich->add_option("--s", o.s, "sparsity bound")->required();
    add_common(dich);

    auto* vk = app.add_subcommand("verify-kwise", "exhaustive independence verification");
    std::string kind = "bitgen";
    uint32_t vk_l = 2, vk_r = 2, vk_maxr = 2;
    vk->add_option("--kind", kind, "bitgen | hash")->default_val("bitgen");
    vk->add_option("--n", o.n, "domain size")->required();
    vk->add_option("--l", vk_l, "bucket count (hash kind)")->default_val(2);
    vk->add_option("--r", vk_r, "independence parameter")->required();
    vk->add_option("--max-r", vk_maxr, "verify up to this subset size")->required();
    add_common(vk);

    auto* hs = app.add_subcommand("hybrid-scan", "expectations along the hybrid chain");
    hs->add_option("--input", o.input, "problem JSON")->required();
    hs->add_option("--params", o.params_path, "GenParams JSON")->required();
    hs->add_option("--mode", o.mode, "exact | mc")->default_val("mc");
    hs->add_option("--N", o.N, "samples per level")->default_val(100000);
    hs->add_option("--format", o.format, "json | csv")->default_val("json");
    add_common(hs);

    auto* bs = app.add_subcommand("bucket-stats", "sampled per-bucket mass statistic");
    bs->add_option("--input", o.input, "problem JSON")->required();
    bs->add_option("--params", o.params_path, "GenParams JSON")->required();
    bs->add_option("--N", o.N, "hash samples")->default_val(1000);
    bs->add_option("--format", o.format, "json | csv")->default_val("json");
    add_common(bs);

    auto* br = app.add_subcommand("br-test", "bounded-independence CNF fooling test");
    br->add_option("--input", o.input, "CNF JSON")->required();
    uint32_t br_r = 2;
    br->add_option("--r", br_r, "independence parameter")->required();
    add_common(br);

    auto* strip = app.add_subcommand("strip", "Gaussian strip probability");
    strip->add_option("--input", o.input, "problem JSON")->required();
    double lambda = 0.1;
    strip->add_option("--lambda", lambda, "strip width")->required();
    strip->add_option("--N", o.N, "samples")->default_val(100000);
    add_common(strip);

    auto* inv = app.add_subcommand("invariance", "uniform-vs-Gaussian inner probability gap");
    inv->add_option("--input", o.input, "problem JSON")->required();
    inv->add_option("--N", o.N, "samples")->default_val(100000);
    add_common(inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    collect_overrides(o);

    auto normalized_columns = [](const ltf::Intersection& F) {
        diagnostics::ColumnMatrix W;
        std::vector<double> theta;
        for (const auto& f : F.ltfs) {
            auto nf = ltf::normalize(f);
            W.push_back(nf.unit_weights);
            theta.push_back(nf.theta_scaled);
        }
        return std::make_pair(W, theta);
    };

    if (plan->parsed()) {
        prggen::GenParams p = plan->count("--t")
                                  ? prggen::plan_from_weight(o.n, o.k, o.t, o.delta_target, o.ov)
                                  : prggen::plan_params(o.n, o.k, o.s, o.tau, o.delta_target, o.ov);
        json rep{{"config", resolved_config("plan", o)}, {"params", io::params_to_json(p)}};
        if (o.tau > 0.0) {
            auto bound = prggen::theoretical_error_bound(p, o.k, o.tau);
            json terms;
            for (const auto& [name, v] : bound.terms) terms[name] = v;
            rep["heuristic_bound"] = {{"label", "HEURISTIC"},
                                      {"lambda", bound.lambda},
                                      {"delta_estimate", bound.delta_estimate},
                                      {"terms", terms}};
        }
        emit(rep, o);
        return 0;
    }

    if (gen->parsed()) {
        auto p = io::load_params(o.params_path);
        prggen::GenSeed s = !seed_hex.empty() ? prggen::seed_from_hex(p, seed_hex)
                                              : prggen::seed_from_counter(p, seed_counter);
        (void)have_counter;
        auto y = prggen::generate(p, s);
        std::string ystr;
        for (int8_t v : y) ystr.push_back(v == 1 ? '+' : '-');
        json rep{{"config", resolved_config("gen", o)},
                 {"params", io::params_to_json(p)},
                 {"seed_hex", prggen::seed_to_hex(p, s)},
                 {"y", ystr}};
        emit(rep, o);
        return 0;
    }

    if (count->parsed() || fool->parsed()) {
        bool counting = count->parsed();
        auto prob = io::load_problem(o.input);
        auto F = io::problem_to_intersection(prob);
        if (o.params_path.empty() && o.k == 1) o.k = F.ltfs.size();
        auto p = resolve_params(o, prob.n);
        auto fn = intersection_fn(F);
        json rep{{"config", resolved_config(counting ? "count" : "fool", o)},
                 {"params", io::params_to_json(p)}};
        if (counting) {
            auto mode = o.mode == "mc" ? eval_count::FoolMode::ExactUniformMcSeeds
                                       : eval_count::FoolMode::ExactBoth;
            auto cr = eval_count::approx_count(fn, prob.n, p, mode, o.N, o.stream_id, o.cap,
                                               o.workers);
            rep["n"] = cr.n;
            rep["satisfying_estimate"] = cr.satisfying_estimate;
            rep["exact"] = cr.exact;
            if (cr.exact) rep["exact_count"] = cr.exact_count.to_string();
            rep["expectation"] = io::expectation_to_json(cr.expectation);
        } else {
            auto mode = o.mode == "mc" ? eval_count::FoolMode::ExactUniformMcSeeds
                                       : eval_count::FoolMode::ExactBoth;
            auto fr = eval_count::fooling_error(fn, prob.n, p, mode, o.N, o.stream_id, o.cap,
                                                o.workers);
            rep["err"] = fr.err;
            rep["e_gen"] = io::expectation_to_json(fr.e_gen);
            rep["e_uniform"] = io::expectation_to_json(fr.e_uniform);
            rep["method"] = o.mode;
            rep["uncertainty"] = fr.uncertainty;
        }
        emit(rep, o);
        return 0;
    }

    if (dich->parsed()) {
        auto prob = io::load_problem(o.input);
        auto F = io::problem_to_intersection(prob);
        json rows = json::array();
        for (size_t j = 0; j < F.ltfs.size(); ++j) {
            const auto& f = F.ltfs[j];
            auto st = ltf::weight_and_sparsity(f);
            json row{{"index", j + 1}, {"t", st.t}, {"sparsity", st.s}};
            auto d = ltf::classify_dichotomy(f, o.s);
            row["class"] = d.sparse ? "sparse" : "regular";
            if (!d.sparse) {
                row["tau_guarantee"] = d.tau;
                row["tau_min"] = ltf::regularity_param(f);
            }
            rows.push_back(std::move(row));
        }
        emit(json{{"config", resolved_config("dichotomy", o)}, {"s", o.s}, {"constraints", rows}},
             o);
        return 0;
    }

    if (vk->parsed()) {
        kwise::IndependenceReport r;
        if (kind == "hash")
            r = kwise::verify_independence(kwise::make_hash_family(o.n, vk_l, vk_r), vk_maxr,
                                           o.cap);
        else if (kind == "bitgen")
            r = kwise::verify_independence(kwise::make_bitgen(o.n, vk_r), vk_maxr, o.cap);
        else
            throw param_error("verify-kwise: kind must be bitgen or hash");
        json rep{{"config", resolved_config("verify-kwise", o)},
                 {"kind", kind},
                 {"pass", r.pass},
                 {"seed_count", r.seed_count},
                 {"max_r", r.max_r},
                 {"entry_count", r.entries.size()}};
        if (!r.pass) rep["first_failure"] = r.first_failure;
        emit(rep, o);
        return 0;
    }

    if (hs->parsed()) {
        auto prob = io::load_problem(o.input);
        auto F = io::problem_to_intersection(prob);
        auto p = io::load_params(o.params_path);
        auto scan = diagnostics::hybrid_scan(intersection_fn(F), p, o.mode == "exact", o.N,
                                             o.stream_id, o.cap);
        if (o.format == "csv") {
            std::string csv = "b,value,error,method,sample_count,stream_id,seed_len_bits\n";
            for (size_t b = 0; b < scan.size(); ++b) {
                csv += std::to_string(b) + "," + std::to_string(scan[b].value) + "," +
                       std::to_string(scan[b].error) + "," +
                       (scan[b].is_exact ? "exact" : "mc") + "," +
                       std::to_string(scan[b].sample_count) + "," + std::to_string(o.stream_id) +
                       "," + std::to_string(p.seed_len_bits) + "\n";
            }
            if (o.output.empty())
                std::cout << csv;
            else
                io::write_text(o.output, csv);
            return 0;
        }
        json levels = json::array();
        for (size_t b = 0; b < scan.size(); ++b) {
            json e = io::expectation_to_json(scan[b]);
            e["b"] = b;
            levels.push_back(std::move(e));
        }
        emit(json{{"config", resolved_config("hybrid-scan", o)},
                  {"params", io::params_to_json(p)},
                  {"levels", levels}},
             o);
        return 0;
    }

    if (bs->parsed()) {
        auto prob = io::load_problem(o.input);
        auto F = io::problem_to_intersection(prob);
        auto p = io::load_params(o.params_path);
        auto [W, theta] = normalized_columns(F);
        auto r = diagnostics::expected_bucket_statistic(W, p, o.N, o.stream_id);
        json per = json::array();
        for (size_t b = 0; b < r.example.per_bucket.size(); ++b)
            per.push_back(r.example.per_bucket[b]);
        emit(json{{"config", resolved_config("bucket-stats", o)},
                  {"params", io::params_to_json(p)},
                  {"estimate", r.estimate},
                  {"std_error", r.std_error},
                  {"bound", r.bound},
                  {"bound_label", "HEURISTIC"},
                  {"heuristic_breach", r.heuristic_breach},
                  {"example_per_bucket", per}},
             o);
        return 0;
    }

    if (br->parsed()) {
        uint64_t n = 0;
        auto G = io::load_cnf(o.input, n);
        auto r = diagnostics::br_fooling_test(G, br_r, n, o.cap);
        emit(json{{"config", resolved_config("br-test", o)},
                  {"r", br_r},
                  {"n", n},
                  {"err", r.err.to_string()},
                  {"err_value", r.err.to_double()},
                  {"e_kwise", r.e_kwise.to_string()},
                  {"e_uniform", r.e_uniform.to_string()},
                  {"seed_bits", r.seed_bits},
                  {"heuristic_delta", r.heuristic_delta},
                  {"heuristic_breach", r.heuristic_breach}},
             o);
        return 0;
    }

    if (strip->parsed() || inv->parsed()) {
        auto prob = io::load_problem(o.input);
        auto F = io::problem_to_intersection(prob);
        auto [W, theta] = normalized_columns(F);
        if (strip->parsed()) {
            auto r = diagnostics::strip_probability_mc(W, theta, lambda, o.N, o.stream_id);
            emit(json{{"config", resolved_config("strip", o)},
                      {"lambda", lambda},
                      {"estimate", r.estimate},
                      {"uncertainty", r.uncertainty},
                      {"bound", r.bound},
                      {"bound_label", "HEURISTIC"}},
                 o);
        } else {
            auto r = diagnostics::invariance_gap_mc(W, theta, o.N, o.stream_id);
            emit(json{{"config", resolved_config("invariance", o)},
                      {"gap", r.gap},
                      {"p_uniform", r.p_uniform},
                      {"p_gaussian", r.p_gaussian},
                      {"uncertainty", r.uncertainty},
                      {"bound", r.bound},
                      {"bound_label", "HEURISTIC"}},
                 o);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ltfprg::cap_error& e) {
        std::cerr << "cap refused: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
