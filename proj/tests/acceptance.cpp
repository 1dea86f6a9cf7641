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

// Acceptance gate: one pass/fail line per criterion. Exactly-derivable facts
// gate; heuristic bound comparisons print warnings only. Run with
// --dump-goldens to print the regression values this file freezes.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ltfprg/diagnostics.hpp"

using namespace ltfprg;

namespace {

bool g_dump_goldens = false;
int g_failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

void heuristic_note(const std::string& msg) {
    std::printf("HEURISTIC warning: %s\n", msg.c_str());
}

ltf::Point point_from_mask(uint64_t mask, uint32_t n) {
    ltf::Point x(n);
    for (uint32_t i = 0; i < n; ++i) x[i] = ((mask >> i) & 1) ? int8_t{1} : int8_t{-1};
    return x;
}

prggen::GenParams tiny18_params() {
    prggen::Overrides ov;
    ov.ell = 2;
    ov.r_hash = 2;
    ov.r_bucket = 2;
    ov.delta_cnf = 0.5;
    return prggen::plan_params(8, 2, 1, 0.5, 0.5, ov);
}

// ---------------------------------------------------------------------------
// Criterion 1: exhaustive independence verification, zero tolerance.

void criterion_1() {
    struct BitCase { uint64_t n; uint32_t r; unsigned m; };
    struct HashCase { uint64_t n; uint32_t l; uint32_t r; unsigned m; };
    const BitCase bit_cases[] = {{4, 2, 2}, {8, 3, 3}, {8, 4, 3}};
    const HashCase hash_cases[] = {{8, 2, 2, 3}, {8, 4, 2, 3}, {8, 2, 4, 3}};
    bool ok = true;
    std::string detail;
    for (auto& c : bit_cases) {
        auto spec = kwise::make_bitgen(c.n, c.r);
        if (spec.m != c.m) { ok = false; detail = "bitgen field degree mismatch"; }
        auto rep = kwise::verify_independence(spec, c.r);
        if (!rep.pass) { ok = false; detail = "bitgen: " + rep.first_failure; }
    }
    for (auto& c : hash_cases) {
        auto spec = kwise::make_hash_family(c.n, c.l, c.r);
        if (spec.m != c.m) { ok = false; detail = "hash field degree mismatch"; }
        auto rep = kwise::verify_independence(spec, c.r);
        if (!rep.pass) { ok = false; detail = "hash: " + rep.first_failure; }
    }
    report(1, "exhaustive r-wise independence, 3 bit generators + 3 hash families", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 2: generator definition on 1000 random (params, seed) pairs.

void criterion_2() {
    bool ok = true;
    rng::SubStream rs(1002, 0);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        prggen::Overrides ov;
        ov.ell = (rs.next_u64() & 1) ? 2u : 4u;
        ov.r_hash = 2 + static_cast<uint32_t>(rs.next_u64() % 3);
        ov.r_bucket = 2 + static_cast<uint32_t>(rs.next_u64() % 5);
        ov.delta_cnf = 0.5;
        uint64_t n = 2 + rs.next_u64() % 15;
        auto p = prggen::plan_params(n, 2, 1, 0.5, 0.5, ov);
        auto seed = eval_count::random_gen_seed(p, 1003, static_cast<uint64_t>(trial));
        auto y = prggen::generate(p, seed);
        auto hspec = p.hash_spec();
        auto bspec = p.bucket_spec();
        for (uint64_t i = 1; i <= n; ++i) {
            uint32_t b = kwise::hash_eval(hspec, seed.hash_seed, i);
            if (y[i - 1] != kwise::bitgen_eval(bspec, seed.bucket_seeds[b - 1], i)) ok = false;
        }
    }
    report(2, "Y restricted to each bucket equals that bucket's generator, 1000 random pairs", ok);
}

// ---------------------------------------------------------------------------
// Criterion 3: full-independence null test, err exactly 0.

void criterion_3() {
    prggen::Overrides ov;
    ov.ell = 2;
    ov.r_hash = 2;
    ov.r_bucket = 4;
    ov.delta_cnf = 0.5;
    auto p = prggen::plan_params(4, 2, 1, 0.5, 0.5, ov);
    ltf::Intersection F;
    F.n = 4;
    F.ltfs = {ltf::Ltf{{1, 1, 1, 1}, Rational(0)}, ltf::Ltf{{1, -1, 0, 1}, Rational(1, 2)}};
    auto fn = [&](std::span<const int8_t> x) { return ltf::evaluate_intersection(F, x); };
    auto rep = eval_count::fooling_error(fn, 4, p, eval_count::FoolMode::ExactBoth);
    bool ok = rep.err == 0.0 && rep.uncertainty == 0.0 &&
              rep.e_gen.exact == rep.e_uniform.exact;
    report(3, "r_bucket >= n makes exact fooling error identically 0", ok);
}

// ---------------------------------------------------------------------------
// Criterion 4: independent double-enumeration oracle on the 18-bit config.

// From-scratch GF(2^3) arithmetic, modulus x^3 + x + 1, independent of the
// library implementation.
uint32_t oracle_gf8_mul(uint32_t a, uint32_t b) {
    uint32_t prod = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (((a >> i) & 1) && ((b >> j) & 1)) prod ^= 1u << (i + j);
    for (int bit = 4; bit >= 3; --bit)
        if ((prod >> bit) & 1) prod ^= 0xBu << (bit - 3);
    return prod;
}

// Output string of the 18-bit generator for seed counter c, rebuilt from the
// normative layout alone: hash coefficients first, then bucket seeds 1 and 2,
// each coefficient 3 bits little-endian, constant term first.
void oracle_generate18(uint64_t c, int8_t y[8]) {
    uint32_t h0 = c & 7, h1 = (c >> 3) & 7;
    uint32_t b0c0 = (c >> 6) & 7, b0c1 = (c >> 9) & 7;
    uint32_t b1c0 = (c >> 12) & 7, b1c1 = (c >> 15) & 7;
    for (uint32_t i = 1; i <= 8; ++i) {
        uint32_t alpha = i - 1;
        uint32_t bucket = (h0 ^ oracle_gf8_mul(h1, alpha)) & 1; // 0-based, l = 2
        uint32_t q = bucket == 0 ? (b0c0 ^ oracle_gf8_mul(b0c1, alpha))
                                 : (b1c0 ^ oracle_gf8_mul(b1c1, alpha));
        y[i - 1] = (q & 1) ? int8_t{-1} : int8_t{1};
    }
}

struct GoldenCase {
    const char* name;
    eval_count::BoolFn fn;
    const char* golden; // frozen exact expectation as p/q
};

void criterion_4() {
    auto p = tiny18_params();
    ltf::Intersection maj8;
    maj8.n = 8;
    maj8.ltfs = {ltf::Ltf{std::vector<long long>(8, 1), Rational(0)}};

    ltf::Intersection inter2;
    inter2.n = 8;
    inter2.ltfs = {ltf::Ltf{{1, 1, 1, 0, 0, 0, 0, 0}, Rational(0)},
                   ltf::Ltf{{0, 0, 0, 1, 1, 1, 1, 1}, Rational(0)}};

    ltf::CnfFormula cnf;
    cnf.width = 2;
    cnf.clauses = {{ltf::Literal{1, -1}, ltf::Literal{2, -1}},
                   {ltf::Literal{3, 1}, ltf::Literal{4, -1}},
                   {ltf::Literal{5, -1}, ltf::Literal{8, 1}}};

    std::vector<GoldenCase> cases;
    cases.push_back({"MAJ8",
                     [&](std::span<const int8_t> x) { return evaluate_intersection(maj8, x); },
                     "-164864/262144"});
    cases.push_back({"k=2 weight-1 intersection",
                     [&](std::span<const int8_t> x) { return evaluate_intersection(inter2, x); },
                     "174080/262144"});
    cases.push_back({"3-clause width-2 CNF",
                     [&](std::span<const int8_t> x) { return evaluate_cnf(cnf, x); },
                     "47104/262144"});

    bool ok = true;
    std::string detail;
    for (auto& gc : cases) {
        long long acc = 0;
        int8_t y[8];
        for (uint64_t c = 0; c < (1u << 18); ++c) {
            oracle_generate18(c, y);
            acc += gc.fn(std::span<const int8_t>(y, 8));
        }
        Rational oracle(acc, 1 << 18);
        auto lib = eval_count::exact_gen_expectation(gc.fn, p, 24, 2);
        if (g_dump_goldens)
            std::printf("golden criterion 4 %s: %lld/262144 -> %s\n", gc.name, acc,
                        lib.exact.to_string().c_str());
        if (!(lib.exact == oracle)) {
            ok = false;
            detail = std::string(gc.name) + ": library " + lib.exact.to_string() + " vs oracle " +
                     oracle.to_string();
        }
        if (!(oracle == Rational::parse(gc.golden))) {
            ok = false;
            detail = std::string(gc.name) + ": oracle " + oracle.to_string() +
                     " differs from frozen golden " + gc.golden;
        }
    }
    report(4, "18-bit config: exact seed expectations equal the independent oracle and goldens",
           ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 5: dichotomy, exhaustive with exact integer arithmetic.

void criterion_5() {
    bool ok = true;
    for (uint32_t n = 1; n <= 5 && ok; ++n) {
        uint64_t combos = 1;
        for (uint32_t i = 0; i < n; ++i) combos *= 5;
        for (uint64_t code = 0; code < combos && ok; ++code) {
            std::vector<long long> w(n);
            uint64_t cc = code;
            uint32_t nonzero = 0;
            long long t = 0;
            __int128 sum2 = 0, sum4 = 0;
            for (uint32_t i = 0; i < n; ++i) {
                w[i] = static_cast<long long>(cc % 5) - 2;
                cc /= 5;
                if (w[i] != 0) ++nonzero;
                t = std::max(t, std::llabs(w[i]));
                sum2 += w[i] * w[i];
                sum4 += (w[i] * w[i]) * (w[i] * w[i]);
            }
            if (nonzero == 0) continue;
            for (long long th = -2; th <= 2; ++th) {
                ltf::Ltf f{w, Rational(th)};
                for (uint32_t s = 0; s <= 5; ++s) {
                    auto d = ltf::classify_dichotomy(f, s);
                    if (d.sparse != (nonzero <= s)) { ok = false; break; }
                    if (!d.sparse) {
                        // regularity_param <= t/sqrt(s+1), i.e.
                        // (s+1) sum w^4 <= t^2 (sum w^2)^2 in exact integers.
                        __int128 lhs = static_cast<__int128>(s + 1) * sum4;
                        __int128 rhs = static_cast<__int128>(t) * t * sum2 * sum2;
                        if (lhs > rhs) { ok = false; break; }
                    }
                }
            }
        }
    }
    report(5, "sparse-or-regular dichotomy, exhaustive n<=5 |w|<=2 theta in [-2,2] s<=5", ok);
}

// ---------------------------------------------------------------------------
// Criterion 6: CNF rewrite equivalence, exhaustive.

void criterion_6() {
    bool ok = true;
    for (uint32_t n = 1; n <= 4 && ok; ++n) {
        uint64_t combos = 1;
        for (uint32_t i = 0; i < n; ++i) combos *= 5;
        for (uint64_t code = 0; code < combos && ok; ++code) {
            std::vector<long long> w(n);
            uint64_t cc = code;
            uint32_t nonzero = 0;
            for (uint32_t i = 0; i < n; ++i) {
                w[i] = static_cast<long long>(cc % 5) - 2;
                cc /= 5;
                if (w[i] != 0) ++nonzero;
            }
            for (long long th = -3; th <= 3 && ok; ++th) {
                ltf::Ltf f{w, Rational(th)};
                auto g = ltf::sparse_to_cnf(f);
                if (g.clauses.size() > (uint64_t{1} << nonzero)) ok = false;
                for (auto& clause : g.clauses)
                    if (clause.size() > nonzero) ok = false;
                for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                    auto x = point_from_mask(mask, n);
                    if (ltf::evaluate_cnf(g, x) != ltf::evaluate_ltf(f, x)) ok = false;
                }
            }
        }
    }
    report(6, "sparse_to_cnf equals its source LTF, exhaustive s<=4 |w|<=2, width/count capped",
           ok);
}

// ---------------------------------------------------------------------------
// Criterion 7: IP round-trip on 100 random instances.

void criterion_7() {
    bool ok = true;
    rng::SubStream rs(1007, 0);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(rs.next_u64() % 11);
        size_t k = 1 + rs.next_u64() % 3;
        std::vector<eval_count::IpConstraint> cs(k);
        for (auto& c : cs) {
            c.weights.resize(n);
            for (auto& w : c.weights) w = static_cast<long long>(rs.next_u64() % 11) - 5;
            c.bound = Rational(static_cast<long long>(rs.next_u64() % 21) - 10,
                               1 + static_cast<long long>(rs.next_u64() % 3));
        }
        auto F = eval_count::ip_to_intersection(n, cs);
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            bool feasible = true;
            for (auto& c : cs) {
                long long dot = 0;
                for (uint32_t i = 0; i < n; ++i) dot += c.weights[i] * ((mask >> i) & 1);
                if (Rational(dot) > c.bound) feasible = false;
            }
            auto x = point_from_mask(mask, n);
            if ((ltf::evaluate_intersection(F, x) == -1) != feasible) ok = false;
        }
    }
    report(7, "{0,1}-IP feasibility equals intersection truth pointwise, 100 random instances",
           ok);
}

// ---------------------------------------------------------------------------
// Criterion 8: hybrid endpoints by exact counting, n=4, l=2.

void criterion_8() {
    prggen::Overrides ov;
    ov.ell = 2;
    ov.r_hash = 2;
    ov.r_bucket = 2;
    ov.delta_cnf = 0.5;
    auto p = prggen::plan_params(4, 2, 1, 0.5, 0.5, ov);
    bool ok = true;
    auto uniform_side = diagnostics::hybrid_exact_distribution(p, 0);
    for (auto& pr : uniform_side.prob)
        if (!(pr == Rational(1, 16))) ok = false;
    auto gen_side = diagnostics::hybrid_exact_distribution(p, p.ell);
    auto gen_direct = diagnostics::gen_exact_distribution(p);
    Rational tv(0);
    for (size_t i = 0; i < gen_side.prob.size(); ++i) {
        Rational d = gen_side.prob[i] - gen_direct.prob[i];
        if (d < Rational(0)) d = Rational(0) - d;
        tv = tv + d;
    }
    if (!(tv == Rational(0))) ok = false;
    report(8, "hybrid level 0 is exactly uniform and level l is exactly the generator", ok);
}

// ---------------------------------------------------------------------------
// Criterion 9: bounded-independence CNF fooling, exactly derivable cases.

void criterion_9() {
    bool ok = true;
    std::string detail;
    for (uint32_t width = 1; width <= 3 && ok; ++width) {
        ltf::CnfFormula g;
        g.width = width;
        g.clauses.emplace_back();
        for (uint32_t i = 1; i <= width; ++i)
            g.clauses[0].push_back(ltf::Literal{2 * i - 1, (i % 2) ? int8_t{-1} : int8_t{1}});
        for (uint32_t r = width; r <= width + 2; ++r) {
            auto rep = diagnostics::br_fooling_test(g, r, 6);
            if (!(rep.err == Rational(0))) {
                ok = false;
                detail = "width " + std::to_string(width) + " r " + std::to_string(r) +
                         " err " + rep.err.to_string();
            }
        }
    }
    // Recorded sweep: 20 random width-3, <=4-clause CNFs on n=10 with r=8.
    rng::SubStream rs(1009, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        ltf::CnfFormula g;
        g.width = 3;
        size_t clauses = 1 + rs.next_u64() % 4;
        for (size_t c = 0; c < clauses; ++c) {
            std::vector<uint32_t> vars;
            while (vars.size() < 3) {
                uint32_t v = 1 + static_cast<uint32_t>(rs.next_u64() % 10);
                bool dup = false;
                for (uint32_t u : vars)
                    if (u == v) dup = true;
                if (!dup) vars.push_back(v);
            }
            std::vector<ltf::Literal> clause;
            for (uint32_t v : vars)
                clause.push_back(ltf::Literal{v, static_cast<int8_t>(rs.next_sign())});
            g.clauses.push_back(std::move(clause));
        }
        auto rep = diagnostics::br_fooling_test(g, 8, 10);
        double err = rep.err.to_double();
        worst = std::max(worst, err);
        if (rep.heuristic_breach)
            heuristic_note("criterion 9 trial " + std::to_string(trial) + ": measured err " +
                           std::to_string(err) + " above heuristic delta " +
                           std::to_string(rep.heuristic_delta));
    }
    std::printf("  criterion 9 sweep: worst measured err %.3e over 20 random width-3 CNFs "
                "(heuristic delta reference %.3e)\n",
                worst, 4.0 * std::exp2(-std::sqrt(8.0)));
    report(9, "r-wise generator fools single clauses exactly; random-CNF sweep recorded", ok,
           detail);
}

// ---------------------------------------------------------------------------
// Criterion 10: fooling regression at desk scale against frozen goldens.

struct RegressionCase {
    uint32_t n;
    std::vector<ltf::Ltf> ltfs;
    double golden_err; // frozen from the first oracle-pipeline run
};

std::vector<RegressionCase> regression_suite() {
    // Fixed suite: 10 intersections of k <= 3 weight-1 LTFs on n in {8, 12},
    // spelled out so the goldens can never drift with RNG changes.
    auto L = [](std::vector<long long> w, long long th) {
        return ltf::Ltf{std::move(w), Rational(th)};
    };
    std::vector<RegressionCase> suite;
    suite.push_back({8, {L({1, 1, 1, 1, 1, 1, 1, 1}, 0)}, 0.0});
    suite.push_back({8, {L({1, -1, 1, -1, 1, -1, 1, -1}, 1)}, 0.0});
    suite.push_back({8, {L({1, 1, 1, 1, 0, 0, 0, 0}, 0), L({0, 0, 0, 0, 1, 1, 1, 1}, 0)}, 0.0});
    suite.push_back({8, {L({1, 1, 0, 0, 0, 0, 1, 1}, -1), L({0, 1, 1, 1, 1, 0, 0, 0}, 2)}, 0.0});
    suite.push_back({8,
                     {L({1, 0, 0, 1, 0, 0, 1, 0}, 0), L({0, 1, 0, 0, 1, 0, 0, 1}, 0),
                      L({0, 0, 1, 0, 0, 1, 0, 0}, 1)},
                     0.0});
    suite.push_back({12, {L({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 0)}, 0.0});
    suite.push_back({12, {L({1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1}, -2)}, 0.0});
    suite.push_back({12,
                     {L({1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, 0),
                      L({0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1}, 0)},
                     0.0});
    suite.push_back({12,
                     {L({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}, 1),
                      L({0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, -1)},
                     0.0});
    suite.push_back({12,
                     {L({1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, 0),
                      L({0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0}, 0),
                      L({0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, 0)},
                     0.0});
    // Frozen goldens, in suite order (computed once by this pipeline with
    // stream_id 1010 and N = 10^6; see --dump-goldens).
    const double goldens[] = {
        0.00053449999999999331, 0.0018894999999999884, 0.00020049999999999929,
        0.0011610000000000231,  0.00016799999999994597,
        0.00037406249999999419, 0.00042193749999999697, 0.00066412499999998764,
        0.0005621249999999689,  0.00070834375000000671,
    };
    for (size_t i = 0; i < suite.size(); ++i) suite[i].golden_err = goldens[i];
    return suite;
}

void criterion_10() {
    prggen::Overrides ov;
    ov.ell = 4;
    ov.r_hash = 4;
    ov.r_bucket = 8;
    ov.delta_cnf = 0.5;
    bool ok = true;
    std::string detail;
    auto suite = regression_suite();
    const uint64_t N = 1000000;
    for (size_t idx = 0; idx < suite.size(); ++idx) {
        auto& rc = suite[idx];
        auto p = prggen::plan_params(rc.n, rc.ltfs.size(), 1, 0.25, 0.5, ov);
        ltf::Intersection F{rc.ltfs, rc.n};
        auto fn = [&](std::span<const int8_t> x) { return ltf::evaluate_intersection(F, x); };
        auto rep = eval_count::fooling_error(fn, rc.n, p, eval_count::FoolMode::ExactUniformMcSeeds,
                                             N, 1010, 24, 4);
        if (g_dump_goldens)
            std::printf("golden criterion 10 case %zu: err %.17g halfwidth %.5g\n", idx, rep.err,
                        rep.uncertainty);
        if (rep.err > rc.golden_err + 4.0 * rep.uncertainty) {
            ok = false;
            detail = "case " + std::to_string(idx) + ": err " + std::to_string(rep.err) +
                     " above golden " + std::to_string(rc.golden_err) + " + 4hw";
        }
    }
    report(10, "fooling regression, 10 fixed intersections vs frozen goldens + 4x MC halfwidth",
           ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 11: bucket statistic tracking and closed forms.

void criterion_11() {
    bool ok = true;
    // Closed forms, exact assertions.
    diagnostics::ColumnMatrix W1 = {{1.0, 0.0}, {0.0, 1.0}};
    if (diagnostics::bucket_statistic(W1, {2, 2}, 1, 2) != 0.0) ok = false; // empty bucket
    double single = diagnostics::bucket_statistic(W1, {1, 1}, 1, 2);        // whole mass, k=2
    if (std::abs(single - 2.0) > 1e-12) ok = false; // k^{1/log2 k} = 2 at k=2
    diagnostics::ColumnMatrix W4(4, std::vector<double>(4, 0.0));
    for (int j = 0; j < 4; ++j) W4[j][j] = 1.0;
    double single4 = diagnostics::bucket_statistic(W4, {1, 1, 1, 1}, 1, 4);
    if (std::abs(single4 - std::pow(4.0, 0.5)) > 1e-12) ok = false; // 4^{1/2}

    // Sampled tracking for the k=4, n=64, l=8 block-structured matrix.
    diagnostics::ColumnMatrix W(4, std::vector<double>(64, 0.0));
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 16; ++i) W[j][16 * j + i] = 0.25; // 16 * (1/4)^2 = 1
    prggen::Overrides ov;
    ov.ell = 8;
    ov.r_hash = 4;
    ov.r_bucket = 8;
    ov.delta_cnf = 0.5;
    auto p = prggen::plan_params(64, 4, 1, 1.0 / 8.0, 0.5, ov);
    auto rep = diagnostics::expected_bucket_statistic(W, p, 2000, 1011);
    std::printf("  criterion 11: E_h[sum_b h(W,b)] = %.6f +- %.6f, heuristic bound %.6f\n",
                rep.estimate, rep.std_error, rep.bound);
    if (rep.heuristic_breach)
        heuristic_note("criterion 11: sampled bucket statistic exceeds the unit-constant bound");
    if (!(rep.estimate >= 0.0) || !(rep.std_error >= 0.0)) ok = false;
    report(11, "bucket statistic closed forms exact; block-matrix expectation tracked vs bound",
           ok);
}

// ---------------------------------------------------------------------------
// Criterion 12: strip probability vs Gaussian CDF oracle; region partition.

void criterion_12() {
    bool ok = true;
    std::string detail;
    diagnostics::ColumnMatrix W = {{1.0}};
    std::vector<double> theta = {0.0};
    for (double lambda : {0.01, 0.05, 0.1}) {
        auto rep = diagnostics::strip_probability_mc(W, theta, lambda, 400000, 1012);
        double truth = 0.5 * std::erfc(-lambda / std::sqrt(2.0)) - 0.5;
        // Binomial 3-sigma plus the CDF oracle's own discretization slack.
        double sigma = std::sqrt(truth * (1.0 - truth) / 400000.0);
        if (std::abs(rep.estimate - truth) > 3.0 * sigma + 1e-4) {
            ok = false;
            detail = "lambda " + std::to_string(lambda) + ": estimate " +
                     std::to_string(rep.estimate) + " vs CDF " + std::to_string(truth);
        }
    }
    rng::SubStream rs(1013, 0);
    for (int trial = 0; trial < 1000000 && ok; ++trial) {
        double v[3], th[3];
        size_t k = 1 + rs.next_u64() % 3;
        for (size_t j = 0; j < k; ++j) {
            v[j] = 6.0 * rs.next_unit() - 3.0;
            th[j] = 6.0 * rs.next_unit() - 3.0;
        }
        double lambda = 0.01 + 0.98 * rs.next_unit();
        auto label = diagnostics::classify_region(std::span<const double>(v, k),
                                                  std::span<const double>(th, k), lambda);
        bool all_inner = true, any_outer = false;
        for (size_t j = 0; j < k; ++j) {
            if (v[j] > th[j]) all_inner = false;
            if (v[j] >= th[j] + lambda) any_outer = true;
        }
        auto expect = all_inner ? diagnostics::RegionLabel::Inner
                      : any_outer ? diagnostics::RegionLabel::Outer
                                  : diagnostics::RegionLabel::Strip;
        if (label != expect) {
            ok = false;
            detail = "partition mismatch at trial " + std::to_string(trial);
        }
    }
    report(12, "strip probability matches the Gaussian CDF oracle; region partition fuzzed", ok,
           detail);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--dump-goldens") == 0) g_dump_goldens = true;

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
