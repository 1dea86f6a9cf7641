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

#pragma once

#include <functional>

#include "ltfprg/ltf.hpp"
#include "ltfprg/prggen.hpp"

namespace ltfprg::eval_count {

/// Any +/-1-valued function of a +/-1 point.
using BoolFn = std::function<int(std::span<const int8_t>)>;

enum class Method { ExactUniform, ExactSeeds, MonteCarloSeeds };

struct ExpectationEstimate {
    Rational exact;           // meaningful when is_exact
    double value = 0.0;       // always set
    Method method = Method::ExactUniform;
    double error = 0.0;       // 0 for exact, Hoeffding halfwidth otherwise
    uint64_t sample_count = 0;
    uint64_t stream_id = 0;
    bool is_exact = true;
};

struct FoolingReport {
    double err = 0.0;
    ExpectationEstimate e_gen;
    ExpectationEstimate e_uniform;
    double uncertainty = 0.0;
};

struct CountReport {
    uint64_t n = 0;
    double satisfying_estimate = 0.0;
    Rational exact_count;     // meaningful when exact
    ExpectationEstimate expectation;
    bool exact = false;
};

enum class FoolMode { ExactBoth, ExactUniformMcSeeds };

/// Exact rational mean of F over all 2^n points.
ExpectationEstimate exact_uniform_expectation(const BoolFn& F, uint64_t n, uint64_t cap_bits = 24,
                                              unsigned workers = 1);

/// Exact rational mean of F(generate(seed)) over the full seed space.
ExpectationEstimate exact_gen_expectation(const BoolFn& F, const prggen::GenParams& p,
                                          uint64_t cap_bits = 24, unsigned workers = 1);

/// Monte Carlo over seeds drawn from the counter-based auxiliary RNG;
/// two-sided Hoeffding halfwidth sqrt(ln(2/alpha) / (2N)).
ExpectationEstimate mc_gen_expectation(const BoolFn& F, const prggen::GenParams& p, uint64_t N,
                                       uint64_t stream_id, double alpha = 0.05,
                                       unsigned workers = 1);

/// A uniform random GenSeed for p, drawn from substream (stream_id, index).
prggen::GenSeed random_gen_seed(const prggen::GenParams& p, uint64_t stream_id, uint64_t index);

FoolingReport fooling_error(const BoolFn& F, uint64_t n, const prggen::GenParams& p, FoolMode mode,
                            uint64_t N = 100000, uint64_t stream_id = 0, uint64_t cap_bits = 24,
                            unsigned workers = 1);

/// satisfying_estimate = 2^n (1 - E)/2 under the -1 = True convention.
CountReport approx_count(const BoolFn& F, uint64_t n, const prggen::GenParams& p, FoolMode mode,
                         uint64_t N = 100000, uint64_t stream_id = 0, uint64_t cap_bits = 24,
                         unsigned workers = 1);

/// One constraint of a {0,1}-integer program: weights . b <= bound.
struct IpConstraint {
    std::vector<long long> weights;
    Rational bound;
};

/// Rewrites w.b <= c over b in {0,1}^n as the LTF sign(w.x - (2c - sum w)),
/// true (-1) exactly on the feasible set.
ltf::Intersection ip_to_intersection(uint64_t n, const std::vector<IpConstraint>& constraints);

} // namespace ltfprg::eval_count
