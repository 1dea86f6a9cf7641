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

#include <optional>

#include "ltfprg/eval_count.hpp"
#include "ltfprg/rng.hpp"

namespace ltfprg::diagnostics {

/// Hybrid level b: buckets with index <= b are filled pseudorandomly,
/// buckets above b with fresh uniform bits. b = 0 is uniform, b = l is the
/// generator's output distribution.
struct HybridSpec {
    prggen::GenParams p;
    std::optional<kwise::KWiseSeed> hash_seed; // empty = average over the family
    uint32_t b = 0;
};

enum class RegionLabel { Inner, Outer, Strip };

struct BucketReport {
    std::vector<double> per_bucket; // h(W, b) for b = 1..l
    double total = 0.0;
    double bound = 0.0; // 4 log2(k) tau log2(1/tau), unit constants
};

/// Unit-norm columns, one per LTF; column j holds W^j.
using ColumnMatrix = std::vector<std::vector<double>>;

/// One draw from the hybrid distribution; bucket seeds are drawn fresh and
/// mutually independently.
ltf::Point hybrid_sample(const HybridSpec& spec, rng::SubStream& rs);

/// Exact probability, as counts over a common denominator, of every point of
/// {-1,+1}^n under the hybrid (enumerates hash and bucket seed spaces).
struct ExactDistribution {
    std::vector<Rational> prob; // indexed by point bitmask, bit i = (x_{i+1} == +1)
    uint64_t n = 0;
};
ExactDistribution hybrid_exact_distribution(const prggen::GenParams& p, uint32_t b,
                                            uint64_t cap_bits = 24);

/// Exact output distribution of generate(p, .) over all seeds.
ExactDistribution gen_exact_distribution(const prggen::GenParams& p, uint64_t cap_bits = 24);

/// E[F(X^{h,b})] for b = 0..l; exact (tiny scale) or Monte Carlo.
std::vector<eval_count::ExpectationEstimate> hybrid_scan(const eval_count::BoolFn& F,
                                                         const prggen::GenParams& p, bool exact,
                                                         uint64_t N, uint64_t stream_id,
                                                         uint64_t cap_bits = 24);

/// The per-bucket statistic (sum_j |W^j restricted to bucket|^{4 log2 k})^{1/log2 k}
/// with log2 k clamped below at 1. `assignment[i]` is the bucket of
/// coordinate i+1.
double bucket_statistic(const ColumnMatrix& W, const std::vector<uint32_t>& assignment,
                        uint32_t bucket, uint64_t k);

struct BucketStatReport {
    double estimate = 0.0;   // mean of sum_b h(W,b) over sampled hashes
    double std_error = 0.0;
    double bound = 0.0;      // HEURISTIC: 4 log2 k tau log2(1/tau)
    bool heuristic_breach = false;
    BucketReport example;    // per-bucket values for the first sampled hash
};

BucketStatReport expected_bucket_statistic(const ColumnMatrix& W, const prggen::GenParams& p,
                                           uint64_t n_hash_samples, uint64_t stream_id);

RegionLabel classify_region(std::span<const double> v, std::span<const double> theta,
                            double lambda);

struct GapReport {
    double gap = 0.0;
    double p_uniform = 0.0;
    double p_gaussian = 0.0;
    double uncertainty = 0.0; // combined Hoeffding halfwidths
    double bound = 0.0;       // HEURISTIC invariance bound
};

/// |Pr_U[W^T x in Inner] - Pr_G[W^T g in Inner]| by paired Monte Carlo.
GapReport invariance_gap_mc(const ColumnMatrix& W, std::span<const double> theta, uint64_t N,
                            uint64_t stream_id);

struct StripReport {
    double estimate = 0.0;
    double uncertainty = 0.0;
    double bound = 0.0; // HEURISTIC: lambda sqrt(log2 k), clamped log
};

StripReport strip_probability_mc(const ColumnMatrix& W, std::span<const double> theta,
                                 double lambda, uint64_t N, uint64_t stream_id);

struct BrReport {
    Rational err;      // |E_Z[G] - E_U[G]|, exact
    Rational e_kwise;
    Rational e_uniform;
    uint64_t seed_bits = 0;
    double heuristic_delta = 0.0; // delta solving r = (log2(M/delta))^2
    bool heuristic_breach = false;
};

/// Exact fooling error of the r-wise sign generator on CNF G over n vars.
/// The uniform side enumerates the cube (capped); the seed side is exact by
/// inclusion-exclusion over clauses with GF(2) affine-subspace seed counts,
/// which agrees with full seed enumeration (cross-checked in tests).
BrReport br_fooling_test(const ltf::CnfFormula& G, uint32_t r, uint64_t n,
                         uint64_t cap_bits = 24);

/// Exact probability over seeds that the r-wise generator outputs the given
/// signs at the given 1-indexed coordinates.
Rational bitgen_pattern_probability(const kwise::BitGenSpec& spec,
                                    const std::vector<std::pair<uint64_t, int>>& pattern);

} // namespace ltfprg::diagnostics
