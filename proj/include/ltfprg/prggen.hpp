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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltfprg/kwise.hpp"

namespace ltfprg::prggen {

/// Full parameter schedule of the bucketed generator: one r_hash-wise hash
/// h : [n] -> [l] selects a bucket per coordinate, each bucket is filled by
/// its own r_bucket-wise sign generator.
struct GenParams {
    uint64_t n = 2;
    uint32_t ell = 2;      // bucket count, power of two
    uint32_t r_hash = 2;
    uint32_t r_bucket = 2;
    uint8_t m_hash = 1;
    uint8_t m_bucket = 1;
    double delta_cnf = 0.0;
    uint64_t seed_len_bits = 0;

    kwise::HashFamilySpec hash_spec() const;
    kwise::BitGenSpec bucket_spec() const;

    bool operator==(const GenParams&) const = default;
};

/// (h, X^(1), ..., X^(l)) in the normative layout: hash coefficients first,
/// then the l bucket seeds, coefficients constant-term first, little-endian
/// bits within each coefficient.
struct GenSeed {
    kwise::KWiseSeed hash_seed;
    std::vector<kwise::KWiseSeed> bucket_seeds;

    bool operator==(const GenSeed&) const = default;
};

/// Optional pins for experiment mode; pinned values pass through verbatim.
struct Overrides {
    std::optional<uint32_t> ell;
    std::optional<uint32_t> r_hash;
    std::optional<uint32_t> r_bucket;
    std::optional<double> delta_cnf;
    double c_br = 1.0; // constant in the r_bucket CNF term
};

/// Concrete schedule from (n, k, s, tau): l = next power of two >= 1/tau,
/// r_hash = max(2, 2 ceil(log2 k)), r_bucket = 4 ceil(log2 k) +
/// c_br * ceil(log2(M/delta_cnf)^2) with M = k 2^s. delta_cnf defaults to
/// the largest power of two keeping every delta-dependent bound term at or
/// below delta_target.
GenParams plan_params(uint64_t n, uint64_t k, uint32_t s, double tau, double delta_target,
                      const Overrides& ov = {});

/// From weight bound t: picks the largest tau <= 1/2 with
/// log2(k+2)^{8/5} (tau ln(1/tau))^{1/5} <= delta_target, sets
/// s = ceil((t/tau)^2), and delegates to plan_params.
GenParams plan_from_weight(uint64_t n, uint64_t k, uint64_t t, double delta_target,
                           const Overrides& ov = {});

uint64_t seed_length(const GenParams& p);

/// Y_i = bucket-h(i) generator evaluated at i.
std::vector<int8_t> generate(const GenParams& p, const GenSeed& seed);

GenSeed seed_from_counter(const GenParams& p, uint64_t counter);
std::vector<uint8_t> seed_to_bytes(const GenParams& p, const GenSeed& seed);
GenSeed seed_from_bytes(const GenParams& p, const std::vector<uint8_t>& bytes);
std::string seed_to_hex(const GenParams& p, const GenSeed& seed);
GenSeed seed_from_hex(const GenParams& p, const std::string& hex);

/// Calls fn for every seed, little-endian counter order; the first seed is
/// all-zero. Throws cap_error when seed_len_bits exceeds cap_bits.
void for_each_seed(const GenParams& p, const std::function<void(uint64_t, const GenSeed&)>& fn,
                   uint64_t cap_bits = 24);

/// HEURISTIC closed-form bound evaluation: unit constants, log2(k+2) for
/// log k. Never a ground-truth error value.
struct BoundReport {
    double lambda = 0.0;
    double delta_estimate = 0.0;
    std::vector<std::pair<std::string, double>> terms;
    bool heuristic = true;
};

BoundReport theoretical_error_bound(const GenParams& p, uint64_t k, double tau);

/// The delta-independent and delta-dependent pieces, exposed so tests can
/// evaluate the pure tau limit (delta_cnf = 0).
double heuristic_lambda(uint64_t k, double tau);

/// The tau picked by plan_from_weight: the largest tau <= 1/2 with
/// log2(k+2)^{8/5} (tau ln(1/tau))^{1/5} <= delta_target.
double solve_regularity_tau(uint64_t k, double delta_target);

} // namespace ltfprg::prggen
