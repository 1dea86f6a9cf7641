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
#include <string>
#include <vector>

#include "ltfprg/common.hpp"
#include "ltfprg/gf2m.hpp"

namespace ltfprg::kwise {

/// r-wise independent hash family h : [n] -> [l], built from degree-(r-1)
/// polynomials over GF(2^m). l must be a power of two; buckets come from
/// the low log2(l) bits of the polynomial value.
struct HashFamilySpec {
    uint64_t n = 1;
    uint32_t ell = 2;
    uint32_t r = 1;
    uint8_t m = 1;
    gf2m::ReductionModulus mod;
};

/// r-wise independent generator over {-1,+1}^n; sign is the low bit of the
/// polynomial value (bit 0 -> +1, bit 1 -> -1).
struct BitGenSpec {
    uint64_t n = 1;
    uint32_t r = 1;
    uint8_t m = 1;
    gf2m::ReductionModulus mod;
};

/// One draw from a family: the r polynomial coefficients, constant term first.
struct KWiseSeed {
    std::vector<gf2m::FieldElement> coeffs;

    bool operator==(const KWiseSeed&) const = default;
};

HashFamilySpec make_hash_family(uint64_t n, uint32_t ell, uint32_t r);
BitGenSpec make_bitgen(uint64_t n, uint32_t r);

/// Number of seeds 2^(r*m); throws if it would not fit in 63 bits.
uint64_t seed_space_size(uint32_t r, unsigned m);

/// Seed whose concatenated little-endian coefficient bits equal `counter`.
KWiseSeed seed_from_counter(uint32_t r, unsigned m, uint64_t counter);

/// Normative layout: r coefficients of m bits each, little-endian bits,
/// constant term first.
void seed_to_bits(const KWiseSeed& seed, BitWriter& out);
KWiseSeed seed_from_bits(uint32_t r, unsigned m, BitReader& in);

/// Bucket in [1, l] for 1-indexed i; the index embeds as the field element
/// with value i-1.
uint32_t hash_eval(const HashFamilySpec& spec, const KWiseSeed& seed, uint64_t i);

/// Sign in {-1,+1} for 1-indexed i.
int bitgen_eval(const BitGenSpec& spec, const KWiseSeed& seed, uint64_t i);

struct CountEntry {
    std::vector<uint64_t> coords;  // 1-indexed, strictly increasing
    std::vector<uint32_t> targets; // bucket in [1,l] or sign in {-1,+1} as 0/1
    uint64_t count = 0;
    uint64_t expected = 0;
};

struct IndependenceReport {
    bool pass = false;
    uint64_t seed_count = 0;
    uint32_t max_r = 0;
    std::vector<CountEntry> entries;
    std::string first_failure; // empty when pass
};

/// Exhaustively verifies r'-wise independence for all r' <= max_r by full
/// seed enumeration; zero-tolerance integer count equality.
IndependenceReport verify_independence(const HashFamilySpec& spec, uint32_t max_r,
                                       uint64_t cap_bits = 24);
IndependenceReport verify_independence(const BitGenSpec& spec, uint32_t max_r,
                                       uint64_t cap_bits = 24);

} // namespace ltfprg::kwise
