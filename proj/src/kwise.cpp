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

#include "ltfprg/kwise.hpp"

#include <algorithm>
#include <functional>

namespace ltfprg::kwise {

using gf2m::FieldElement;

HashFamilySpec make_hash_family(uint64_t n, uint32_t ell, uint32_t r) {
    if (n < 1) throw param_error("make_hash_family: n must be >= 1");
    if (r < 1) throw param_error("make_hash_family: r must be >= 1");
    if (ell < 2 || !is_power_of_two(ell))
        throw param_error("make_hash_family: l must be a power of two >= 2");
    unsigned m = std::max({ceil_log2(n), ceil_log2(ell), 1u});
    return HashFamilySpec{n, ell, r, static_cast<uint8_t>(m), gf2m::default_modulus(m)};
}

BitGenSpec make_bitgen(uint64_t n, uint32_t r) {
    if (n < 1) throw param_error("make_bitgen: n must be >= 1");
    if (r < 1) throw param_error("make_bitgen: r must be >= 1");
    unsigned m = std::max(ceil_log2(n), 1u);
    return BitGenSpec{n, r, static_cast<uint8_t>(m), gf2m::default_modulus(m)};
}

uint64_t seed_space_size(uint32_t r, unsigned m) {
    uint64_t bits = uint64_t{r} * m;
    if (bits >= 63) throw cap_error("seed space exceeds 2^62");
    return uint64_t{1} << bits;
}

KWiseSeed seed_from_counter(uint32_t r, unsigned m, uint64_t counter) {
    KWiseSeed s;
    s.coeffs.reserve(r);
    uint64_t mask = (m >= 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    for (uint32_t j = 0; j < r; ++j) {
        s.coeffs.push_back(gf2m::make_element(counter & mask, m));
        counter >>= m;
    }
    return s;
}

void seed_to_bits(const KWiseSeed& seed, BitWriter& out) {
    for (const auto& c : seed.coeffs) out.write(c.value, c.m);
}

KWiseSeed seed_from_bits(uint32_t r, unsigned m, BitReader& in) {
    KWiseSeed s;
    s.coeffs.reserve(r);
    for (uint32_t j = 0; j < r; ++j) s.coeffs.push_back(gf2m::make_element(in.read(m), m));
    return s;
}

uint32_t hash_eval(const HashFamilySpec& spec, const KWiseSeed& seed, uint64_t i) {
    if (seed.coeffs.size() != spec.r) throw usage_error("hash_eval: seed length != r");
    if (i < 1 || i > spec.n) throw usage_error("hash_eval: index out of range");
    FieldElement x = gf2m::make_element(i - 1, spec.m);
    FieldElement v = gf2m::poly_eval(seed.coeffs, x, spec.mod);
    uint32_t low = v.value & (spec.ell - 1);
    return low + 1;
}

int bitgen_eval(const BitGenSpec& spec, const KWiseSeed& seed, uint64_t i) {
    if (seed.coeffs.size() != spec.r) throw usage_error("bitgen_eval: seed length != r");
    if (i < 1 || i > spec.n) throw usage_error("bitgen_eval: index out of range");
    FieldElement x = gf2m::make_element(i - 1, spec.m);
    FieldElement v = gf2m::poly_eval(seed.coeffs, x, spec.mod);
    return (v.value & 1) ? -1 : +1;
}

namespace {

// Full enumeration over seeds and over all coordinate subsets of size <= max_r
// with all target tuples. `range` is l for hashes, 2 for bit generators.
// `eval_all` fills the per-coordinate outputs (0-based targets) for one seed.
IndependenceReport verify_generic(uint64_t n, uint32_t r, unsigned m, uint32_t range,
                                  uint32_t max_r, uint64_t cap_bits,
                                  const std::function<void(const KWiseSeed&, std::vector<uint32_t>&)>& eval_all) {
    uint64_t bits = uint64_t{r} * m;
    if (bits > cap_bits)
        throw cap_error("verify_independence: seed space 2^" + std::to_string(bits) +
                        " exceeds cap 2^" + std::to_string(cap_bits));
    uint64_t seeds = uint64_t{1} << bits;

    // Precompute outputs for every seed.
    std::vector<std::vector<uint32_t>> outputs(seeds, std::vector<uint32_t>(n));
    KWiseSeed seed;
    for (uint64_t c = 0; c < seeds; ++c) {
        seed = seed_from_counter(r, m, c);
        eval_all(seed, outputs[c]);
    }

    IndependenceReport rep;
    rep.seed_count = seeds;
    rep.max_r = max_r;
    rep.pass = true;

    uint32_t q_max = static_cast<uint32_t>(std::min<uint64_t>(max_r, n));
    for (uint32_t q = 1; q <= q_max; ++q) {
        std::vector<uint64_t> coords(q);
        for (uint32_t j = 0; j < q; ++j) coords[j] = j + 1;
        bool more = true;
        while (more) {
            uint64_t tuples = 1;
            for (uint32_t j = 0; j < q; ++j) tuples *= range;
            std::vector<uint64_t> counts(tuples, 0);
            for (uint64_t c = 0; c < seeds; ++c) {
                uint64_t idx = 0;
                for (uint32_t j = 0; j < q; ++j)
                    idx = idx * range + outputs[c][coords[j] - 1];
                ++counts[idx];
            }
            uint64_t expected = seeds / tuples;
            for (uint64_t t = 0; t < tuples; ++t) {
                CountEntry e;
                e.coords.assign(coords.begin(), coords.end());
                e.targets.resize(q);
                uint64_t tt = t;
                for (uint32_t j = q; j-- > 0;) {
                    e.targets[j] = static_cast<uint32_t>(tt % range);
                    tt /= range;
                }
                e.count = counts[t];
                e.expected = expected;
                if (counts[t] != expected && rep.pass) {
                    rep.pass = false;
                    rep.first_failure = "subset size " + std::to_string(q) + ": count " +
                                        std::to_string(counts[t]) + " != expected " +
                                        std::to_string(expected);
                }
                rep.entries.push_back(std::move(e));
            }
            // next q-subset of [n]
            more = false;
            for (uint32_t j = q; j-- > 0;) {
                if (coords[j] < n - (q - 1 - j)) {
                    ++coords[j];
                    for (uint32_t t = j + 1; t < q; ++t) coords[t] = coords[t - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace

IndependenceReport verify_independence(const HashFamilySpec& spec, uint32_t max_r,
                                       uint64_t cap_bits) {
    return verify_generic(spec.n, spec.r, spec.m, spec.ell, max_r, cap_bits,
                          [&spec](const KWiseSeed& s, std::vector<uint32_t>& out) {
                              for (uint64_t i = 1; i <= spec.n; ++i)
                                  out[i - 1] = hash_eval(spec, s, i) - 1;
                          });
}

IndependenceReport verify_independence(const BitGenSpec& spec, uint32_t max_r,
                                       uint64_t cap_bits) {
    return verify_generic(spec.n, spec.r, spec.m, 2, max_r, cap_bits,
                          [&spec](const KWiseSeed& s, std::vector<uint32_t>& out) {
                              for (uint64_t i = 1; i <= spec.n; ++i)
                                  out[i - 1] = bitgen_eval(spec, s, i) == -1 ? 1 : 0;
                          });
}

} // namespace ltfprg::kwise
