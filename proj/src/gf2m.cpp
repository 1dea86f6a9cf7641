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

#include "ltfprg/gf2m.hpp"

#include <array>

namespace ltfprg::gf2m {

namespace {

// Index m-1 holds the modulus for GF(2^m). Low-weight irreducibles; the
// m=8 entry is x^8+x^4+x^3+x+1.
constexpr std::array<uint64_t, 32> kModuli = {
    0x3,        0x7,        0xB,        0x13,       0x25,       0x43,
    0x89,       0x11B,      0x211,      0x409,      0x805,      0x1053,
    0x201B,     0x4443,     0x8003,     0x1100B,    0x20009,    0x40081,
    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,   0x1000087,
    0x2000009,  0x4000047,  0x8000027,  0x10000009, 0x20000005, 0x40000053,
    0x80000009, 0x100400007,
};

void check_degree(unsigned m) {
    if (m < 1 || m > 32) throw usage_error("field degree must be in [1, 32]");
}

// Carry-less product of polynomials with degrees < 32; fits in 64 bits.
uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

uint64_t reduce(uint64_t v, const ReductionModulus& mod) {
    while (v >> mod.m) {
        int bit = 63 - __builtin_clzll(v);
        v ^= mod.polybits << (bit - mod.m);
    }
    return v;
}

} // namespace

ReductionModulus default_modulus(unsigned m) {
    check_degree(m);
    return ReductionModulus{static_cast<uint8_t>(m), kModuli[m - 1]};
}

FieldElement make_element(uint64_t value, unsigned m) {
    check_degree(m);
    if (m < 64 && value >> m) throw usage_error("element value exceeds 2^m");
    return FieldElement{static_cast<uint32_t>(value), static_cast<uint8_t>(m)};
}

FieldElement gf_add(FieldElement a, FieldElement b) {
    if (a.m != b.m) throw usage_error("gf_add: mismatched field degrees");
    return FieldElement{a.value ^ b.value, a.m};
}

FieldElement gf_mul(FieldElement a, FieldElement b, const ReductionModulus& mod) {
    if (a.m != b.m || a.m != mod.m) throw usage_error("gf_mul: mismatched field degrees");
    return FieldElement{static_cast<uint32_t>(reduce(clmul(a.value, b.value), mod)), a.m};
}

FieldElement poly_eval(std::span<const FieldElement> coeffs, FieldElement x,
                       const ReductionModulus& mod) {
    if (coeffs.empty()) throw usage_error("poly_eval: empty coefficient list");
    for (const auto& c : coeffs) {
        if (c.m != x.m || c.m != mod.m) throw usage_error("poly_eval: mismatched field degrees");
    }
    FieldElement acc = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = gf_add(gf_mul(acc, x, mod), coeffs[i]);
    }
    return acc;
}

bool is_irreducible(uint64_t polybits, unsigned m) {
    check_degree(m);
    if (m == 1) return polybits == 0b10 || polybits == 0b11;
    ReductionModulus mod{static_cast<uint8_t>(m), polybits};
    // f is irreducible iff x^(2^m) == x mod f and gcd(x^(2^(m/p)) - x, f) = 1
    // for every prime p dividing m.
    auto sq = [&](uint64_t a) { return reduce(clmul(a, a), mod); };
    auto pow_x = [&](unsigned e) {
        uint64_t a = 2;
        for (unsigned i = 0; i < e; ++i) a = sq(a);
        return a;
    };
    if (pow_x(m) != 2) return false;
    auto poly_gcd = [](uint64_t a, uint64_t b) {
        auto deg = [](uint64_t v) { return v ? 63 - __builtin_clzll(v) : -1; };
        while (b) {
            while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
            std::swap(a, b);
        }
        return a;
    };
    unsigned rest = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        if (poly_gcd(pow_x(m / p) ^ 2, polybits) != 1) return false;
    }
    if (rest > 1 && rest < m) {
        if (poly_gcd(pow_x(m / rest) ^ 2, polybits) != 1) return false;
    }
    if (rest == m) { // m itself prime
        if (poly_gcd(pow_x(1) ^ 2, polybits) != 1) return false;
    }
    return true;
}

} // namespace ltfprg::gf2m
