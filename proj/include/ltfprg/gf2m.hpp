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
#include <span>
#include <vector>

#include "ltfprg/common.hpp"

namespace ltfprg::gf2m {

/// Element of GF(2^m), 1 <= m <= 32. Bit i of `value` is the coefficient
/// of x^i. Elements interoperate only when their m matches.
struct FieldElement {
    uint32_t value = 0;
    uint8_t m = 1;

    bool operator==(const FieldElement&) const = default;
};

/// Irreducible degree-m reduction polynomial; `polybits` has bit m set.
struct ReductionModulus {
    uint8_t m = 1;
    uint64_t polybits = 0b11;
};

/// Fixed published irreducible polynomial for each degree 1..32.
/// Irreducibility of the whole table is validated in the test suite.
ReductionModulus default_modulus(unsigned m);

FieldElement make_element(uint64_t value, unsigned m);

FieldElement gf_add(FieldElement a, FieldElement b);
FieldElement gf_mul(FieldElement a, FieldElement b, const ReductionModulus& mod);

/// Horner evaluation of sum coeffs[i] * x^i, constant term first.
FieldElement poly_eval(std::span<const FieldElement> coeffs, FieldElement x,
                       const ReductionModulus& mod);

/// Exhaustive irreducibility test over GF(2), used to validate the modulus table.
bool is_irreducible(uint64_t polybits, unsigned m);

} // namespace ltfprg::gf2m
