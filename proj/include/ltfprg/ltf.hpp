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
#include <string>
#include <vector>

#include "ltfprg/common.hpp"

namespace ltfprg::ltf {

/// Point of {-1,+1}^n; index 0 holds coordinate 1.
using Point = std::vector<int8_t>;

/// Integer-weight threshold function sign(w.x - theta); sign(0) = -1 and
/// -1 encodes True throughout.
struct Ltf {
    std::vector<long long> weights;
    Rational theta;
};

/// Intersection F_1 AND ... AND F_k over a shared dimension.
struct Intersection {
    std::vector<Ltf> ltfs;
    uint64_t n = 0;
};

/// Literal (variable, polarity): satisfied when the variable equals the
/// polarity. Variables are 1-indexed.
struct Literal {
    uint32_t var = 1;
    int8_t polarity = -1;

    bool operator==(const Literal&) const = default;
};

struct CnfFormula {
    std::vector<std::vector<Literal>> clauses;
    uint32_t width = 0; // declared max clause width
};

/// Unit-norm weight column with its exact integer source retained.
struct NormalizedLtf {
    std::vector<double> unit_weights;
    double theta_scaled = 0.0;
    Ltf source;
};

/// Sparse-or-regular decomposition F == regular_part AND cnf_part.
struct CnfLtf {
    std::vector<NormalizedLtf> regular_part;
    CnfFormula cnf_part;
};

int evaluate_ltf(const Ltf& f, std::span<const int8_t> x);
int evaluate_intersection(const Intersection& F, std::span<const int8_t> x);
int evaluate_cnf(const CnfFormula& G, std::span<const int8_t> x);

struct WeightStats {
    long long t = 0; // max |w_i|
    uint32_t s = 0;  // nonzero count
};
WeightStats weight_and_sparsity(const Ltf& f);

/// Least tau with sum u_i^4 <= tau^2 for the normalized weights u = w/|w|.
double regularity_param(const Ltf& f);

/// Exact check sum u_i^4 <= tau^2, i.e. den^2 * sum w^4 <= num^2 * (sum w^2)^2.
bool is_tau_regular(const Ltf& f, const Rational& tau);

struct Dichotomy {
    bool sparse = false;
    double tau = 0.0; // t / sqrt(s+1) when regular
};

/// Sparse when sparsity <= s; otherwise regular with tau = t/sqrt(s+1).
Dichotomy classify_dichotomy(const Ltf& f, uint32_t s);

/// Canonical CNF equal to f: one clause per falsifying assignment of the
/// relevant variables, emitted in lexicographic assignment order.
CnfFormula sparse_to_cnf(const Ltf& f, uint32_t cap = 20);

NormalizedLtf normalize(const Ltf& f);

/// Splits F into tau-regular members (normalized) and the CNF rewrite of
/// the s-sparse members. An LTF that is both goes to the CNF side.
CnfLtf decompose(const Intersection& F, uint32_t s, const Rational& tau, uint32_t cnf_cap = 20);

} // namespace ltfprg::ltf
