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

#include "ltfprg/ltf.hpp"

#include <cmath>
#include <cstdlib>

namespace ltfprg::ltf {

namespace {

using i128 = __int128;

i128 sum_sq(const std::vector<long long>& w) {
    i128 s = 0;
    for (long long wi : w) s += i128(wi) * wi;
    return s;
}

i128 sum_quad(const std::vector<long long>& w) {
    i128 s = 0;
    for (long long wi : w) s += i128(wi) * wi * i128(wi) * wi;
    return s;
}

} // namespace

int evaluate_ltf(const Ltf& f, std::span<const int8_t> x) {
    if (x.size() != f.weights.size()) throw usage_error("evaluate_ltf: dimension mismatch");
    long long dot = 0;
    for (size_t i = 0; i < x.size(); ++i) dot += f.weights[i] * x[i];
    // sign(dot - theta): +1 iff dot > theta, exact cross-multiplied compare.
    return (i128(dot) * f.theta.den() > i128(f.theta.num())) ? +1 : -1;
}

int evaluate_intersection(const Intersection& F, std::span<const int8_t> x) {
    if (F.ltfs.empty()) throw usage_error("evaluate_intersection: empty intersection");
    for (const auto& f : F.ltfs) {
        if (evaluate_ltf(f, x) == +1) return +1;
    }
    return -1;
}

int evaluate_cnf(const CnfFormula& G, std::span<const int8_t> x) {
    for (const auto& clause : G.clauses) {
        bool sat = false;
        for (const auto& lit : clause) {
            if (lit.var < 1 || lit.var > x.size())
                throw usage_error("evaluate_cnf: variable index out of range");
            if (x[lit.var - 1] == lit.polarity) {
                sat = true;
                break;
            }
        }
        if (!sat) return +1;
    }
    return -1;
}

WeightStats weight_and_sparsity(const Ltf& f) {
    WeightStats st;
    for (long long wi : f.weights) {
        long long a = std::llabs(wi);
        if (a > st.t) st.t = a;
        if (wi != 0) ++st.s;
    }
    return st;
}

double regularity_param(const Ltf& f) {
    i128 q = sum_quad(f.weights), s2 = sum_sq(f.weights);
    if (s2 == 0) throw usage_error("regularity_param: zero weight vector");
    return std::sqrt(static_cast<double>(q)) / static_cast<double>(s2);
}

bool is_tau_regular(const Ltf& f, const Rational& tau) {
    i128 q = sum_quad(f.weights), s2 = sum_sq(f.weights);
    if (s2 == 0) throw usage_error("is_tau_regular: zero weight vector");
    // sum w^4 / (sum w^2)^2 <= (num/den)^2
    return i128(tau.den()) * tau.den() * q <= i128(tau.num()) * tau.num() * s2 * s2;
}

Dichotomy classify_dichotomy(const Ltf& f, uint32_t s) {
    WeightStats st = weight_and_sparsity(f);
    if (st.t == 0) throw usage_error("classify_dichotomy: zero weight vector");
    if (st.s <= s) return Dichotomy{true, 0.0};
    return Dichotomy{false, static_cast<double>(st.t) / std::sqrt(static_cast<double>(s) + 1.0)};
}

CnfFormula sparse_to_cnf(const Ltf& f, uint32_t cap) {
    std::vector<uint32_t> vars; // 1-indexed relevant variables, ascending
    for (size_t i = 0; i < f.weights.size(); ++i) {
        if (f.weights[i] != 0) vars.push_back(static_cast<uint32_t>(i + 1));
    }
    uint32_t s = static_cast<uint32_t>(vars.size());
    if (s > cap) throw cap_error("sparse_to_cnf: sparsity " + std::to_string(s) +
                                 " above cap " + std::to_string(cap));
    CnfFormula G;
    G.width = s;
    Point x(f.weights.size(), int8_t{-1});
    // Lexicographic order over relevant-variable assignments, first variable
    // most significant, -1 before +1.
    for (uint64_t a = 0; a < (uint64_t{1} << s); ++a) {
        for (uint32_t j = 0; j < s; ++j)
            x[vars[j] - 1] = ((a >> (s - 1 - j)) & 1) ? int8_t{+1} : int8_t{-1};
        if (evaluate_ltf(f, x) == +1) {
            std::vector<Literal> clause;
            clause.reserve(s);
            for (uint32_t j = 0; j < s; ++j)
                clause.push_back(Literal{vars[j], static_cast<int8_t>(-x[vars[j] - 1])});
            G.clauses.push_back(std::move(clause));
        }
    }
    return G;
}

NormalizedLtf normalize(const Ltf& f) {
    double norm = std::sqrt(static_cast<double>(sum_sq(f.weights)));
    if (norm == 0.0) throw usage_error("normalize: zero weight vector");
    NormalizedLtf nf;
    nf.unit_weights.reserve(f.weights.size());
    for (long long wi : f.weights) nf.unit_weights.push_back(static_cast<double>(wi) / norm);
    nf.theta_scaled = f.theta.to_double() / norm;
    nf.source = f;
    return nf;
}

CnfLtf decompose(const Intersection& F, uint32_t s, const Rational& tau, uint32_t cnf_cap) {
    CnfLtf out;
    out.cnf_part.width = s;
    for (size_t j = 0; j < F.ltfs.size(); ++j) {
        const Ltf& f = F.ltfs[j];
        WeightStats st = weight_and_sparsity(f);
        if (st.s <= s) {
            CnfFormula g = sparse_to_cnf(f, cnf_cap);
            for (auto& clause : g.clauses) out.cnf_part.clauses.push_back(std::move(clause));
            if (g.width > out.cnf_part.width) out.cnf_part.width = g.width;
        } else if (is_tau_regular(f, tau)) {
            out.regular_part.push_back(normalize(f));
        } else {
            throw param_error("decompose: LTF #" + std::to_string(j + 1) +
                              " is neither " + std::to_string(s) + "-sparse nor " +
                              tau.to_string() + "-regular");
        }
    }
    return out;
}

} // namespace ltfprg::ltf
