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

#include "ltfprg/prggen.hpp"

#include <algorithm>
#include <cmath>

namespace ltfprg::prggen {

namespace {

uint32_t clamped_log2(uint64_t k) { return std::max(1u, ceil_log2(k)); }

// log k stand-in for heuristic closed forms: log2(k+2), never below log2(3).
double heuristic_log(uint64_t k) { return std::log2(static_cast<double>(k) + 2.0); }

double tau_log_term(double tau) { return tau * std::log2(1.0 / tau); }

// The delta_cnf-dependent additive terms of the smooth-test error bound,
// evaluated with unit constants.
std::vector<std::pair<std::string, double>> delta_terms(uint64_t n, uint64_t k, double tau,
                                                        double lambda, double delta) {
    double L = heuristic_log(k);
    double inv_tau = 1.0 / tau;
    double nd = static_cast<double>(n);
    std::vector<std::pair<std::string, double>> t;
    t.emplace_back("logk3_over_lambda4_deltacnf_n2",
                   std::pow(L, 3) / std::pow(lambda, 4) * inv_tau * delta * nd * nd);
    t.emplace_back("inv_tau_sqrt_deltacnf", inv_tau * std::sqrt(delta));
    for (int a = 1; a <= 3; ++a) {
        t.emplace_back("inv_tau_n" + std::to_string(a) + "_sqrt_deltacnf_term",
                       inv_tau * std::pow(nd, a) * std::sqrt(delta) * std::pow(L, a - 1) /
                           std::pow(lambda, a));
    }
    return t;
}

uint64_t compute_seed_len(uint32_t r_hash, uint8_t m_hash, uint32_t ell, uint32_t r_bucket,
                          uint8_t m_bucket) {
    return uint64_t{r_hash} * m_hash + uint64_t{ell} * r_bucket * m_bucket;
}

} // namespace

kwise::HashFamilySpec GenParams::hash_spec() const {
    return kwise::HashFamilySpec{n, ell, r_hash, m_hash, gf2m::default_modulus(m_hash)};
}

kwise::BitGenSpec GenParams::bucket_spec() const {
    return kwise::BitGenSpec{n, r_bucket, m_bucket, gf2m::default_modulus(m_bucket)};
}

double heuristic_lambda(uint64_t k, double tau) {
    return std::pow(heuristic_log(k), 1.1) * std::pow(tau_log_term(tau), 0.2);
}

GenParams plan_params(uint64_t n, uint64_t k, uint32_t s, double tau, double delta_target,
                      const Overrides& ov) {
    if (n < 2) throw param_error("plan_params: n must be >= 2");
    if (k < 1) throw param_error("plan_params: k must be >= 1");
    if (!(tau > 0.0 && tau < 1.0)) throw param_error("plan_params: tau must be in (0, 1)");

    GenParams p;
    p.n = n;

    if (ov.ell) {
        if (!is_power_of_two(*ov.ell) || *ov.ell < 2)
            throw param_error("plan_params: l override must be a power of two >= 2");
        p.ell = *ov.ell;
    } else {
        uint64_t ell = 2;
        while (static_cast<double>(ell) < 1.0 / tau) ell <<= 1;
        p.ell = static_cast<uint32_t>(ell);
    }

    uint32_t lk = clamped_log2(k);
    p.r_hash = ov.r_hash ? *ov.r_hash : std::max(2u, 2u * ceil_log2(k));

    double lambda = heuristic_lambda(k, tau);
    if (ov.delta_cnf) {
        p.delta_cnf = *ov.delta_cnf;
    } else {
        // Largest power of two whose every delta-dependent bound term stays
        // at or below delta_target.
        if (!(delta_target > 0.0)) throw param_error("plan_params: delta_target must be > 0");
        int j = 1;
        for (; j <= 400; ++j) {
            double cand = std::exp2(-j);
            bool ok = true;
            for (const auto& [name, v] : delta_terms(n, k, tau, lambda, cand)) {
                (void)name;
                if (v > delta_target) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        if (j > 400) throw param_error("plan_params: no feasible delta_cnf above 2^-400");
        p.delta_cnf = std::exp2(-j);
    }

    if (ov.r_bucket) {
        p.r_bucket = *ov.r_bucket;
    } else {
        // log2(M / delta_cnf) with M = k 2^s, kept in log space so large s
        // cannot overflow the intermediate.
        double log_ratio =
            std::log2(static_cast<double>(k)) + static_cast<double>(s) - std::log2(p.delta_cnf);
        double cnf_term = std::ceil(ov.c_br * std::ceil(log_ratio * log_ratio));
        if (!(cnf_term >= 0.0) || cnf_term > 1e9)
            throw cap_error("plan_params: r_bucket term " + std::to_string(cnf_term) +
                            " exceeds the representable schedule");
        p.r_bucket = 4 * lk + static_cast<uint32_t>(cnf_term);
    }
    if (p.r_hash < 1 || p.r_bucket < 1) throw param_error("plan_params: independence must be >= 1");

    p.m_hash = static_cast<uint8_t>(std::max({ceil_log2(n), ceil_log2(p.ell), 1u}));
    p.m_bucket = static_cast<uint8_t>(std::max(ceil_log2(n), 1u));
    p.seed_len_bits = compute_seed_len(p.r_hash, p.m_hash, p.ell, p.r_bucket, p.m_bucket);
    return p;
}

double solve_regularity_tau(uint64_t k, double delta_target) {
    if (!(delta_target > 0.0 && delta_target < 1.0))
        throw param_error("plan_from_weight: delta_target must be in (0, 1)");

    double L = heuristic_log(k);
    auto err_at = [&](double tau) { return std::pow(L, 1.6) * std::pow(tau * std::log(1.0 / tau), 0.2); };

    const double tau_floor = std::exp2(-64);
    if (err_at(0.5) <= delta_target) return 0.5;
    if (err_at(tau_floor) > delta_target)
        throw param_error("plan_from_weight: no feasible tau above 2^-64 for delta_target " +
                          std::to_string(delta_target));
    // err_at is increasing on (0, 1/e]; find the largest feasible tau.
    double lo = tau_floor, hi = std::exp(-1.0);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (err_at(mid) <= delta_target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

GenParams plan_from_weight(uint64_t n, uint64_t k, uint64_t t, double delta_target,
                           const Overrides& ov) {
    if (t < 1) throw param_error("plan_from_weight: t must be >= 1");
    double tau = solve_regularity_tau(k, delta_target);
    double s_real = std::pow(static_cast<double>(t) / tau, 2.0);
    if (s_real > 4e9)
        throw cap_error("plan_from_weight: sparsity bound (t/tau)^2 = " + std::to_string(s_real) +
                        " is not representable");
    uint32_t s = static_cast<uint32_t>(std::ceil(s_real));
    return plan_params(n, k, s, tau, delta_target, ov);
}

uint64_t seed_length(const GenParams& p) {
    return compute_seed_len(p.r_hash, p.m_hash, p.ell, p.r_bucket, p.m_bucket);
}

std::vector<int8_t> generate(const GenParams& p, const GenSeed& seed) {
    if (seed.hash_seed.coeffs.size() != p.r_hash || seed.bucket_seeds.size() != p.ell)
        throw usage_error("generate: seed shape does not match params");
    for (const auto& bs : seed.bucket_seeds) {
        if (bs.coeffs.size() != p.r_bucket)
            throw usage_error("generate: bucket seed length != r_bucket");
    }
    auto hspec = p.hash_spec();
    auto bspec = p.bucket_spec();
    std::vector<int8_t> y(p.n);
    for (uint64_t i = 1; i <= p.n; ++i) {
        uint32_t b = kwise::hash_eval(hspec, seed.hash_seed, i);
        y[i - 1] = static_cast<int8_t>(kwise::bitgen_eval(bspec, seed.bucket_seeds[b - 1], i));
    }
    return y;
}

GenSeed seed_from_counter(const GenParams& p, uint64_t counter) {
    GenSeed s;
    auto take = [&counter](unsigned bits) {
        uint64_t mask = bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
        uint64_t v = counter & mask;
        counter >>= bits;
        return v;
    };
    s.hash_seed.coeffs.reserve(p.r_hash);
    for (uint32_t j = 0; j < p.r_hash; ++j)
        s.hash_seed.coeffs.push_back(gf2m::make_element(take(p.m_hash), p.m_hash));
    s.bucket_seeds.resize(p.ell);
    for (uint32_t b = 0; b < p.ell; ++b) {
        s.bucket_seeds[b].coeffs.reserve(p.r_bucket);
        for (uint32_t j = 0; j < p.r_bucket; ++j)
            s.bucket_seeds[b].coeffs.push_back(gf2m::make_element(take(p.m_bucket), p.m_bucket));
    }
    return s;
}

std::vector<uint8_t> seed_to_bytes(const GenParams& p, const GenSeed& seed) {
    BitWriter w;
    kwise::seed_to_bits(seed.hash_seed, w);
    for (const auto& bs : seed.bucket_seeds) kwise::seed_to_bits(bs, w);
    if (w.bit_count() != p.seed_len_bits)
        throw usage_error("seed_to_bytes: seed shape does not match params");
    return w.bytes();
}

GenSeed seed_from_bytes(const GenParams& p, const std::vector<uint8_t>& bytes) {
    BitReader r(bytes);
    GenSeed s;
    s.hash_seed = kwise::seed_from_bits(p.r_hash, p.m_hash, r);
    s.bucket_seeds.reserve(p.ell);
    for (uint32_t b = 0; b < p.ell; ++b)
        s.bucket_seeds.push_back(kwise::seed_from_bits(p.r_bucket, p.m_bucket, r));
    return s;
}

std::string seed_to_hex(const GenParams& p, const GenSeed& seed) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t byte : seed_to_bytes(p, seed)) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

GenSeed seed_from_hex(const GenParams& p, const std::string& hex) {
    if (hex.size() % 2 != 0) throw param_error("seed_from_hex: odd hex length");
    std::vector<uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    auto nibble = [](char c) -> uint8_t {
        if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
        throw param_error("seed_from_hex: invalid hex digit");
    };
    for (size_t i = 0; i < hex.size(); i += 2)
        bytes.push_back(static_cast<uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
    if (bytes.size() * 8 < p.seed_len_bits)
        throw param_error("seed_from_hex: too few bits for this parameter set");
    return seed_from_bytes(p, bytes);
}

void for_each_seed(const GenParams& p, const std::function<void(uint64_t, const GenSeed&)>& fn,
                   uint64_t cap_bits) {
    if (p.seed_len_bits > cap_bits)
        throw cap_error("for_each_seed: 2^" + std::to_string(p.seed_len_bits) +
                        " seeds exceed cap 2^" + std::to_string(cap_bits));
    uint64_t total = uint64_t{1} << p.seed_len_bits;
    for (uint64_t c = 0; c < total; ++c) fn(c, seed_from_counter(p, c));
}

BoundReport theoretical_error_bound(const GenParams& p, uint64_t k, double tau) {
    BoundReport rep;
    double L = heuristic_log(k);
    rep.lambda = heuristic_lambda(k, tau);
    double hybrid = std::pow(L, 3) / std::pow(rep.lambda, 4) * std::pow(L, 3) * tau_log_term(tau);
    rep.terms.emplace_back("logk6_taulog_over_lambda4", hybrid);
    for (auto& term : delta_terms(p.n, k, tau, rep.lambda, p.delta_cnf))
        rep.terms.push_back(std::move(term));
    rep.terms.emplace_back("strip_lambda_sqrt_logk", rep.lambda * std::sqrt(L));
    rep.terms.emplace_back("invariance_logk85_taulog15",
                           std::pow(L, 1.6) * std::pow(tau_log_term(tau), 0.2));
    rep.delta_estimate = 0.0;
    for (const auto& [name, v] : rep.terms) {
        (void)name;
        rep.delta_estimate += v;
    }
    return rep;
}

} // namespace ltfprg::prggen
