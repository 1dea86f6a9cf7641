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

#include "ltfprg/eval_count.hpp"

#include <cmath>
#include <thread>

#include "ltfprg/rng.hpp"

namespace ltfprg::eval_count {

namespace {

// Order-independent parallel reduction of fn(i) over [0, total) into an
// int64 sum; each worker owns a contiguous counter range.
long long parallel_sum(uint64_t total, unsigned workers,
                       const std::function<long long(uint64_t, uint64_t)>& range_sum) {
    if (workers <= 1 || total < 2 * workers) return range_sum(0, total);
    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> threads;
    uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = w * chunk;
        uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
        threads.emplace_back([&, w, lo, hi] { partial[w] = range_sum(lo, hi); });
    }
    for (auto& t : threads) t.join();
    long long sum = 0;
    for (long long v : partial) sum += v;
    return sum;
}

} // namespace

ExpectationEstimate exact_uniform_expectation(const BoolFn& F, uint64_t n, uint64_t cap_bits,
                                              unsigned workers) {
    if (n > cap_bits)
        throw cap_error("exact_uniform_expectation: 2^" + std::to_string(n) +
                        " points exceed cap 2^" + std::to_string(cap_bits));
    uint64_t total = uint64_t{1} << n;
    long long sum = parallel_sum(total, workers, [&](uint64_t lo, uint64_t hi) {
        std::vector<int8_t> x(n);
        long long s = 0;
        for (uint64_t mask = lo; mask < hi; ++mask) {
            for (uint64_t i = 0; i < n; ++i)
                x[i] = ((mask >> i) & 1) ? int8_t{+1} : int8_t{-1};
            s += F(x);
        }
        return s;
    });
    ExpectationEstimate e;
    e.exact = Rational(sum, static_cast<long long>(total));
    e.value = e.exact.to_double();
    e.method = Method::ExactUniform;
    e.sample_count = total;
    return e;
}

ExpectationEstimate exact_gen_expectation(const BoolFn& F, const prggen::GenParams& p,
                                          uint64_t cap_bits, unsigned workers) {
    if (p.seed_len_bits > cap_bits)
        throw cap_error("exact_gen_expectation: 2^" + std::to_string(p.seed_len_bits) +
                        " seeds exceed cap 2^" + std::to_string(cap_bits));
    uint64_t total = uint64_t{1} << p.seed_len_bits;
    long long sum = parallel_sum(total, workers, [&](uint64_t lo, uint64_t hi) {
        long long s = 0;
        for (uint64_t c = lo; c < hi; ++c) {
            auto seed = prggen::seed_from_counter(p, c);
            s += F(prggen::generate(p, seed));
        }
        return s;
    });
    ExpectationEstimate e;
    e.exact = Rational(sum, static_cast<long long>(total));
    e.value = e.exact.to_double();
    e.method = Method::ExactSeeds;
    e.sample_count = total;
    return e;
}

prggen::GenSeed random_gen_seed(const prggen::GenParams& p, uint64_t stream_id, uint64_t index) {
    rng::SubStream rs(stream_id, index);
    prggen::GenSeed s;
    auto rand_coeff = [&](unsigned m) {
        uint64_t mask = (uint64_t{1} << m) - 1;
        return gf2m::make_element(rs.next_u64() & mask, m);
    };
    s.hash_seed.coeffs.reserve(p.r_hash);
    for (uint32_t j = 0; j < p.r_hash; ++j) s.hash_seed.coeffs.push_back(rand_coeff(p.m_hash));
    s.bucket_seeds.resize(p.ell);
    for (uint32_t b = 0; b < p.ell; ++b) {
        s.bucket_seeds[b].coeffs.reserve(p.r_bucket);
        for (uint32_t j = 0; j < p.r_bucket; ++j)
            s.bucket_seeds[b].coeffs.push_back(rand_coeff(p.m_bucket));
    }
    return s;
}

ExpectationEstimate mc_gen_expectation(const BoolFn& F, const prggen::GenParams& p, uint64_t N,
                                       uint64_t stream_id, double alpha, unsigned workers) {
    if (N < 1) throw param_error("mc_gen_expectation: N must be >= 1");
    long long sum = parallel_sum(N, workers, [&](uint64_t lo, uint64_t hi) {
        long long s = 0;
        for (uint64_t j = lo; j < hi; ++j) {
            auto seed = random_gen_seed(p, stream_id, j);
            s += F(prggen::generate(p, seed));
        }
        return s;
    });
    ExpectationEstimate e;
    e.value = static_cast<double>(sum) / static_cast<double>(N);
    e.method = Method::MonteCarloSeeds;
    e.error = std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(N)));
    e.sample_count = N;
    e.stream_id = stream_id;
    e.is_exact = false;
    return e;
}

FoolingReport fooling_error(const BoolFn& F, uint64_t n, const prggen::GenParams& p, FoolMode mode,
                            uint64_t N, uint64_t stream_id, uint64_t cap_bits, unsigned workers) {
    FoolingReport rep;
    rep.e_uniform = exact_uniform_expectation(F, n, cap_bits, workers);
    rep.e_gen = (mode == FoolMode::ExactBoth)
                    ? exact_gen_expectation(F, p, cap_bits, workers)
                    : mc_gen_expectation(F, p, N, stream_id, 0.05, workers);
    rep.err = std::fabs(rep.e_gen.value - rep.e_uniform.value);
    rep.uncertainty = rep.e_gen.error + rep.e_uniform.error;
    return rep;
}

CountReport approx_count(const BoolFn& F, uint64_t n, const prggen::GenParams& p, FoolMode mode,
                         uint64_t N, uint64_t stream_id, uint64_t cap_bits, unsigned workers) {
    CountReport rep;
    rep.n = n;
    rep.expectation = (mode == FoolMode::ExactBoth)
                          ? exact_gen_expectation(F, p, cap_bits, workers)
                          : mc_gen_expectation(F, p, N, stream_id, 0.05, workers);
    rep.exact = rep.expectation.is_exact;
    double scale = std::exp2(static_cast<double>(n));
    rep.satisfying_estimate = scale * (1.0 - rep.expectation.value) / 2.0;
    if (rep.exact && n <= 62) {
        Rational points(static_cast<long long>(uint64_t{1} << n));
        rep.exact_count = points * (Rational(1) - rep.expectation.exact) / Rational(2);
    }
    return rep;
}

ltf::Intersection ip_to_intersection(uint64_t n, const std::vector<IpConstraint>& constraints) {
    ltf::Intersection F;
    F.n = n;
    for (const auto& c : constraints) {
        if (c.weights.size() != n)
            throw param_error("ip_to_intersection: constraint arity != n");
        long long wsum = 0;
        for (long long w : c.weights) wsum += w;
        // b = (x+1)/2: w.b <= c  <=>  w.x <= 2c - sum(w).
        ltf::Ltf f;
        f.weights = c.weights;
        f.theta = c.bound * Rational(2) - Rational(wsum);
        F.ltfs.push_back(std::move(f));
    }
    return F;
}

} // namespace ltfprg::eval_count
