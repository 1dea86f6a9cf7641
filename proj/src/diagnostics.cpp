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

#include "ltfprg/diagnostics.hpp"

#include <bitset>
#include <cmath>
#include <map>

namespace ltfprg::diagnostics {

using gf2m::FieldElement;
using kwise::KWiseSeed;

namespace {

double clamped_log2k(uint64_t k) { return std::max(1.0, std::log2(static_cast<double>(k))); }

double hoeffding_halfwidth(uint64_t N, double alpha = 0.05) {
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(N)));
}

KWiseSeed random_kwise_seed(uint32_t r, unsigned m, rng::SubStream& rs) {
    KWiseSeed s;
    s.coeffs.reserve(r);
    uint64_t mask = (uint64_t{1} << m) - 1;
    for (uint32_t j = 0; j < r; ++j)
        s.coeffs.push_back(gf2m::make_element(rs.next_u64() & mask, m));
    return s;
}

void check_unit_columns(const ColumnMatrix& W) {
    for (const auto& col : W) {
        double s2 = 0.0;
        for (double v : col) s2 += v * v;
        if (std::fabs(s2 - 1.0) > 1e-9)
            throw usage_error("columns must be unit-norm");
    }
}

double max_column_regularity(const ColumnMatrix& W) {
    double worst = 0.0;
    for (const auto& col : W) {
        double q = 0.0, s2 = 0.0;
        for (double v : col) {
            q += v * v * v * v;
            s2 += v * v;
        }
        worst = std::max(worst, std::sqrt(q) / s2);
    }
    return worst;
}

} // namespace

ltf::Point hybrid_sample(const HybridSpec& spec, rng::SubStream& rs) {
    const auto& p = spec.p;
    if (spec.b > p.ell) throw usage_error("hybrid_sample: level b out of range");
    auto hspec = p.hash_spec();
    KWiseSeed h = spec.hash_seed ? *spec.hash_seed
                                 : random_kwise_seed(p.r_hash, p.m_hash, rs);
    if (h.coeffs.size() != p.r_hash) throw usage_error("hybrid_sample: bad hash seed length");

    std::vector<uint32_t> assignment(p.n);
    for (uint64_t i = 1; i <= p.n; ++i) assignment[i - 1] = kwise::hash_eval(hspec, h, i);

    auto bspec = p.bucket_spec();
    ltf::Point x(p.n);
    for (uint32_t c = 1; c <= p.ell; ++c) {
        if (c <= spec.b) {
            KWiseSeed bs = random_kwise_seed(p.r_bucket, p.m_bucket, rs);
            for (uint64_t i = 1; i <= p.n; ++i) {
                if (assignment[i - 1] == c)
                    x[i - 1] = static_cast<int8_t>(kwise::bitgen_eval(bspec, bs, i));
            }
        } else {
            for (uint64_t i = 1; i <= p.n; ++i) {
                if (assignment[i - 1] == c) x[i - 1] = static_cast<int8_t>(rs.next_sign());
            }
        }
    }
    return x;
}

ExactDistribution hybrid_exact_distribution(const prggen::GenParams& p, uint32_t b,
                                            uint64_t cap_bits) {
    if (b > p.ell) throw usage_error("hybrid_exact_distribution: level b out of range");
    uint64_t hash_bits = uint64_t{p.r_hash} * p.m_hash;
    uint64_t bucket_bits = uint64_t{p.r_bucket} * p.m_bucket;
    if (hash_bits > cap_bits || bucket_bits > cap_bits || p.n > 16)
        throw cap_error("hybrid_exact_distribution: enumeration above cap");

    uint64_t hash_seeds = uint64_t{1} << hash_bits;
    uint64_t bucket_seeds = uint64_t{1} << bucket_bits;
    auto hspec = p.hash_spec();
    auto bspec = p.bucket_spec();

    ExactDistribution dist;
    dist.n = p.n;
    dist.prob.assign(uint64_t{1} << p.n, Rational(0));

    std::vector<uint32_t> assignment(p.n);
    for (uint64_t hc = 0; hc < hash_seeds; ++hc) {
        KWiseSeed h = kwise::seed_from_counter(p.r_hash, p.m_hash, hc);
        for (uint64_t i = 1; i <= p.n; ++i) assignment[i - 1] = kwise::hash_eval(hspec, h, i);

        // Per bucket: the coordinates it owns and, when pseudorandom, the
        // exact pattern counts over its seed space.
        std::vector<std::vector<uint64_t>> coords(p.ell);
        for (uint64_t i = 1; i <= p.n; ++i) coords[assignment[i - 1] - 1].push_back(i);

        std::vector<std::vector<uint64_t>> pattern_counts(p.ell);
        for (uint32_t c = 1; c <= b; ++c) {
            auto& counts = pattern_counts[c - 1];
            counts.assign(uint64_t{1} << coords[c - 1].size(), 0);
            for (uint64_t sc = 0; sc < bucket_seeds; ++sc) {
                KWiseSeed bs = kwise::seed_from_counter(p.r_bucket, p.m_bucket, sc);
                uint64_t pat = 0;
                for (size_t t = 0; t < coords[c - 1].size(); ++t) {
                    if (kwise::bitgen_eval(bspec, bs, coords[c - 1][t]) == +1)
                        pat |= uint64_t{1} << t;
                }
                ++counts[pat];
            }
        }

        for (uint64_t mask = 0; mask < (uint64_t{1} << p.n); ++mask) {
            Rational pr(1);
            for (uint32_t c = 1; c <= p.ell; ++c) {
                size_t sz = coords[c - 1].size();
                if (sz == 0) continue;
                uint64_t pat = 0;
                for (size_t t = 0; t < sz; ++t) {
                    if ((mask >> (coords[c - 1][t] - 1)) & 1) pat |= uint64_t{1} << t;
                }
                if (c <= b) {
                    pr = pr * Rational(static_cast<long long>(pattern_counts[c - 1][pat]),
                                       static_cast<long long>(bucket_seeds));
                } else {
                    pr = pr * Rational(1, int64_t{1} << sz);
                }
            }
            dist.prob[mask] = dist.prob[mask] + pr / Rational(static_cast<long long>(hash_seeds));
        }
    }
    return dist;
}

ExactDistribution gen_exact_distribution(const prggen::GenParams& p, uint64_t cap_bits) {
    if (p.n > 16) throw cap_error("gen_exact_distribution: n above cap");
    ExactDistribution dist;
    dist.n = p.n;
    std::vector<uint64_t> counts(uint64_t{1} << p.n, 0);
    uint64_t total = 0;
    prggen::for_each_seed(
        p,
        [&](uint64_t, const prggen::GenSeed& s) {
            auto y = prggen::generate(p, s);
            uint64_t mask = 0;
            for (uint64_t i = 0; i < p.n; ++i)
                if (y[i] == +1) mask |= uint64_t{1} << i;
            ++counts[mask];
            ++total;
        },
        cap_bits);
    dist.prob.reserve(counts.size());
    for (uint64_t c : counts)
        dist.prob.emplace_back(static_cast<long long>(c), static_cast<long long>(total));
    return dist;
}

std::vector<eval_count::ExpectationEstimate> hybrid_scan(const eval_count::BoolFn& F,
                                                         const prggen::GenParams& p, bool exact,
                                                         uint64_t N, uint64_t stream_id,
                                                         uint64_t cap_bits) {
    std::vector<eval_count::ExpectationEstimate> out;
    out.reserve(p.ell + 1);
    for (uint32_t b = 0; b <= p.ell; ++b) {
        eval_count::ExpectationEstimate e;
        if (exact) {
            auto dist = hybrid_exact_distribution(p, b, cap_bits);
            Rational mean(0);
            std::vector<int8_t> x(p.n);
            for (uint64_t mask = 0; mask < dist.prob.size(); ++mask) {
                for (uint64_t i = 0; i < p.n; ++i)
                    x[i] = ((mask >> i) & 1) ? int8_t{+1} : int8_t{-1};
                mean = mean + dist.prob[mask] * Rational(F(x));
            }
            e.exact = mean;
            e.value = mean.to_double();
            e.method = eval_count::Method::ExactSeeds;
            e.sample_count = uint64_t{1} << p.seed_len_bits;
        } else {
            long long sum = 0;
            HybridSpec spec{p, std::nullopt, b};
            for (uint64_t j = 0; j < N; ++j) {
                rng::SubStream rs(stream_id, (uint64_t{b} << 42) | j);
                sum += F(hybrid_sample(spec, rs));
            }
            e.value = static_cast<double>(sum) / static_cast<double>(N);
            e.method = eval_count::Method::MonteCarloSeeds;
            e.error = hoeffding_halfwidth(N);
            e.sample_count = N;
            e.stream_id = stream_id;
            e.is_exact = false;
        }
        out.push_back(std::move(e));
    }
    return out;
}

double bucket_statistic(const ColumnMatrix& W, const std::vector<uint32_t>& assignment,
                        uint32_t bucket, uint64_t k) {
    if (W.empty() || W.size() != k) throw usage_error("bucket_statistic: k != column count");
    check_unit_columns(W);
    double logk = clamped_log2k(k);
    double sum = 0.0;
    for (const auto& col : W) {
        if (col.size() != assignment.size())
            throw usage_error("bucket_statistic: column length != assignment length");
        double norm_sq = 0.0;
        for (size_t i = 0; i < col.size(); ++i) {
            if (assignment[i] == bucket) norm_sq += col[i] * col[i];
        }
        if (norm_sq > 0.0) sum += std::pow(norm_sq, 2.0 * logk);
    }
    return sum > 0.0 ? std::pow(sum, 1.0 / logk) : 0.0;
}

BucketStatReport expected_bucket_statistic(const ColumnMatrix& W, const prggen::GenParams& p,
                                           uint64_t n_hash_samples, uint64_t stream_id) {
    check_unit_columns(W);
    if (n_hash_samples < 1) throw param_error("expected_bucket_statistic: need >= 1 sample");
    uint64_t k = W.size();
    auto hspec = p.hash_spec();

    BucketStatReport rep;
    double sum = 0.0, sum_sq = 0.0;
    for (uint64_t t = 0; t < n_hash_samples; ++t) {
        rng::SubStream rs(stream_id, t);
        KWiseSeed h = random_kwise_seed(p.r_hash, p.m_hash, rs);
        std::vector<uint32_t> assignment(p.n);
        for (uint64_t i = 1; i <= p.n; ++i) assignment[i - 1] = kwise::hash_eval(hspec, h, i);
        double total = 0.0;
        std::vector<double> per_bucket(p.ell);
        for (uint32_t b = 1; b <= p.ell; ++b) {
            per_bucket[b - 1] = bucket_statistic(W, assignment, b, k);
            total += per_bucket[b - 1];
        }
        if (t == 0) {
            rep.example.per_bucket = per_bucket;
            rep.example.total = total;
        }
        sum += total;
        sum_sq += total * total;
    }
    double nd = static_cast<double>(n_hash_samples);
    rep.estimate = sum / nd;
    double var = std::max(0.0, sum_sq / nd - rep.estimate * rep.estimate);
    rep.std_error = n_hash_samples > 1 ? std::sqrt(var / (nd - 1.0)) : 0.0;
    double tau = 1.0 / static_cast<double>(p.ell);
    rep.bound = 4.0 * clamped_log2k(k) * tau * std::log2(1.0 / tau);
    rep.example.bound = rep.bound;
    rep.heuristic_breach = rep.estimate > rep.bound;
    return rep;
}

RegionLabel classify_region(std::span<const double> v, std::span<const double> theta,
                            double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw param_error("classify_region: lambda not in (0,1)");
    if (v.size() != theta.size()) throw usage_error("classify_region: dimension mismatch");
    bool inner = true;
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] > theta[j]) {
            inner = false;
            break;
        }
    }
    if (inner) return RegionLabel::Inner;
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] >= theta[j] + lambda) return RegionLabel::Outer;
    }
    return RegionLabel::Strip;
}

GapReport invariance_gap_mc(const ColumnMatrix& W, std::span<const double> theta, uint64_t N,
                            uint64_t stream_id) {
    check_unit_columns(W);
    size_t k = W.size();
    size_t n = W[0].size();
    uint64_t in_u = 0, in_g = 0;
    std::vector<double> v(k);
    // The +/-1 side accumulates positive and negative parts separately so
    // that exact ties (equal weight mass on both signs) cancel to 0 instead
    // of picking up order-dependent rounding noise at the boundary.
    std::vector<double> pos(k), neg(k);
    for (uint64_t j = 0; j < N; ++j) {
        rng::SubStream ru(stream_id, 2 * j);
        std::fill(pos.begin(), pos.end(), 0.0);
        std::fill(neg.begin(), neg.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            int s = ru.next_sign();
            for (size_t c = 0; c < k; ++c) {
                if (s > 0)
                    pos[c] += W[c][i];
                else
                    neg[c] += W[c][i];
            }
        }
        bool inner = true;
        for (size_t c = 0; c < k; ++c)
            if (pos[c] - neg[c] > theta[c]) inner = false;
        if (inner) ++in_u;

        rng::SubStream rg(stream_id, 2 * j + 1);
        std::fill(v.begin(), v.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            double g = rg.next_normal();
            for (size_t c = 0; c < k; ++c) v[c] += W[c][i] * g;
        }
        inner = true;
        for (size_t c = 0; c < k; ++c)
            if (v[c] > theta[c]) inner = false;
        if (inner) ++in_g;
    }
    GapReport rep;
    rep.p_uniform = static_cast<double>(in_u) / static_cast<double>(N);
    rep.p_gaussian = static_cast<double>(in_g) / static_cast<double>(N);
    rep.gap = std::fabs(rep.p_uniform - rep.p_gaussian);
    rep.uncertainty = 2.0 * hoeffding_halfwidth(N);
    double tau = max_column_regularity(W);
    double L = std::log2(static_cast<double>(k) + 2.0);
    rep.bound = std::pow(L, 1.6) * std::pow(tau * std::log2(1.0 / tau), 0.2);
    return rep;
}

StripReport strip_probability_mc(const ColumnMatrix& W, std::span<const double> theta,
                                 double lambda, uint64_t N, uint64_t stream_id) {
    check_unit_columns(W);
    if (!(lambda > 0.0 && lambda < 1.0))
        throw param_error("strip_probability_mc: lambda not in (0,1)");
    size_t k = W.size();
    size_t n = W[0].size();
    uint64_t hits = 0;
    std::vector<double> v(k);
    for (uint64_t j = 0; j < N; ++j) {
        rng::SubStream rg(stream_id, j);
        std::fill(v.begin(), v.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            double g = rg.next_normal();
            for (size_t c = 0; c < k; ++c) v[c] += W[c][i] * g;
        }
        if (classify_region(v, theta, lambda) == RegionLabel::Strip) ++hits;
    }
    StripReport rep;
    rep.estimate = static_cast<double>(hits) / static_cast<double>(N);
    rep.uncertainty = hoeffding_halfwidth(N);
    rep.bound = lambda * std::sqrt(clamped_log2k(k));
    return rep;
}

Rational bitgen_pattern_probability(const kwise::BitGenSpec& spec,
                                    const std::vector<std::pair<uint64_t, int>>& pattern) {
    // The low bit of the polynomial value is GF(2)-linear in the seed bits,
    // so the pattern event is an affine subspace of the seed space: count
    // 2^(bits - rank), or zero when inconsistent.
    uint64_t bits = uint64_t{spec.r} * spec.m;
    if (bits > 256) throw cap_error("bitgen_pattern_probability: seed space too wide");
    std::vector<std::pair<std::bitset<256>, int>> pivots; // (row, rhs), leading bit = pivot
    std::vector<int> pivot_bit;
    int rank = 0;

    for (const auto& [i, sign] : pattern) {
        if (i < 1 || i > spec.n) throw usage_error("bitgen_pattern_probability: index out of range");
        if (sign != 1 && sign != -1)
            throw usage_error("bitgen_pattern_probability: sign must be +/-1");
        std::bitset<256> row;
        // row bit (j*m + t): low bit of x^t * alpha_i^j.
        FieldElement alpha = gf2m::make_element(i - 1, spec.m);
        FieldElement power = gf2m::make_element(1, spec.m); // alpha^0
        for (uint32_t j = 0; j < spec.r; ++j) {
            for (unsigned t = 0; t < spec.m; ++t) {
                FieldElement basis = gf2m::make_element(uint64_t{1} << t, spec.m);
                FieldElement prod = gf2m::gf_mul(basis, power, spec.mod);
                if (prod.value & 1) row.set(uint64_t{j} * spec.m + t);
            }
            power = gf2m::gf_mul(power, alpha, spec.mod);
        }
        int rhs = (sign == -1) ? 1 : 0;
        // reduce against existing pivots
        for (size_t pv = 0; pv < pivots.size(); ++pv) {
            if (row.test(pivot_bit[pv])) {
                row ^= pivots[pv].first;
                rhs ^= pivots[pv].second;
            }
        }
        if (row.none()) {
            if (rhs != 0) return Rational(0); // inconsistent: empty event
            continue;
        }
        int lead = 0;
        for (int bpos = static_cast<int>(bits) - 1; bpos >= 0; --bpos) {
            if (row.test(bpos)) {
                lead = bpos;
                break;
            }
        }
        pivots.emplace_back(row, rhs);
        pivot_bit.push_back(lead);
        ++rank;
    }
    if (rank >= 63) throw cap_error("bitgen_pattern_probability: rank too large");
    return Rational(1, int64_t{1} << rank);
}

BrReport br_fooling_test(const ltf::CnfFormula& G, uint32_t r, uint64_t n, uint64_t cap_bits) {
    if (n > cap_bits)
        throw cap_error("br_fooling_test: 2^" + std::to_string(n) + " points exceed cap");
    if (G.clauses.size() > 20) throw cap_error("br_fooling_test: too many clauses");

    // Uniform side by cube enumeration.
    long long sum = 0;
    std::vector<int8_t> x(n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        for (uint64_t i = 0; i < n; ++i) x[i] = ((mask >> i) & 1) ? int8_t{+1} : int8_t{-1};
        sum += ltf::evaluate_cnf(G, x);
    }
    Rational e_u(sum, int64_t{1} << n);

    // Seed side: Pr[G true] by inclusion-exclusion over falsified-clause sets.
    auto spec = kwise::make_bitgen(std::max<uint64_t>(n, 1), r);
    Rational pr_true(0);
    size_t nc = G.clauses.size();
    for (uint64_t sub = 0; sub < (uint64_t{1} << nc); ++sub) {
        std::map<uint64_t, int> fixed; // var -> sign forcing every chosen clause false
        bool conflict = false;
        for (size_t ci = 0; ci < nc && !conflict; ++ci) {
            if (!((sub >> ci) & 1)) continue;
            for (const auto& lit : G.clauses[ci]) {
                int forced = -lit.polarity; // literal unsatisfied
                auto [it, inserted] = fixed.emplace(lit.var, forced);
                if (!inserted && it->second != forced) {
                    conflict = true;
                    break;
                }
            }
        }
        if (conflict) continue;
        std::vector<std::pair<uint64_t, int>> pattern(fixed.begin(), fixed.end());
        Rational pr = bitgen_pattern_probability(spec, pattern);
        int parity = __builtin_popcountll(sub) & 1;
        pr_true = parity ? pr_true - pr : pr_true + pr;
    }
    Rational e_z = Rational(1) - Rational(2) * pr_true;

    BrReport rep;
    rep.e_uniform = e_u;
    rep.e_kwise = e_z;
    rep.err = (e_z - e_u) < Rational(0) ? e_u - e_z : e_z - e_u;
    rep.seed_bits = uint64_t{r} * spec.m;
    uint64_t M = std::max<uint64_t>(uint64_t{1}, G.clauses.size());
    rep.heuristic_delta =
        static_cast<double>(M) * std::exp2(-std::sqrt(static_cast<double>(r)));
    rep.heuristic_breach = rep.err.to_double() > rep.heuristic_delta;
    return rep;
}

} // namespace ltfprg::diagnostics
