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

namespace ltfprg::rng {

/// SplitMix64 finalizer; the core mixer of the counter-based streams.
uint64_t mix64(uint64_t x);

/// Stateless draw: word `counter` of stream `stream_id`.
uint64_t draw(uint64_t stream_id, uint64_t counter);

/// Counter-based stream keyed by (stream_id, sample index). Samples are
/// independent substreams, so enumeration order and worker partitioning
/// cannot change any value.
class SubStream {
  public:
    SubStream(uint64_t stream_id, uint64_t sample_index);

    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();
    /// -1 or +1, one random bit.
    int next_sign();
    /// Standard normal via inverse CDF (Acklam's rational approximation,
    /// relative error < 1.2e-9, refined by one Halley step).
    double next_normal();

  private:
    uint64_t key_;
    uint64_t ctr_ = 0;
};

/// Inverse standard normal CDF used by next_normal; exposed for tests.
double inverse_normal_cdf(double p);

} // namespace ltfprg::rng
