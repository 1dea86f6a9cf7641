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
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltfprg {

// Caller passed arguments violating an operation's contract.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter is outside its legal range (CLI exit code 1).
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact enumeration would exceed its cap (CLI exit code 2).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational with int64 numerator/denominator, always normalized,
/// denominator positive. Intermediates use 128-bit arithmetic.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d) {
        if (d == 0) throw usage_error("Rational: zero denominator");
        normalize(n, d);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator+(const Rational& o) const {
        return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw usage_error("Rational: division by zero");
        return from128(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q", or a plain decimal like "-0.125" (kept exact).
    static Rational parse(const std::string& s);

  private:
    using i128 = __int128;

    void normalize(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr i128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational overflow");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }
    static Rational from128(i128 n, i128 d) {
        Rational r;
        r.normalize(n, d);
        return r;
    }

    long long num_;
    long long den_;
};

/// Little-endian bit stream writer; bit j of the stream is bit (j%8) of byte (j/8).
class BitWriter {
  public:
    void write(uint64_t value, unsigned bits) {
        for (unsigned i = 0; i < bits; ++i) {
            size_t pos = nbits_++;
            if (pos / 8 >= bytes_.size()) bytes_.push_back(0);
            if ((value >> i) & 1) bytes_[pos / 8] |= static_cast<uint8_t>(1u << (pos % 8));
        }
    }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    size_t bit_count() const { return nbits_; }

  private:
    std::vector<uint8_t> bytes_;
    size_t nbits_ = 0;
};

/// Counting reader over the same layout; tests use bits_read() to assert
/// seed_length matches consumption exactly.
class BitReader {
  public:
    explicit BitReader(const std::vector<uint8_t>& bytes) : bytes_(&bytes) {}

    uint64_t read(unsigned bits) {
        uint64_t v = 0;
        for (unsigned i = 0; i < bits; ++i) {
            size_t pos = nbits_++;
            if (pos / 8 >= bytes_->size()) throw usage_error("BitReader: out of data");
            if (((*bytes_)[pos / 8] >> (pos % 8)) & 1) v |= (uint64_t{1} << i);
        }
        return v;
    }
    size_t bits_read() const { return nbits_; }

  private:
    const std::vector<uint8_t>* bytes_;
    size_t nbits_ = 0;
};

inline unsigned ceil_log2(uint64_t x) {
    unsigned r = 0;
    uint64_t p = 1;
    while (p < x) {
        p <<= 1;
        ++r;
    }
    return r;
}

inline bool is_power_of_two(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

} // namespace ltfprg
