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

#include "ltfprg/common.hpp"

namespace ltfprg {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw param_error("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        if (d == 0) throw param_error("Rational::parse: zero denominator");
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    // Decimal literal, kept exact: p.q -> (p*10^len(q) +/- q) / 10^len(q).
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    long long whole = ip.empty() || ip == "-" || ip == "+" ? 0 : std::stoll(ip);
    long long den = 1;
    long long frac = 0;
    for (char c : fp) {
        if (c < '0' || c > '9') throw param_error("Rational::parse: bad decimal");
        if (den > (1LL << 56)) throw param_error("Rational::parse: too many decimal digits");
        den *= 10;
        frac = frac * 10 + (c - '0');
    }
    long long num = whole * den + (neg ? -frac : frac);
    return Rational(num, den);
}

} // namespace ltfprg
