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

#include "ltfprg/problem_io.hpp"

#include <cmath>
#include <fstream>

namespace ltfprg::io {

namespace {

Rational parse_rational_field(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) {
        // Re-parse the literal text path is gone here; keep dyadic exactness
        // by scaling the double (exact for the binary literals we accept).
        double d = v.get<double>();
        long long den = 1;
        while (d != std::floor(d) && den < (1LL << 40)) {
            d *= 2;
            den *= 2;
        }
        if (d != std::floor(d)) throw param_error("theta: non-dyadic float, use a \"p/q\" string");
        return Rational(static_cast<long long>(d), den);
    }
    throw param_error("theta: expected number or \"p/q\" string");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    in >> j;
    return j;
}

} // namespace

Problem parse_problem(const json& j) {
    Problem prob;
    if (!j.contains("n") || !j.contains("constraints"))
        throw param_error("problem file: missing \"n\" or \"constraints\"");
    prob.n = j.at("n").get<uint64_t>();
    std::string vars = j.value("vars", std::string("pm1"));
    if (vars == "zeroone")
        prob.zeroone = true;
    else if (vars != "pm1")
        throw param_error("problem file: vars must be \"pm1\" or \"zeroone\"");
    for (const auto& cj : j.at("constraints")) {
        eval_count::IpConstraint c;
        for (const auto& w : cj.at("weights")) {
            if (!w.is_number_integer()) throw param_error("problem file: weights must be integers");
            c.weights.push_back(w.get<long long>());
        }
        if (c.weights.size() != prob.n)
            throw param_error("problem file: constraint arity != n");
        c.bound = parse_rational_field(cj.at("theta"));
        prob.constraints.push_back(std::move(c));
    }
    if (prob.constraints.empty()) throw param_error("problem file: no constraints");
    return prob;
}

Problem load_problem(const std::string& path) { return parse_problem(load_json(path)); }

ltf::Intersection problem_to_intersection(const Problem& prob) {
    if (prob.zeroone) return eval_count::ip_to_intersection(prob.n, prob.constraints);
    ltf::Intersection F;
    F.n = prob.n;
    for (const auto& c : prob.constraints) F.ltfs.push_back(ltf::Ltf{c.weights, c.bound});
    return F;
}

ltf::CnfFormula parse_cnf(const json& j, uint64_t& n_out) {
    n_out = j.at("n").get<uint64_t>();
    ltf::CnfFormula G;
    for (const auto& cj : j.at("clauses")) {
        std::vector<ltf::Literal> clause;
        for (const auto& lj : cj) {
            uint32_t var = lj.at(0).get<uint32_t>();
            int pol = lj.at(1).get<int>();
            if (var < 1 || var > n_out || (pol != 1 && pol != -1))
                throw param_error("cnf file: bad literal");
            clause.push_back(ltf::Literal{var, static_cast<int8_t>(pol)});
        }
        G.width = std::max<uint32_t>(G.width, static_cast<uint32_t>(clause.size()));
        G.clauses.push_back(std::move(clause));
    }
    return G;
}

ltf::CnfFormula load_cnf(const std::string& path, uint64_t& n_out) {
    return parse_cnf(load_json(path), n_out);
}

json params_to_json(const prggen::GenParams& p) {
    return json{{"n", p.n},
                {"ell", p.ell},
                {"r_hash", p.r_hash},
                {"r_bucket", p.r_bucket},
                {"m_hash", p.m_hash},
                {"m_bucket", p.m_bucket},
                {"delta_cnf", p.delta_cnf},
                {"seed_len_bits", p.seed_len_bits}};
}

prggen::GenParams params_from_json(const json& j) {
    prggen::GenParams p;
    p.n = j.at("n").get<uint64_t>();
    p.ell = j.at("ell").get<uint32_t>();
    p.r_hash = j.at("r_hash").get<uint32_t>();
    p.r_bucket = j.at("r_bucket").get<uint32_t>();
    p.m_hash = j.at("m_hash").get<uint8_t>();
    p.m_bucket = j.at("m_bucket").get<uint8_t>();
    p.delta_cnf = j.at("delta_cnf").get<double>();
    p.seed_len_bits = j.at("seed_len_bits").get<uint64_t>();
    return p;
}

prggen::GenParams load_params(const std::string& path) {
    json j = load_json(path);
    // Accept both a bare GenParams object and a plan report wrapping one.
    if (j.contains("params")) return params_from_json(j.at("params"));
    return params_from_json(j);
}

json expectation_to_json(const eval_count::ExpectationEstimate& e) {
    const char* method = e.method == eval_count::Method::ExactUniform  ? "exact-uniform"
                         : e.method == eval_count::Method::ExactSeeds ? "exact-seeds"
                                                                      : "mc-seeds";
    json j{{"value", e.value},
           {"method", method},
           {"error", e.error},
           {"sample_count", e.sample_count}};
    if (e.is_exact) j["exact"] = e.exact.to_string();
    if (e.method == eval_count::Method::MonteCarloSeeds) j["rng_stream_id"] = e.stream_id;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
}

} // namespace ltfprg::io
