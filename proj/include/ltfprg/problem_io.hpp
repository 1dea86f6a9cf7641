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

#include <string>

#include <nlohmann/json.hpp>

#include "ltfprg/eval_count.hpp"
#include "ltfprg/ltf.hpp"
#include "ltfprg/prggen.hpp"

namespace ltfprg::io {

using json = nlohmann::json;

/// Problem file:
///   { "n": int, "vars": "pm1" | "zeroone",
///     "constraints": [ { "weights": [int...], "theta": number | "p/q" } ] }
/// For "pm1" each constraint is the LTF sign(w.x - theta); for "zeroone" it
/// is the {0,1} inequality w.b <= theta.
struct Problem {
    uint64_t n = 0;
    bool zeroone = false;
    std::vector<eval_count::IpConstraint> constraints;
};

Problem parse_problem(const json& j);
Problem load_problem(const std::string& path);

/// The intersection the problem denotes over {-1,+1}^n.
ltf::Intersection problem_to_intersection(const Problem& prob);

/// CNF file: { "n": int, "clauses": [ [[var, polarity], ...], ... ] },
/// 1-indexed variables, polarity in {-1, +1}.
ltf::CnfFormula parse_cnf(const json& j, uint64_t& n_out);
ltf::CnfFormula load_cnf(const std::string& path, uint64_t& n_out);

json params_to_json(const prggen::GenParams& p);
prggen::GenParams params_from_json(const json& j);
prggen::GenParams load_params(const std::string& path);

json expectation_to_json(const eval_count::ExpectationEstimate& e);

void write_text(const std::string& path, const std::string& text);

} // namespace ltfprg::io
