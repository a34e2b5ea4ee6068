#pragma once

#include <optional>

#include "roap/scan.hpp"
#include "roap/solver_types.hpp"

namespace roap {

using Counters = std::map<std::string, std::uint64_t>;

// Center on P(v_1,v_i): best i with d_P(v_1,v_i) >= lambda_i minimizing
// d_P(v_1,v_i) + lambda_i.
std::optional<Candidate> case0(const PathInstance& inst, const LambdaTable& ltab,
                               Counters* counters = nullptr);

// Mirror image: center on P(v_j,v_n). ltab_rev belongs to reverse(inst).
std::optional<Candidate> case0_reversed(const PathInstance& inst,
                                        const LambdaTable& ltab_rev,
                                        Counters* counters = nullptr);

// Farthest pair (v_1, v_n), center inside the new edge; also carries the
// no-edge candidate with radius d_P(v_1,v_n)/2, which always exists.
std::optional<Candidate> case11(const PathInstance& inst, Counters* counters = nullptr);

// Farthest pair (v_1, v_b), center inside the new edge.
std::optional<Candidate> case1211(const PathInstance& inst, Counters* counters = nullptr);

// Farthest pair (v_1, v_b), path through the new edge, center on P(v_b,v_j).
std::optional<Candidate> case1212(const PathInstance& inst, Counters* counters = nullptr);

// Farthest pair (v_1, v_b), path avoiding the new edge, center on P(v_i,v_b).
std::optional<Candidate> case122(const PathInstance& inst, Counters* counters = nullptr);

// Case 2 = Case 1 with indices reversed; returns the mapped-back candidates.
std::vector<Candidate> case2(const PathInstance& inst, Counters* counters = nullptr);

// Both farthest vertices inside [i,j]; unified over the sub-configurations,
// one candidate per separating interval [k,k+1].
std::optional<Candidate> case3(const PathInstance& inst, Counters* counters = nullptr);

// Literal per-subcase filters (same sweep); used to check that unification
// never loses a better candidate.
std::vector<Candidate> case3_filtered_subcases(const PathInstance& inst);

Solution solve(const PathInstance& inst);

// Pairs with j <= i+1 leave the graph unchanged; fold them onto (1,1).
Candidate canonicalize_noop(const PathInstance& inst, Candidate cand);

Candidate map_reversed_candidate(const PathInstance& original, Candidate cand);

} // namespace roap
