#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "roap/instance.hpp"

namespace roap {

// Exact position of a center: on the path at arc length `pos` from v_1, or
// on the new edge e(v_i,v_j) at offset `pos` from v_i.
struct CenterLocation {
    enum class Kind { OnPath, OnNewEdge };
    Kind kind = Kind::OnPath;
    double pos = 0.0;

    static CenterLocation on_path(double arc) { return {Kind::OnPath, arc}; }
    static CenterLocation on_new_edge(double offset) { return {Kind::OnNewEdge, offset}; }
};

enum class CaseTag {
    NoEdge,
    Case0,
    Case0Rev,
    Case11,
    Case11Rev,
    Case1211,
    Case1211Rev,
    Case1212,
    Case1212Rev,
    Case122,
    Case122Rev,
    Case3,
    Case31,
    Case31Rev,
    Case32,
    Case32Rev,
    Oracle,
};

const char* to_string(CaseTag tag);

struct Candidate {
    int i = 1;
    int j = 1;
    double radius = 0.0;
    CenterLocation center;
    CaseTag tag = CaseTag::NoEdge;
};

// Deterministic order: radius, then (i,j) lexicographic, then tag.
bool candidate_before(const Candidate& a, const Candidate& b);

struct Solution {
    Candidate best;
    std::vector<Candidate> all_candidates;  // one per configuration that fired
    std::map<std::string, std::uint64_t> counters;
};

struct QueryResult {
    double radius = 0.0;
    CenterLocation center;
    CaseTag tag = CaseTag::NoEdge;
    std::uint64_t comparisons = 0;
};

} // namespace roap
