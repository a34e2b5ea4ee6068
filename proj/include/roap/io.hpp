#pragma once

#include <iosfwd>
#include <string>

#include "roap/instance.hpp"

namespace roap {

// Points file: first line "n d", then n lines of d reals.
PathInstance read_points(std::istream& in, MetricKind kind = MetricKind::Euclidean,
                         Cmp cmp = Cmp::standard());

// Matrix file: first line "n", then n lines of n reals.
PathInstance read_matrix(std::istream& in, Cmp cmp = Cmp::standard());

void write_points(std::ostream& out, const PathInstance& inst);
void write_matrix(std::ostream& out, const PathInstance& inst);

PathInstance read_instance_file(const std::string& path, const std::string& format,
                                MetricKind kind, Cmp cmp);

} // namespace roap
