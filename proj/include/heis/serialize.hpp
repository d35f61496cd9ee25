#pragma once

#include <string>

#include "heis/lsde.hpp"
#include "heis/sewing.hpp"

// CSV/JSON serialization. CSV: comma separators, header row, LF endings,
// 17 significant digits (lossless double round-trip).

namespace heis {

std::string format_double(double v);

void write_trace_csv(const std::string& path, const Trace& trace);

// Reads times and points; diagnostics fields are left at defaults.
Trace read_trace_csv(const std::string& path);

void write_sampled_csv(const std::string& path, const SampledFunction& f,
                       const std::string& value_header = "value");

SampledFunction read_sampled_csv(const std::string& path);

}  // namespace heis
