#pragma once

// Data-parallel kernels over parameter batches. Each *_parallel function
// distributes independent items with OpenMP and returns results in input
// order; the matching *_serial function is the reference used in tests and
// benchmarks.

#include "painleve/json_io.hpp"
#include "painleve/strata.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace painleve {

/// Exit code attached to a failed item: 2 parse error, 3 constraint
/// violation, 4 numeric event or budget.
int exit_code_for_current_exception();

/// "<family> <comma-separated params>" -> Classification JSON, or
/// {"line", "input", "error", "exit_code"} when the line is rejected.
Json classify_line(std::string_view line, std::size_t line_number);

std::vector<Json> sweep_serial(const std::vector<std::string>& lines);
std::vector<Json> sweep_parallel(const std::vector<std::string>& lines);

std::vector<Classification> classify_batch_serial(const std::vector<FamilyInstance>& batch);
std::vector<Classification> classify_batch_parallel(const std::vector<FamilyInstance>& batch);

std::vector<P6Result> p6_stratum_batch_serial(const std::vector<ParamVector>& batch);
std::vector<P6Result> p6_stratum_batch_parallel(const std::vector<ParamVector>& batch);

/// Number of (sample, image) pairs whose classification differs from the
/// sample's, over all images under words of length <= max_word_length in the
/// family's orbit generators. Distinct images are visited once each.
std::size_t invariance_violations_serial(Family family, const std::vector<ParamVector>& samples,
                                         int max_word_length);
std::size_t invariance_violations_parallel(Family family, const std::vector<ParamVector>& samples,
                                           int max_word_length);

/// True when two classifications agree on stratum, rank and degree.
bool same_class(const Classification& a, const Classification& b);

}  // namespace painleve
