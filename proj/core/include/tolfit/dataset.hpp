#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "tolfit/tol.hpp"

namespace tolfit {

// Dataset parse failure.  `line` is the 1-based line number of the offending
// input where one is known, 0 otherwise (e.g. structural errors in JSON).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// CSV layout: header "a1_lo,a1_hi,...,an_lo,an_hi,b_lo,b_hi", then one
// numeric record per measurement.  Blank lines are ignored.
IntervalSystem parse_dataset_csv(std::istream& in);

// JSON layout: {"A": [[[lo,hi],...],...], "b": [[lo,hi],...]}.
IntervalSystem parse_dataset_json(const std::string& text);

// Reads a dataset file, dispatching on its extension (.csv or .json).
IntervalSystem load_dataset(const std::filesystem::path& path);

std::string dataset_to_csv(const IntervalSystem& sys);
std::string dataset_to_json(const IntervalSystem& sys);

// Synthetic square test family: point diagonal theta, all off-diagonal
// coefficients [0, 2], every right-hand side [1, K].
IntervalSystem diagonal_benchmark_system(std::size_t n, double K, double theta);

}  // namespace tolfit
