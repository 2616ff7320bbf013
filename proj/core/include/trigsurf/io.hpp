#pragma once

#include "trigsurf/freq_set.hpp"
#include "trigsurf/interpolant.hpp"
#include "trigsurf/recovery.hpp"
#include "trigsurf/sample_set.hpp"
#include "trigsurf/trig_poly.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace trigsurf::io {

/// Malformed input file; the message carries a line/field diagnostic.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_json(const FrequencySet& fs);
FrequencySet frequency_set_from_json(const std::string& text);

/// Polynomial file. `seed` records the generator seed when one was used.
std::string to_json(const TrigPolynomial& p, std::optional<std::uint64_t> seed = std::nullopt);
TrigPolynomial polynomial_from_json(const std::string& text);

std::string to_json(const RecoveryResult& r, std::optional<double> match = std::nullopt);

std::string to_json(const Interpolant& itp);
Interpolant interpolant_from_json(const std::string& text);

/// Header `x1,...,xn,component,residual`; one row per point, floats with 17
/// significant digits.
std::string to_csv(const SampleSet& s);
SampleSet sample_set_from_csv(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace trigsurf::io
