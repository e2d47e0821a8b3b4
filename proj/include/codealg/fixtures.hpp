#pragma once

#include "codealg/report.hpp"

namespace codealg {
namespace fixtures {

// The worked examples, reproduced end to end as deterministic reports.
extern const char* const kNames[3];  // "f2sq", "even3", "hamming8"

LinearCode f2sq_code();
LinearCode even3_code();
LinearCode hamming8_code();
CodeAlgebra f2sq_algebra();      // (a, b, c) = (-1, 1, -1)
CodeAlgebra even3_algebra();     // (a, b, c) = (1/2, 1/2, 1)
CodeAlgebra hamming8_algebra();  // (a, b, c) = (1/4, 1/2, 1)

json run_example(const std::string& name, size_t orbit_bound = 512);

// Stored expected output; empty when the fixture has no golden yet.
std::string golden(const std::string& name);

// Paths of differing values, empty when equal.
std::vector<std::string> diff(const json& expected, const json& actual);

}  // namespace fixtures
}  // namespace codealg
