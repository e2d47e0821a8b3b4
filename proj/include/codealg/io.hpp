#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "codealg/algebra.hpp"

namespace codealg {

// Code file: line 1 "n k", then k rows of '0'/'1' of length n; '#' starts a
// comment; anything else is rejected with a line/column diagnostic.
LinearCode parse_code_file(std::istream& in, const std::string& name = "<code>");
LinearCode load_code_file(const std::string& path);

// Scalar literals: "p", "p/q", "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)",
// "r/s*sqrt(d)".
Scalar parse_scalar(const std::string& text);

struct ParamOverride {
  char kind;  // 'a', 'b' or 'c'
  int i = 0;        // for a/c
  word alpha = 0;
  word beta = 0;    // for b
  Scalar value;
};

// Params file: "a = <scalar>", "b = ...", "c = ...", optional "d = <int>"
// (field discriminant), optional override lines "a[i,bits] = ...",
// "b[bits,bits] = ...", "c[i,bits] = ...".
struct ParsedParams {
  Scalar a, b, c;
  std::optional<long> disc;
  std::vector<ParamOverride> overrides;
};
ParsedParams parse_params_file(std::istream& in, const std::string& name = "<params>");
ParsedParams load_params_file(const std::string& path);

// Constant base plus overrides, with override keys validated against the
// parameter domain of C.
StructureParams realize_params(const LinearCode& C, const ParsedParams& p);

}  // namespace codealg
