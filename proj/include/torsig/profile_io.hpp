#pragma once

// Serialisation of SignatureProfile for plotting tools and scripts.
//
// JSON: {"p":2,"q":3,"breakpoints":["1/6","5/6"],"values":[0,-2,0]}
// TSV:  one row per interval, "left<TAB>right<TAB>value", exact rationals.

#include "torsig/sigma.hpp"

#include <string>
#include <string_view>

namespace torsig {

std::string profile_to_json(const SignatureProfile& profile);
std::string profile_to_tsv(const SignatureProfile& profile);

/// Throws InvalidArgument on malformed input or mismatched array lengths.
SignatureProfile profile_from_json(std::string_view text);

} // namespace torsig
