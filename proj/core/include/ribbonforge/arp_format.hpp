#pragma once

// The .arp text format: one line per curve, whitespace-separated tokens,
// `x` an arrow labelled x read along the line, `x'` read against it, `()`
// an isolated vertex, and lines starting with `#` are comments.

#include <string>
#include <string_view>
#include <vector>

#include "ribbonforge/arrow_core.hpp"

namespace ribbonforge {

/// Parses one presentation; blank lines are ignored. Throws ParseError or
/// the validation errors of validate().
ArrowPresentation parse_arp(std::string_view text);

/// Parses a stream of presentations separated by blank lines (the
/// `enumerate` output).
std::vector<ArrowPresentation> parse_arp_records(std::string_view text);

std::string to_arp(const ArrowPresentation& g);

}  // namespace ribbonforge
