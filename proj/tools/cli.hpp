#pragma once

#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "bitrev/methods.hpp"

namespace bitrev::bench {

/// "8..20" -> {8, 20}; "12" -> {12, 12}.
std::pair<unsigned, unsigned> parse_range(std::string_view text);

/// Comma-separated method ids, or "all".
std::vector<Method> parse_method_list(std::string_view text);

/// bitrev-bench entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bitrev::bench
