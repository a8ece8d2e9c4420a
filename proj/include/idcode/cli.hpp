#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idcode::cli {

enum ExitStatus : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

// Runs one `idcode <verb> ...` invocation. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a,b,c..d" -> sorted unique list; ranges are inclusive.
std::vector<unsigned> parse_index_list(const std::string& text);

// "a..b" or a single integer "a" -> {a, b}.
std::pair<unsigned, unsigned> parse_range(const std::string& text);

}  // namespace idcode::cli
