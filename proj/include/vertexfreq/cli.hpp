#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vertexfreq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `vertexfreq` tool. `args` excludes the program name.
/// A graph argument of "-" reads from `in`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace vertexfreq::cli
