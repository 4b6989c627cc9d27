#pragma once

// Command-line driver. Exit codes: 0 success, 1 a verification failed,
// 2 usage or configuration error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace v1ss {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace v1ss
