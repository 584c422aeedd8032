#pragma once

// Command dispatch behind the gradfrob executable.
//
// Exit codes: 0 yes/valid/accept, 1 no/reject, 2 inconclusive, 64 usage,
// 65 unreadable or malformed input, 70 criteria disagreeing (a bug).

#include <iosfwd>
#include <string>
#include <vector>

namespace gradfrob {

namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int data = 65;
inline constexpr int internal = 70;
}  // namespace exit_code

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradfrob
