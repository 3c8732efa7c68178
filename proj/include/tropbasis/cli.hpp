#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trop {

// Exit codes: 0 computed (predicate outcomes live in the payload), 2 usage
// error, 3 invalid input or axiom violation, 4 resource cap exceeded.
// 1 is reserved for internal invariant failures.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace trop
