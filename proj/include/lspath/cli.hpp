#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lspath/root_system.hpp"
#include "lspath/weight.hpp"

namespace lspath {

/// "1,0,2" in fundamental-weight coordinates, or "eps:1/2,1/2" in epsilon
/// coordinates for types B and C. Throws InputError.
Weight parse_weight(const RootSystem& R, std::string_view text);

/// Entry point shared by the lspath tool and the tests. `args` excludes the
/// program name. Returns 0 on success, 1 on input errors and 2 on violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lspath
