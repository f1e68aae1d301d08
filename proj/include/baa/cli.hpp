#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace baa {

// Command-line front end. args excludes the program name. Returns 0 when all
// checks pass, 1 when one fails or is inconclusive, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// File name of the certificate for a tuple, e.g. q_m1_m1_m1_m3_m5_m3.json.
std::string certificate_name(const std::array<long, 6>& r);

}  // namespace baa
