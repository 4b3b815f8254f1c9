#ifndef NILFORM_CLI_HPP
#define NILFORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nilform/numfield.hpp"

namespace nilform {

/// args excludes the program name. Returns 0, 1 (domain error, JSON on err)
/// or 2 (usage or parse error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "Q", "quartic_z4", "cubic_z3", "sqrt:D", "biquadratic:k,l", or a datum file.
DatumPtr resolve_field(const std::string& spec);

}  // namespace nilform

#endif  // NILFORM_CLI_HPP
