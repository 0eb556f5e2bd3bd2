#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffint::cli {

/// Exit codes: 0 ok, 2 usage / invalid field parameters, 3 family or
/// existence condition violated, 4 malformed input file, 5 verification
/// found oracle disagreements.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// The byte-exact reproduction tables; id is one of monomial-13, dickson-11,
/// skolem-hooked-6.
std::string reproduce_table(const std::string& id);

}  // namespace ffint::cli
