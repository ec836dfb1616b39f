#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcs {

  // Entry point of the qcs command line tool; args excludes the program
  // name. Returns 0 on success or when the checked property holds, 1 when
  // it is violated (the witness is printed), 2 on input errors.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qcs
