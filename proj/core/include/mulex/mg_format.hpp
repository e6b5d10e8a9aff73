#pragma once

#include "mulex/multigraph.hpp"

#include <istream>
#include <string>

namespace mulex {

/// Parses the .mg text format:
///
///   n <N>
///   w(1,2) w(1,3) ... w(1,N)
///   w(2,3) ... w(2,N)
///   ...
///
/// Throws FormatError on anything malformed.
Multigraph parse_mg(std::istream& in);
Multigraph parse_mg(const std::string& text);
Multigraph read_mg_file(const std::string& path);

std::string to_mg(const Multigraph& g);

}  // namespace mulex
