#pragma once

#include <string>

#include "solqsol/group.hpp"

namespace solqsol {

// Grammar: term ('x' term)*, where term is one of
//   C<n>  D<order>  Q8  SD<order>  S<n>  Ab(<p>:[a,a,...])
// e.g. "D6xD10", "Ab(2:[1,2])", "Q8xAb(2:[1,1])xAb(3:[2])".
// Throws SpecParseError with the offending position.
Group group_from_spec(const std::string& spec);

}  // namespace solqsol
