#pragma once

#include <string_view>

#include "cauchon/expr.hpp"
#include "cauchon/laurent.hpp"
#include "cauchon/mpoly.hpp"
#include "cauchon/ratfunc.hpp"
#include "cauchon/scalar.hpp"
#include "cauchon/zp.hpp"

namespace cauchon {

// Parses a polynomial over `vars`. Indexed symbols such as t[1,2] are looked
// up by their printed name "t[1,2]"; plain names must match exactly.
MPoly parse_mpoly(std::string_view text, const VarsPtr& vars);

}  // namespace cauchon
