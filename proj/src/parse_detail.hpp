#pragma once

#include "cursor.hpp"
#include "dpers/proplogic.hpp"
#include "dpers/rational.hpp"
#include "dpers/timeline.hpp"

namespace dpers::detail {

Formula parse_formula(Cursor& in);
Rational parse_number(Cursor& in);
TimePoint parse_time_point(Cursor& in);
Interval parse_interval(Cursor& in);

}  // namespace dpers::detail
