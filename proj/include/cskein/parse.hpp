#ifndef CSKEIN_PARSE_HPP
#define CSKEIN_PARSE_HPP

#include "cskein/rational.hpp"

#include <string>

namespace cskein {

// Parses +,-,*,/,^,(), integers and context variables; round-trips the
// canonical serialization of LaurentPoly and RationalFn.
RationalFn parse_rational(const std::string& text, const Ctx& ctx);

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace cskein

#endif
