#pragma once

#include "pnhom/net.hpp"

#include <string>
#include <string_view>

namespace pnhom {

/// Parses the line-oriented net format:
///
///   # comment to end of line
///   places: p1 p2 p3
///   event t1 pre - post p1
///   event t2 pre p1 post p2,p3
///   initial: p1 p3
///
/// Sections appear in this order; `-` denotes the empty set; identifiers are
/// letters/digits/underscores starting with a letter. Throws ParseError with
/// line and column on any malformed input, duplicate identifier, undeclared
/// place, or missing `initial:` line.
ElementaryNet parse_net(std::string_view document);

/// Canonical rendering of a net in the same format; parse(emit(net)) == net.
std::string emit_net(const ElementaryNet& net);

} // namespace pnhom
