#pragma once

#include <string>

#include "qcuntz/core/symalg.hpp"

namespace qcuntz {

/// Parses the shared expression grammar and returns the normal-ordered result.
///
///   expr := term (('+'|'-') term)*
///   term := atom ('*' atom)*
///   atom := 's'INT | 't'INT | 'Q' | 'P' | INT | 'q' | 'qc' | 'q[' INT ',' INT ']'
///         | '(' expr ')' | atom '^' INT | atom '\''
///
/// The postfix ' is the adjoint; Q and P expand to the two range sums.
/// Errors carry the 1-based column.
Element parse_expr(const std::string& text, const AlgebraConfig& cfg);

/// Canonical JSON rendering of an element (sorted terms).
std::string element_to_json(const Element& x);

}  // namespace qcuntz
