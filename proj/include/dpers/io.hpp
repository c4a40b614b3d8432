#pragma once

// Text formats: timed knowledge base files and persistence schema files.
//
// KB file, one declaration per line, `#` comments:
//     at [0,10] : A
//     at [15]   : !A | !B
//
// Schema file, one block per fluent:
//     fluent A {
//       forward true: pw[(0,1),(8,1/5)];
//       backward true: pw[(0,1),(10,0)];
//       forward false: pw[(0,1),(2,0)];
//       backward false: pw[(0,1),(2,0)];
//       change_split: 1/2
//     }

#include <string>
#include <string_view>

#include "dpers/persistence.hpp"
#include "dpers/timeline.hpp"

namespace dpers {

/// Throws ParseError (with line and column) on malformed text.
TimedKB parse_kb(std::string_view text);

/// Throws ParseError on malformed text and SemanticError on a duplicate
/// fluent, a missing or repeated key, or a function violating D1/D2.
SchemaSet parse_schema(std::string_view text);

std::string render(const TimedKB& kb);
std::string render(const FluentSchema& schema);
std::string render(const SchemaSet& schemas);

}  // namespace dpers
