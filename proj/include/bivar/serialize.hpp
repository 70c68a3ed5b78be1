#pragma once

#include <string>

#include "bivar/weight_tables.hpp"

namespace bivar {

/*
  Table body formats. Both are deterministic functions of the table rows
  and header fields; metadata (timestamps, timings) is never written.

  JSON:
    {"family":"C","rank":2,"k":1,"l":1,"dominant_only":false,
     "rows":[{"mu":[-1,-1],"mult":"1"},...],"dimension":"5"}
  Type-D dominant-only tables add "mirror":true|false to every row.

  CSV:
    mu_1,...,mu_m,mult        (plus a trailing ",mirror" column for
    type-D dominant-only tables, values 0/1)
*/
std::string to_json(const MultiplicityTable& table);
std::string to_csv(const MultiplicityTable& table);

/// Inverse of to_json. Throws Error(InvalidArgument) on malformed input.
MultiplicityTable table_from_json(const std::string& text);

/*
  Inverse of to_csv for the row data; header fields (spec, k, l,
  dominant_only) are taken from `shape`.
*/
MultiplicityTable table_from_csv(const std::string& text, const MultiplicityTable& shape);

}  // namespace bivar
