#pragma once

// JSON region-spec files.  The document is an object with exactly two keys:
//
//   {"family": "<tag>", "params": {...}}
//
// where <tag> is a family tag or long name and params holds, per family:
//   AD, TA                      {"n": int}
//   AR, TR                      {"m": int, "n": int}
//   R, Ka, Kna                  {"order": int}   ("n" is accepted as an alias)
//   RE, RO, TE, TO, BarRE,
//   BarRO, BarTE, BarTO, QH,
//   BarQH, HoleyAR, HoleyARBar  {"m": int, "n": int, "a": [int, ...]}  (a optional)
//   SH                          {"a": int, "b": int, "s": [int, ...]}  (s optional)
//
// Unknown keys anywhere are rejected.  Values must be JSON integers (no
// floats or numeric strings).

#include "tilecount/region.hpp"

#include <string>

namespace tilecount {

// Parses and structurally validates a region-spec document.  Throws
// std::invalid_argument naming the offending key; the resulting spec still
// goes through build_region's own range validation when used.
RegionSpec parse_region_spec(const std::string& json_text);

}  // namespace tilecount
