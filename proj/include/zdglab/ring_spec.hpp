#pragma once

#include <string>
#include <string_view>

#include "zdglab/ring.hpp"

namespace zdg {

/// Builds a ring from a spec string:
///   Zn(<n>)  GF(<p>,<k>[,<poly>])  Q(<n>;<vars>;<relations>)  P(<spec>,<spec>,...)  cat:<name>
Ring make_ring(std::string_view spec, const RingLimits& limits = {});

/// Element of `ring` named by its label; digits are also accepted as a raw index
/// when no label matches.
Elem parse_element(const Ring& ring, std::string_view text);

}  // namespace zdg
