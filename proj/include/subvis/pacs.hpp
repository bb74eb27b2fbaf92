#pragma once

#include "subvis/types.hpp"

#include <string_view>

namespace subvis {

/// Parses a PACS code such as "05.45.-a" or "85.25.xx".
///
/// Surrounding whitespace is trimmed. The first five characters must be
/// digit digit '.' digit digit; everything after an optional separating '.'
/// is kept verbatim as the suffix. Two-level input ("05.45") gives an empty
/// suffix, a single pair ("05") is rejected. Throws MalformedPacs.
PacsCode parse_pacs(std::string_view text);

/// Level-3 truncation of a parsed code.
SubfieldKey subfield_key(const PacsCode& code);

} // namespace subvis
