#pragma once

#include <string>
#include <string_view>

namespace revmine {

// Porter (1980) suffix stripping, steps 1a-5b exactly as published: no
// length bail-out and the published step-2 table (abli->able, no logi rule).
// Within a step the longest matching suffix decides; if its condition fails
// the step is a no-op.
//
// Input is expected lowercase. ASCII non-letters are treated as consonants;
// tokens containing non-ASCII bytes are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace revmine
