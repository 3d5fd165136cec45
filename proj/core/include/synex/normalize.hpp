#pragma once

#include <string>
#include <string_view>

namespace synex {

// Unicode NFC. Input must be valid UTF-8; invalid sequences are replaced with
// U+FFFD by the converter.
std::string nfc(std::string_view utf8);

} // namespace synex
