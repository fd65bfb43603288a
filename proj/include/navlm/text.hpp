#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace navlm {

// FNV-1a 64-bit. Stable across platforms, used for cache keys and prompt
// hashes; not a cryptographic hash.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value);

inline std::string content_hash(std::string_view data) { return hex64(fnv1a64(data)); }

bool valid_utf8(std::string_view text);

// True if the text contains any character from the Arabic script blocks.
bool contains_arabic(std::string_view text);

// True if the text contains U+FFFD, the replacement character that signals
// mojibake somewhere upstream.
bool contains_replacement_char(std::string_view text);

// Maximal [A-Za-z0-9_] runs that contain at least one digit. These are the
// tokens (viewpoint ids, numbers) that must survive translation verbatim.
std::vector<std::string> identifier_tokens(std::string_view text);

std::string trim(std::string_view text);
std::string lowercase_ascii(std::string_view text);

} // namespace navlm
