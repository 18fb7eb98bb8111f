#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cirag {

/// Canonical triple/entity normalization: lowercase ASCII alphanumerics,
/// every other byte becomes a space, runs of whitespace collapse to one,
/// result trimmed. Multi-byte UTF-8 sequences therefore collapse to a
/// single space ("Bråk" -> "br k"). Idempotent.
std::string normalize_text(std::string_view s);

/// normalize_text followed by a whitespace split.
std::vector<std::string> tokenize(std::string_view s);

std::string to_lower(std::string_view s);

std::string trim(std::string_view s);

/// 64-bit FNV-1a. Used for content-stable ids and the hash embedder;
/// deterministic across runs and platforms.
std::uint64_t fnv1a64(std::string_view s);

std::string hex64(std::uint64_t v);

bool contains_ci(std::string_view haystack, std::string_view needle);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace cirag
