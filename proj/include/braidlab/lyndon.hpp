#pragma once

#include <cstdint>
#include <vector>

namespace braidlab {

using LWord = std::vector<uint8_t>;  // word over a 0-based alphabet

bool is_lyndon(const LWord& w);

/// All Lyndon words of length exactly `deg` over `alphabet` letters,
/// lexicographically sorted.  Results are memoized; if the environment
/// variable BRAIDLAB_CACHE names a directory, lists are also cached there.
const std::vector<LWord>& lyndon_words(uint32_t alphabet, uint32_t deg);

/// Number of Lyndon words of length `deg` over `alphabet` letters, i.e. the
/// rank of the degree-`deg` part of the free Lie algebra (Witt number),
/// computed by enumeration.
size_t witt_number(uint32_t alphabet, uint32_t deg);

/// Standard factorization w = uv of a Lyndon word of length >= 2: v is the
/// lexicographically least (equivalently longest Lyndon) proper suffix.
std::pair<LWord, LWord> standard_factorization(const LWord& w);

}  // namespace braidlab
