#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace invred::detail {

// FNV-1a over the words of an exponent or entry vector.
struct EntryHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace invred::detail
