#pragma once

#include <cstdint>
#include <initializer_list>

namespace ldraw {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based seed expansion: the same (base, tags...) always yields the same
/// child seed, independent of evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) noexcept {
    std::uint64_t h = mix64(base);
    for (std::uint64_t t : tags) h = mix64(h ^ mix64(t + 0x632be59bd9b4e019ULL));
    return h;
}

} // namespace ldraw
