#pragma once

#include <cstdint>
#include <random>

namespace evgraph {

using Rng = std::mt19937_64;

// SplitMix64 step, used to derive independent per-stage seeds from one
// global seed. The derivation rule is fixed so that manifests can record
// both the global seed and the derived stream ids.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t stream) {
    return splitmix64(splitmix64(global_seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

}  // namespace evgraph
