#pragma once

#include <cstddef>
#include <cstdint>

namespace cubegraph {

// compact hashable identity of a graph vertex: packed state coordinates for
// cube graphs, plain vertex index for explicit graphs
struct VertexKey {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(const VertexKey&, const VertexKey&) = default;
};

struct VertexKeyHash {
    std::size_t operator()(const VertexKey& k) const noexcept {
        std::uint64_t x = k.a + 0x9e3779b97f4a7c15ull * (k.b + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace cubegraph
