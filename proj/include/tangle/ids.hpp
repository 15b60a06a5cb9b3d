#pragma once

#include <cstdint>
#include <functional>

namespace tangle {

// Node identities are dense indices in [0, N).
using NodeId = std::uint32_t;

// Dense run-scoped indices into the block / transaction / output arenas.
using BlockIdx = std::uint32_t;
using TxIdx = std::uint32_t;
using OutputIdx = std::uint32_t;

inline constexpr std::uint32_t kInvalidIdx = 0xffffffffu;

// 64-bit finalizer (splitmix64). Collision-free identifiers are produced by
// feeding a run-scoped counter, so determinism rather than cryptographic
// strength is the contract.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

struct BlockId {
    std::uint64_t digest = 0;
    friend bool operator==(BlockId a, BlockId b) { return a.digest == b.digest; }
    friend bool operator<(BlockId a, BlockId b) { return a.digest < b.digest; }
};

struct TransactionId {
    std::uint64_t digest = 0;
    friend bool operator==(TransactionId a, TransactionId b) { return a.digest == b.digest; }
    friend bool operator<(TransactionId a, TransactionId b) { return a.digest < b.digest; }
};

}  // namespace tangle

template <>
struct std::hash<tangle::BlockId> {
    std::size_t operator()(tangle::BlockId id) const noexcept { return id.digest; }
};
template <>
struct std::hash<tangle::TransactionId> {
    std::size_t operator()(tangle::TransactionId id) const noexcept { return id.digest; }
};
