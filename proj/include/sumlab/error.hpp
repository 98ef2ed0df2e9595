#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

/// Invalid user input (bad group literal, malformed set, precondition
/// violation). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (group order, transform size,
/// subset-enumeration budget, resolution schedule).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

namespace limits {

inline constexpr std::uint64_t kMaxGroupOrder = 1ULL << 32;
inline constexpr std::uint64_t kMaxTransformSize = 1ULL << 25;
inline constexpr std::uint64_t kMaxGridResolution = 1ULL << 22;
inline constexpr std::size_t kPetridisExhaustiveCap = 20;
inline constexpr std::uint64_t kSearchPairBudget = 1ULL << 26;
inline constexpr int kPipelineMaxDoublings = 16;

} // namespace limits

} // namespace sumlab
