#pragma once

#include <array>
#include <cstdint>

namespace routeval::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al. counter-based generator).
/// Output depends only on (counter, key), so any sample can be regenerated
/// independently and in any order.
Counter philox4x32_10(Counter counter, Key key);

Key key_from_seed(std::uint64_t seed);

/// Maps two 32-bit words to a uniform double strictly inside (0, 1) with 53 bits.
double uniform_open01(std::uint32_t hi, std::uint32_t lo);

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// relative error below 1.2e-9). Defined on (0, 1).
double normal_quantile(double p);

/// Standard normal variate for (stream, index) under `seed`.
double standard_normal(std::uint64_t seed, std::uint32_t stream, std::uint32_t index);

}  // namespace routeval::rng
