#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// kaonbell::simd::scalar and vector variants selected at runtime; all variants
// must return identical results (see tests/test_kernels.cpp).

#include <cstdint>
#include <span>
#include <string_view>

namespace kaonbell::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Best available variant. KAONBELL_SIMD=scalar|avx2|neon in the environment
/// overrides the choice when that variant is available.
Isa active_isa();

/// Number of draws strictly below threshold (unsigned compare).
std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold);
std::uint64_t count_below(Isa isa, std::span<const std::uint64_t> draws, std::uint64_t threshold);

/// out[i] = cos_a[i] * re - sin_a[i] * im - offset, i.e. Re{e^{i alpha_i} z} - offset
/// for z = re + i im. All spans must have the same length.
void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out);
void rotated_real_part(Isa isa, std::span<const double> cos_a, std::span<const double> sin_a,
                       double re, double im, double offset, std::span<double> out);

namespace scalar {
std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold);
void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out);
}  // namespace scalar

#if defined(KAONBELL_WITH_AVX2)
namespace avx2 {
std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold);
void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out);
}  // namespace avx2
#endif

#if defined(KAONBELL_WITH_NEON)
namespace neon {
std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold);
void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out);
}  // namespace neon
#endif

}  // namespace kaonbell::simd
