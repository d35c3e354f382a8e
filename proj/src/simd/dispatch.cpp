#include <cstdlib>
#include <string>

#include "kaonbell/error.hpp"
#include "kaonbell/simd/kernels.hpp"

namespace kaonbell::simd {
namespace {

Isa detect() {
  if (const char* forced = std::getenv("KAONBELL_SIMD")) {
    const std::string_view name(forced);
    for (const Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

void require_same_length(std::size_t a, std::size_t b, std::size_t c) {
  if (a != c || b != c) {
    throw InvalidInput("rotated_real_part: input and output spans differ in length");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(KAONBELL_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(KAONBELL_WITH_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::uint64_t count_below(Isa isa, std::span<const std::uint64_t> draws, std::uint64_t threshold) {
  switch (isa) {
#if defined(KAONBELL_WITH_AVX2)
    case Isa::Avx2:
      if (isa_available(Isa::Avx2)) return avx2::count_below(draws, threshold);
      break;
#endif
#if defined(KAONBELL_WITH_NEON)
    case Isa::Neon:
      return neon::count_below(draws, threshold);
#endif
    default:
      break;
  }
  return scalar::count_below(draws, threshold);
}

std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold) {
  return count_below(active_isa(), draws, threshold);
}

void rotated_real_part(Isa isa, std::span<const double> cos_a, std::span<const double> sin_a,
                       double re, double im, double offset, std::span<double> out) {
  require_same_length(cos_a.size(), sin_a.size(), out.size());
  switch (isa) {
#if defined(KAONBELL_WITH_AVX2)
    case Isa::Avx2:
      if (isa_available(Isa::Avx2)) return avx2::rotated_real_part(cos_a, sin_a, re, im, offset, out);
      break;
#endif
#if defined(KAONBELL_WITH_NEON)
    case Isa::Neon:
      return neon::rotated_real_part(cos_a, sin_a, re, im, offset, out);
#endif
    default:
      break;
  }
  scalar::rotated_real_part(cos_a, sin_a, re, im, offset, out);
}

void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out) {
  rotated_real_part(active_isa(), cos_a, sin_a, re, im, offset, out);
}

}  // namespace kaonbell::simd
