#ifndef WSD_KERNELS_HPP
#define WSD_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string_view>

namespace wsd::kernels {

// Vector arithmetic backends. The scalar kernels are the reference
// implementation; the AVX2 kernels are selected at startup on CPUs that
// support AVX2+FMA and are equivalence-tested against the reference.
enum class Backend { scalar, avx2 };

Backend active_backend() noexcept;
bool backend_available(Backend backend) noexcept;
std::string_view backend_name(Backend backend) noexcept;

// Overrides the auto-detected backend. Throws std::invalid_argument if the
// requested backend is not available on this machine. Not thread-safe;
// intended for test setup.
void force_backend(Backend backend);

double dot(std::span<const double> a, std::span<const double> b);
double squared_norm(std::span<const double> a);

// Cosine of the angle between a and b, clamped to [-1, 1] against rounding.
// If either vector has zero norm the similarity is undefined; the sentinel
// -1 (the minimum of the cosine range) is returned so that zero vectors
// always lose an argmax.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace wsd::kernels

#endif
