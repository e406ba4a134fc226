#include "wsd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace wsd::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double squared_norm_scalar(const double* a, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * a[i];
    }
    return acc;
}

#if defined(WSD_HAVE_AVX2)
// Defined in kernels_avx2.cpp, compiled with -mavx2 -mfma.
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
double squared_norm_avx2(const double* a, std::size_t n) noexcept;
#endif

}  // namespace detail

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t) noexcept;
using NormFn = double (*)(const double*, std::size_t) noexcept;

struct Dispatch {
    Backend backend = Backend::scalar;
    DotFn dot = detail::dot_scalar;
    NormFn squared_norm = detail::squared_norm_scalar;
};

bool cpu_has_avx2() noexcept {
#if defined(WSD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Dispatch make_dispatch(Backend backend) {
    Dispatch d;
    d.backend = backend;
#if defined(WSD_HAVE_AVX2)
    if (backend == Backend::avx2) {
        d.dot = detail::dot_avx2;
        d.squared_norm = detail::squared_norm_avx2;
    }
#endif
    return d;
}

Dispatch& dispatch() {
    static Dispatch d = make_dispatch(cpu_has_avx2() ? Backend::avx2 : Backend::scalar);
    return d;
}

}  // namespace

Backend active_backend() noexcept {
    return dispatch().backend;
}

bool backend_available(Backend backend) noexcept {
    switch (backend) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

std::string_view backend_name(Backend backend) noexcept {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

void force_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw std::invalid_argument("kernel backend not available on this CPU");
    }
    dispatch() = make_dispatch(backend);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: size mismatch");
    }
    return dispatch().dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const double> a) {
    return dispatch().squared_norm(a.data(), a.size());
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cosine_similarity: dimension mismatch");
    }
    const Dispatch& d = dispatch();
    const double na = d.squared_norm(a.data(), a.size());
    const double nb = d.squared_norm(b.data(), b.size());
    if (na == 0.0 || nb == 0.0) {
        return -1.0;
    }
    const double cos = d.dot(a.data(), b.data(), a.size()) / (std::sqrt(na) * std::sqrt(nb));
    if (cos > 1.0) return 1.0;
    if (cos < -1.0) return -1.0;
    return cos;
}

}  // namespace wsd::kernels
