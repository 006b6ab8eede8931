#include "hkappa/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "hkappa/errors.hpp"

namespace hkappa::simd {

namespace {

bool cpu_has_avx2() noexcept
{
#if defined(HKAPPA_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend default_backend() noexcept
{
    if (const char* env = std::getenv("HKAPPA_SIMD"); env && std::string(env) == "scalar")
        return Backend::Scalar;
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& selected()
{
    static std::atomic<Backend> backend{default_backend()};
    return backend;
}

}  // namespace

bool backend_available(Backend backend) noexcept
{
    return backend == Backend::Scalar || (backend == Backend::Avx2 && cpu_has_avx2());
}

const KernelTable& table(Backend backend)
{
    if (!backend_available(backend))
        throw InvalidArgument("SIMD backend not available on this CPU: " +
                              std::string(backend_name(backend)));
#if defined(HKAPPA_WITH_AVX2)
    if (backend == Backend::Avx2)
        return avx2::table();
#endif
    return scalar::table();
}

const KernelTable& active()
{
    return table(selected().load(std::memory_order_relaxed));
}

void set_backend(Backend backend)
{
    table(backend);
    selected().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept
{
    return backend == Backend::Avx2 ? "avx2" : "scalar";
}

}  // namespace hkappa::simd
