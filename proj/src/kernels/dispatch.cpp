#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "bisieve/bitmap_kernels.hpp"

namespace bisieve::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::count_set_bits, &scalar::or_shifted_into};

#ifdef BISIEVE_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::count_set_bits, &avx2::or_shifted_into};
#endif

bool force_scalar() {
    const char* env = std::getenv("BISIEVE_FORCE_SCALAR");
    return env != nullptr && std::strcmp(env, "0") != 0 && env[0] != '\0';
}

const KernelTable& select() {
#ifdef BISIEVE_HAVE_AVX2_KERNELS
    if (!force_scalar() && cpu_supports(Isa::Avx2)) {
        return kAvx2;
    }
#endif
    return kScalar;
}

}  // namespace

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#ifdef BISIEVE_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::runtime_error("kernel variant not supported on this CPU: " + std::string(isa_name(isa)));
    }
#ifdef BISIEVE_HAVE_AVX2_KERNELS
    if (isa == Isa::Avx2) {
        return kAvx2;
    }
#endif
    return kScalar;
}

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace bisieve::kernels
