#include "frachh/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace frachh::kernels {

namespace {

struct Table {
    double (*dot)(std::span<const double>, std::span<const double>) noexcept;
    double (*sum)(std::span<const double>) noexcept;
    double (*sum_abs)(std::span<const double>) noexcept;
    MaxAbs (*max_abs)(std::span<const double>) noexcept;
    std::size_t (*count_exceeding)(std::span<const double>, std::span<const double>,
                                   double) noexcept;
};

constexpr Table scalar_table{scalar::dot, scalar::sum, scalar::sum_abs, scalar::max_abs,
                             scalar::count_exceeding};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table avx2_table{avx2::dot, avx2::sum, avx2::sum_abs, avx2::max_abs,
                           avx2::count_exceeding};
#endif

#if defined(__aarch64__)
constexpr Table neon_table{neon::dot, neon::sum, neon::sum_abs, neon::max_abs,
                           neon::count_exceeding};
#endif

bool available(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const Table* table_for(Isa isa) noexcept {
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
        return &avx2_table;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
        return &neon_table;
#endif
    default:
        return &scalar_table;
    }
}

Isa initial_isa() noexcept {
    // FRACHH_ISA=scalar pins the reference kernels.
    if (const char* env = std::getenv("FRACHH_ISA")) {
        if (std::string_view(env) == "scalar") {
            return Isa::Scalar;
        }
    }
    return detect_isa();
}

struct State {
    std::atomic<Isa> isa{initial_isa()};
    std::atomic<const Table*> table{table_for(isa.load())};
};

State& state() noexcept {
    static State s;
    return s;
}

const Table& active() noexcept {
    return *state().table.load(std::memory_order_acquire);
}

} // namespace

Isa detect_isa() noexcept {
    if (available(Isa::Avx2)) {
        return Isa::Avx2;
    }
    if (available(Isa::Neon)) {
        return Isa::Neon;
    }
    return Isa::Scalar;
}

Isa active_isa() noexcept {
    return state().isa.load();
}

bool set_isa(Isa isa) noexcept {
    if (!available(isa)) {
        return false;
    }
    state().isa.store(isa);
    state().table.store(table_for(isa), std::memory_order_release);
    return true;
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "unknown";
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    return active().dot(x, y);
}

double sum(std::span<const double> x) noexcept {
    return active().sum(x);
}

double sum_abs(std::span<const double> x) noexcept {
    return active().sum_abs(x);
}

MaxAbs max_abs(std::span<const double> x) noexcept {
    return active().max_abs(x);
}

std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept {
    return active().count_exceeding(lhs, rhs, slack);
}

} // namespace frachh::kernels
