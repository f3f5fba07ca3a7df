#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace probfrac::detail {

inline int resolve_threads(int requested) noexcept {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

// Exceptions must not leave an OpenMP region; workers park them here and
// the lowest-index one is rethrown afterwards.
class ErrorSlots {
public:
    explicit ErrorSlots(std::size_t n) : slots_(n) {}
    void capture(std::size_t i) noexcept { slots_[i] = std::current_exception(); }
    void store(std::size_t i, std::exception_ptr e) noexcept { slots_[i] = std::move(e); }
    void rethrow_first() const {
        for (const auto& e : slots_) {
            if (e) std::rethrow_exception(e);
        }
    }

private:
    std::vector<std::exception_ptr> slots_;
};

}  // namespace probfrac::detail
