#ifndef KPCA_LAB_PARALLEL_HPP
#define KPCA_LAB_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace kpca_lab {

/// Worker count: KPCA_LAB_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("KPCA_LAB_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, n). Each index is handled by exactly one worker, so
/// results written to index-owned slots are identical to a sequential run.
template <typename Fn>
void parallel_for(Eigen::Index n, Fn&& fn) {
    const auto workers = static_cast<Eigen::Index>(std::min<long>(worker_count(), std::max<Eigen::Index>(n, 1)));
    if (workers <= 1 || n < 64) {
        for (Eigen::Index i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (Eigen::Index w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (Eigen::Index i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace kpca_lab

#endif
