#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace powres {

/// Runs fn(i) for i in [0, count) on up to `workers` threads and concatenates
/// the returned vectors in index order, so the output never depends on the
/// worker count or scheduling.
template <typename Fn>
auto parallel_collect(std::size_t count, unsigned workers, Fn fn) -> decltype(fn(std::size_t{})) {
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> parts(count);

    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            parts[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    parts[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
            pool.emplace_back(work);
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }

    Result out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

}  // namespace powres
