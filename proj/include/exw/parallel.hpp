#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace exw {

// Runs tasks[i]() on up to `threads` workers and returns the results in
// task order, so merged output never depends on scheduling.
template <typename R>
std::vector<R> run_indexed_tasks(int threads, const std::vector<std::function<R()>>& tasks) {
    std::vector<R> results(tasks.size());
    if (tasks.empty()) return results;
    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

} // namespace exw
