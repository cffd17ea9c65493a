#include "polytuple/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace polytuple {

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("POLYTUPLE_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end == env || parsed < 0) return hw;
    if (parsed == 0) return hw;
    return static_cast<unsigned>(parsed);
}

void parallel_chunks(size_t begin, size_t end,
                     const std::function<void(size_t, size_t)>& fn) {
    if (begin >= end) return;
    size_t total = end - begin;
    unsigned workers = worker_count();
    if (workers > total) workers = static_cast<unsigned>(total);
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    size_t chunk = total / workers;
    size_t extra = total % workers;
    size_t at = begin;
    for (unsigned w = 0; w < workers; ++w) {
        size_t len = chunk + (w < extra ? 1 : 0);
        size_t lo = at;
        size_t hi = at + len;
        at = hi;
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace polytuple
