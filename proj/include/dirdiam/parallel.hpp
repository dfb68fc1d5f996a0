#ifndef DIRDIAM_PARALLEL_HPP_
#define DIRDIAM_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dirdiam {

/**
 * Splits [0, count) into `threads` contiguous chunks and runs
 * fn(begin, end, chunk) on each, one std::thread per chunk. The chunking
 * depends only on (count, threads), so per-chunk results can be combined
 * deterministically. The first exception thrown by a chunk is rethrown.
 */
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn &&fn) {
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (chunks == 1) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t begin = count * c / chunks;
        std::size_t end = count * (c + 1) / chunks;
        pool.emplace_back([&, begin, end, c] {
            try {
                fn(begin, end, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (std::thread &t : pool) {
        t.join();
    }
    for (std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace dirdiam

#endif // DIRDIAM_PARALLEL_HPP_
