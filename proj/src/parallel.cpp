#include "partlab/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace partlab {

unsigned effective_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (count == 0) return;
  workers = effective_workers(workers);
  std::uint64_t nchunks = std::min<std::uint64_t>(workers, count);
  if (nchunks <= 1) {
    body(0, count);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  threads.reserve(nchunks);
  std::uint64_t chunk = count / nchunks, extra = count % nchunks;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < nchunks; ++i) {
    std::uint64_t end = begin + chunk + (i < extra ? 1 : 0);
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace partlab
