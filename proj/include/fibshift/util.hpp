// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIBSHIFT_UTIL_HPP
#define FIBSHIFT_UTIL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace fibshift {

/// Worker cap: FIBSHIFT_THREADS when set, hardware concurrency otherwise.
inline unsigned worker_count() {
  if (const char* env = std::getenv("FIBSHIFT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(i) for lo <= i <= hi across workers. Callers keep determinism by
/// writing into per-index slots.
inline void parallel_for(long long lo, long long hi, const std::function<void(long long)>& fn) {
  if (hi < lo) return;
  unsigned workers = worker_count();
  if (workers <= 1 || hi - lo < 8) {
    for (long long i = lo; i <= hi; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{lo};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex err_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i > hi || failed.load()) return;
        try {
          fn(i);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!failed.exchange(true)) first_error = e.what();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("parallel_for worker failed: " + first_error);
}

struct Range {
  long long lo = 0, hi = 0;
};

/// Parses "c" or "a..b" (inclusive).
inline Range parse_range(std::string_view text) {
  auto pos = text.find("..");
  auto to_ll = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty range bound");
    size_t used = 0;
    long long v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("bad range bound");
    return v;
  };
  Range r;
  if (pos == std::string_view::npos) {
    r.lo = r.hi = to_ll(text);
  } else {
    r.lo = to_ll(text.substr(0, pos));
    r.hi = to_ll(text.substr(pos + 2));
  }
  if (r.hi < r.lo) throw std::invalid_argument("range is empty");
  return r;
}

}  // namespace fibshift

#endif  // FIBSHIFT_UTIL_HPP
