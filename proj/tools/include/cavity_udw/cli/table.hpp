// Copyright 2026 The cavity-udw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace cavity_udw::cli {

// Shortest round-trip decimal form, locale independent.
std::string format_number(double v);
std::string format_number(long v);

// CSV with a two-line header: column names, then units.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const;
  void save(const std::string& path) const;
};

// Calls f(i) for i in [0, count) on `threads` workers. Results land at their
// index, so the output order never depends on scheduling.
template <class F>
auto parallel_map(std::size_t count, int threads, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(
      1, std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads))));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace cavity_udw::cli
