#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <utility>
#include <vector>

namespace pellsurf {

/// Applies fn to every item; results come back in input order. The serial
/// form is the reference the OpenMP form is tested against.
template <class In, class Fn>
auto map_serial(const std::vector<In>& items, Fn&& fn) {
  using Out = decltype(fn(items.front()));
  std::vector<Out> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(fn(item));
  return out;
}

/// Parallel map. Exceptions thrown by fn are captured per item and the first
/// one (in input order) is rethrown after the loop.
template <class In, class Fn>
auto map_parallel(const std::vector<In>& items, Fn&& fn) {
  using Out = decltype(fn(items.front()));
  const long n = static_cast<long>(items.size());
  std::vector<std::optional<Out>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(fn(items[static_cast<std::size_t>(i)]));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace pellsurf
