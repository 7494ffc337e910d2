#pragma once

// Shared plumbing for the workbench: error types, check reports, subset
// masks over small carriers, and a tiny sharding helper for the few
// exhaustive searches that are worth splitting across threads.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mbl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: wrong table sizes, out-of-range entries.
struct structural_error : error {
  using error::error;
};

// A caller-supplied parameter is outside the supported range.
struct invalid_parameter : error {
  using error::error;
};

// An operation's mathematical precondition does not hold for the input.
struct precondition_error : error {
  using error::error;
};

// One failed law instance. `witness` holds element indices in the order the
// law quantifies them; `detail` carries the evaluated values when useful.
struct Failure {
  std::string law;
  std::vector<int> witness;
  std::string detail;
};

// Outcome of an exhaustive check. Every failed instance is recorded, so a
// report doubles as a complete countermodel listing for the checked laws.
struct Report {
  long long checks = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }

  void fail(std::string law, std::vector<int> witness, std::string detail = "") {
    failures.push_back({std::move(law), std::move(witness), std::move(detail)});
  }

  void merge(const Report& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }

  // True when no failure's law name starts with the given prefix.
  bool ok_for(const std::string& prefix) const {
    for (const auto& f : failures)
      if (f.law.compare(0, prefix.size(), prefix) == 0) return false;
    return true;
  }
};

// Counts how many of the named law groups have no recorded failure. A
// failure belongs to a group when its law name equals the group name or
// extends it after a separator ("M13" matches "M13" and "M13.exists-1").
inline int passed_groups(const Report& report, const std::vector<std::string>& groups) {
  int passed = 0;
  for (const auto& g : groups) {
    bool hit = false;
    for (const auto& f : report.failures) {
      if (f.law == g || (f.law.size() > g.size() && f.law.compare(0, g.size(), g) == 0 &&
                         (f.law[g.size()] == '.' || f.law[g.size()] == ':'))) {
        hit = true;
        break;
      }
    }
    if (!hit) ++passed;
  }
  return passed;
}

// Subsets of a carrier with at most 64 elements, bit i = element i.
using Mask = std::uint64_t;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline int mask_size(Mask m) { return static_cast<int>(__builtin_popcountll(m)); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i)
    if (mask_has(m, i)) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= 64) throw invalid_parameter("mask element out of range: " + std::to_string(e));
    m |= mask_bit(e);
  }
  return m;
}

// Runs fn(begin, end) over [0, count) split into at most `jobs` contiguous
// shards. Each shard gets its own invocation; with jobs <= 1 the call is a
// plain loop on the current thread. Callers own result merging and must not
// depend on shard execution order.
template <class Fn>
void run_sharded(int jobs, std::size_t count, Fn fn) {
  if (jobs <= 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  std::size_t shards = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> threads;
  threads.reserve(shards);
  std::size_t chunk = (count + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    std::size_t begin = s * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

// Reduced fraction label for numerator/denominator, used by the chain
// constructors ("0", "1/3", "2/3", "1").
inline std::string fraction_label(int num, int den) {
  if (num == 0) return "0";
  if (num == den) return "1";
  int g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace mbl
