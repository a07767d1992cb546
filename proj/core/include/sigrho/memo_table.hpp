#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sigrho/graph.hpp"
#include "sigrho/modring.hpp"

namespace sigrho {

enum class Objective { minimise, maximise };

// Each policy describes the value semiring of one problem variant:
//   none()            the absent value (no partial solution)
//   unit()            the empty partial solution
//   merge(a, b)       two alternatives for the same colouring
//   combine(a, b)     a left and a right partial solution glued at a join
//   add_member(a)     a forgotten vertex that lies in the solution

struct ExistencePolicy {
  using Value = std::uint8_t;
  Value none() const { return 0; }
  Value unit() const { return 1; }
  Value merge(Value a, Value b) const { return a | b; }
  Value combine(Value a, Value b) const { return a & b; }
  Value add_member(Value a) const { return a; }
  bool is_none(Value a) const { return a == 0; }
};

inline constexpr std::int32_t kNoSize = std::numeric_limits<std::int32_t>::min();

struct OptimisationPolicy {
  using Value = std::int32_t;
  Objective objective = Objective::minimise;

  Value none() const { return kNoSize; }
  Value unit() const { return 0; }
  bool better(Value a, Value b) const { return objective == Objective::minimise ? a < b : a > b; }
  Value merge(Value a, Value b) const {
    if (a == kNoSize) return b;
    if (b == kNoSize) return a;
    return better(b, a) ? b : a;
  }
  Value combine(Value a, Value b) const { return a == kNoSize || b == kNoSize ? kNoSize : a + b; }
  Value add_member(Value a) const { return a == kNoSize ? a : a + 1; }
  bool is_none(Value a) const { return a == kNoSize; }
};

struct CountPolicy {
  using Value = Fp;
  const PrimeField* field = nullptr;

  Value none() const { return 0; }
  Value unit() const { return 1; }
  Value merge(Value a, Value b) const { return field->add(a, b); }
  Value combine(Value a, Value b) const { return field->mul(a, b); }
  Value add_member(Value a) const { return a; }
  bool is_none(Value a) const { return a == 0; }
};

struct SizedCount {
  std::int32_t size = kNoSize;
  Fp count = 0;

  friend bool operator==(const SizedCount&, const SizedCount&) = default;
};

/// Best size together with the number of partial solutions attaining it.
struct CountOptimisationPolicy {
  using Value = SizedCount;
  Objective objective = Objective::minimise;
  const PrimeField* field = nullptr;

  Value none() const { return {}; }
  Value unit() const { return {0, 1}; }
  Value merge(Value a, Value b) const {
    if (a.size == kNoSize) return b;
    if (b.size == kNoSize) return a;
    if (a.size == b.size) return {a.size, field->add(a.count, b.count)};
    bool b_better = objective == Objective::minimise ? b.size < a.size : b.size > a.size;
    return b_better ? b : a;
  }
  Value combine(Value a, Value b) const {
    if (a.size == kNoSize || b.size == kNoSize) return {};
    return {a.size + b.size, field->mul(a.count, b.count)};
  }
  Value add_member(Value a) const { return a.size == kNoSize ? a : SizedCount{a.size + 1, a.count}; }
  bool is_none(Value a) const { return a.size == kNoSize; }
};

/// One DP table. values[i] belongs to the colouring whose base-s digits,
/// most significant first, are the labels of bag[0], bag[1], ...
template <class Policy>
struct MemoTable {
  using Value = typename Policy::Value;
  std::vector<Vertex> bag;
  std::vector<Value> values;
};

/// s^k as a size_t.
inline std::size_t ipow(std::size_t s, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= s;
  return r;
}

}  // namespace sigrho
