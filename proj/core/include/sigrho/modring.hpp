#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigrho {

/// Element of a prime field, always kept reduced below the modulus.
using Fp = std::uint64_t;

using BigInt = boost::multiprecision::cpp_int;

__extension__ using u128 = unsigned __int128;

/// Arithmetic operation tallies. Each thread keeps its own copy; callers that
/// want an aggregate must collect per thread.
struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
};

inline thread_local OpCounts tl_op_counts;

inline OpCounts op_counts() { return tl_op_counts; }
inline void reset_op_counts() { tl_op_counts = OpCounts{}; }

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The prime field F_p together with the roots of unity a transform run needs.
///
/// Roots are stored for every divisor of every order requested at
/// construction, so asking for a power of two below the largest requested one
/// always succeeds. The object is immutable afterwards.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p, std::span<const std::uint64_t> orders = {});

  std::uint64_t modulus() const { return p_; }

  Fp reduce(std::uint64_t x) const { return x % p_; }

  Fp add(Fp a, Fp b) const {
    ++tl_op_counts.adds;
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Fp sub(Fp a, Fp b) const {
    ++tl_op_counts.adds;
    return a >= b ? a - b : a + (p_ - b);
  }

  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }

  Fp mul(Fp a, Fp b) const {
    ++tl_op_counts.muls;
    if (!float_reduce_) return static_cast<Fp>(static_cast<u128>(a) * b % p_);
    // The quotient estimate is off by at most one, so a single correction
    // each way lands in [0, p).
    const auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * b * inv_p_);
    auto r = static_cast<std::int64_t>(a * b - q * p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
    return static_cast<Fp>(r);
  }

  Fp pow(Fp base, std::uint64_t exp) const;

  /// Multiplicative inverse; throws std::domain_error for zero.
  Fp inv(Fp a) const;

  bool has_root(std::uint64_t order) const { return roots_.contains(order); }

  /// Primitive root of unity of exactly the given order.
  Fp root(std::uint64_t order) const;
  Fp inverse_root(std::uint64_t order) const;
  /// order^{-1} mod p, used to normalise inverse transforms.
  Fp inverse_of_order(std::uint64_t order) const;

  const std::map<std::uint64_t, Fp>& roots() const { return roots_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  long double inv_p_ = 0;
  bool float_reduce_ = false;
  std::map<std::uint64_t, Fp> roots_;
  std::map<std::uint64_t, Fp> inverse_roots_;
  std::map<std::uint64_t, Fp> inv_orders_;
};

/// Returns an element of exact multiplicative order r. Throws
/// std::invalid_argument("order unavailable in this field") when r does not
/// divide p - 1.
Fp find_root(const PrimeField& field, std::uint64_t r);

/// True when omega^r == 1 and omega^d != 1 for every proper divisor d of r.
bool has_exact_order(const PrimeField& field, Fp omega, std::uint64_t r);

/// Smallest prime of the form 1 + j * lcm(orders) that exceeds min_value,
/// with roots of every requested order populated.
///
/// Throws std::overflow_error when the scan leaves the 63-bit range.
PrimeField choose_prime(std::span<const std::uint64_t> orders, std::uint64_t min_value);

/// Distinct primes prime_1 < prime_2 < ... each chosen like choose_prime, the
/// first exceeding min_value and each later one exceeding its predecessor.
std::vector<PrimeField> choose_primes(std::span<const std::uint64_t> orders,
                                      std::uint64_t min_value, std::size_t count);

/// One residue per field of a multi-prime computation.
struct ResidueValue {
  std::vector<Fp> residues;
};

ResidueValue reduce(const BigInt& value, std::span<const PrimeField> fields);

/// The unique integer in [0, prod p_i) congruent to every residue.
BigInt crt_reconstruct(const ResidueValue& value, std::span<const PrimeField> fields);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace sigrho
