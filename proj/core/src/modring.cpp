#include "sigrho/modring.hpp"

#include <limits>
#include <numeric>

namespace sigrho {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool exact_order(std::uint64_t w, std::uint64_t r, std::uint64_t p) {
  if (powmod(w, r, p) != 1 % p) return false;
  for (std::uint64_t q : prime_factors(r)) {
    if (powmod(w, r / q, p) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeField::PrimeField(std::uint64_t p, std::span<const std::uint64_t> orders) : p_(p) {
  if (p < 2 || p >= (1ULL << 63)) throw std::invalid_argument("modulus must be a prime below 2^63");
  float_reduce_ = std::numeric_limits<long double>::digits >= 64 && p < (1ULL << 62);
  inv_p_ = 1.0L / static_cast<long double>(p);
  for (std::uint64_t r : orders) {
    if (r == 0) throw std::invalid_argument("root order must be positive");
    if (roots_.contains(r)) continue;
    Fp w = find_root(*this, r);
    for (std::uint64_t d : divisors(r)) {
      if (roots_.contains(d)) continue;
      Fp wd = powmod(w, r / d, p_);
      roots_[d] = wd;
      inverse_roots_[d] = powmod(wd, p_ - 2, p_);
      inv_orders_[d] = powmod(d % p_, p_ - 2, p_);
    }
  }
}

Fp PrimeField::pow(Fp base, std::uint64_t exp) const { return powmod(base, exp, p_); }

Fp PrimeField::inv(Fp a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in field");
  return powmod(a, p_ - 2, p_);
}

Fp PrimeField::root(std::uint64_t order) const {
  auto it = roots_.find(order);
  if (it == roots_.end()) throw std::invalid_argument("order unavailable in this field");
  return it->second;
}

Fp PrimeField::inverse_root(std::uint64_t order) const {
  auto it = inverse_roots_.find(order);
  if (it == inverse_roots_.end()) throw std::invalid_argument("order unavailable in this field");
  return it->second;
}

Fp PrimeField::inverse_of_order(std::uint64_t order) const {
  auto it = inv_orders_.find(order);
  if (it == inv_orders_.end()) throw std::invalid_argument("order unavailable in this field");
  return it->second;
}

bool has_exact_order(const PrimeField& field, Fp omega, std::uint64_t r) {
  return r > 0 && exact_order(omega % field.modulus(), r, field.modulus());
}

Fp find_root(const PrimeField& field, std::uint64_t r) {
  const std::uint64_t p = field.modulus();
  if (r == 0 || (p - 1) % r != 0) throw std::invalid_argument("order unavailable in this field");
  if (r == 1) return 1;
  for (std::uint64_t x = 2; x < p; ++x) {
    Fp w = powmod(x, (p - 1) / r, p);
    if (exact_order(w, r, p)) return w;
  }
  throw std::invalid_argument("order unavailable in this field");
}

PrimeField choose_prime(std::span<const std::uint64_t> orders, std::uint64_t min_value) {
  std::uint64_t l = 1;
  for (std::uint64_t r : orders) {
    if (r == 0) throw std::invalid_argument("root order must be positive");
    l = std::lcm(l, r);
    if (l >= (1ULL << 63)) throw std::overflow_error("no admissible word-sized prime");
  }
  const std::uint64_t limit = 1ULL << 63;
  // Smallest j with 1 + j*l > min_value.
  std::uint64_t j = min_value / l;
  for (;; ++j) {
    u128 cand = static_cast<u128>(j) * l + 1;
    if (cand >= limit) throw std::overflow_error("no admissible word-sized prime");
    auto c = static_cast<std::uint64_t>(cand);
    if (c <= min_value) continue;
    if (is_prime(c)) return PrimeField(c, orders);
  }
}

std::vector<PrimeField> choose_primes(std::span<const std::uint64_t> orders, std::uint64_t min_value,
                                      std::size_t count) {
  std::vector<PrimeField> out;
  out.reserve(count);
  std::uint64_t floor = min_value;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(choose_prime(orders, floor));
    floor = out.back().modulus();
  }
  return out;
}

ResidueValue reduce(const BigInt& value, std::span<const PrimeField> fields) {
  ResidueValue out;
  for (const auto& f : fields) {
    BigInt r = value % f.modulus();
    if (r < 0) r += f.modulus();
    out.residues.push_back(static_cast<Fp>(r));
  }
  return out;
}

BigInt crt_reconstruct(const ResidueValue& value, std::span<const PrimeField> fields) {
  if (value.residues.size() != fields.size()) throw std::invalid_argument("residue count does not match prime count");
  BigInt x = 0;
  BigInt m = 1;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::uint64_t p = fields[i].modulus();
    // Solve x + m*t == r (mod p).
    std::uint64_t xm = static_cast<std::uint64_t>(x % p);
    std::uint64_t mm = static_cast<std::uint64_t>(m % p);
    std::uint64_t r = value.residues[i] % p;
    std::uint64_t diff = r >= xm ? r - xm : r + (p - xm);
    if (mm == 0) throw std::invalid_argument("moduli are not coprime");
    std::uint64_t t = mulmod(diff, powmod(mm, p - 2, p), p);
    x += m * t;
    m *= p;
  }
  return x;
}

}  // namespace sigrho
