#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sigrho/modring.hpp"
#include "sigrho/tensor.hpp"

namespace sigrho {

enum class Transform { zeta, mobius };

enum class OrderKind { chain, sigma_rho_flat, tds_pairs };

/// A small partial order P on {0, ..., size-1} with in-place single
/// coordinate zeta and Moebius steps.
///
/// chain(r): the total order 0 < 1 < ... < r-1.
/// sigma_rho_flat: digits [0, sigma_labels) are the sigma side followed by
///   the rho side. On a cofinite side the last digit is the top label and lies
///   above every other digit of that side. All other pairs are incomparable.
/// tds_pairs: the 2+2 order |0|s < |>=1|s, |0|r < |>=1|r.
class CoordOrder {
 public:
  static CoordOrder chain(std::size_t r);
  static CoordOrder sigma_rho_flat(std::size_t sigma_labels, bool sigma_cofinite, std::size_t rho_labels,
                                   bool rho_cofinite);
  static CoordOrder tds_pairs();

  OrderKind kind() const { return kind_; }
  std::size_t size() const { return size_; }

  bool leq(std::size_t a, std::size_t b) const;
  /// Least upper bound, if one exists.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  /// Line of size() entries at base, base+stride, ...
  void zeta_step(Fp* base, std::size_t stride, const PrimeField& field) const;
  void mobius_step(Fp* base, std::size_t stride, const PrimeField& field) const;

 private:
  CoordOrder(OrderKind kind, std::size_t size) : kind_(kind), size_(size) {}

  OrderKind kind_;
  std::size_t size_;
  std::size_t sigma_labels_ = 0;
  bool sigma_top_ = false;
  bool rho_top_ = false;
};

/// Prefix-sum zeta (or its inverse) along every axis, each axis read as a chain
/// of its own length. All dims must be linear.
Tensor zeta_chain(const Tensor& t, Transform dir);

/// Applies the order's step along the first order_dims axes; the remaining
/// axes are carried along untouched. order_dims defaults to the full rank.
Tensor zeta_product_order(const Tensor& t, const CoordOrder& order, Transform dir,
                          std::optional<std::size_t> order_dims = std::nullopt);

/// Raw form of zeta_product_order on a row-major buffer of the given shape.
void zeta_product_inplace(std::span<Fp> data, std::span<const std::size_t> shape, std::size_t order_dims,
                          const CoordOrder& order, Transform dir, const PrimeField& field);

/// h(x) = sum over y1 v y2 = x of f(y1) g(y2), computed as mu(zeta f . zeta g).
Tensor covering_product(const Tensor& f, const Tensor& g, const CoordOrder& order);

/// Covering product over the first order_dims axes combined with a
/// non-cyclic convolution over the remaining (linear) axes.
Tensor cover_convolution(const Tensor& f, const Tensor& g, const CoordOrder& order, std::size_t order_dims);

}  // namespace sigrho
