#include "sigrho/posets.hpp"

#include <stdexcept>
#include <vector>

#include "sigrho/transforms.hpp"

namespace sigrho {

CoordOrder CoordOrder::chain(std::size_t r) {
  if (r == 0) throw std::invalid_argument("chain order needs at least one element");
  return CoordOrder(OrderKind::chain, r);
}

CoordOrder CoordOrder::sigma_rho_flat(std::size_t sigma_labels, bool sigma_cofinite, std::size_t rho_labels,
                                      bool rho_cofinite) {
  if (sigma_labels + rho_labels == 0) throw std::invalid_argument("flat order needs at least one label");
  if ((sigma_cofinite && sigma_labels == 0) || (rho_cofinite && rho_labels == 0)) {
    throw std::invalid_argument("cofinite side needs a top label");
  }
  CoordOrder o(OrderKind::sigma_rho_flat, sigma_labels + rho_labels);
  o.sigma_labels_ = sigma_labels;
  o.sigma_top_ = sigma_cofinite;
  o.rho_top_ = rho_cofinite;
  return o;
}

CoordOrder CoordOrder::tds_pairs() {
  CoordOrder o(OrderKind::tds_pairs, 4);
  o.sigma_labels_ = 2;
  o.sigma_top_ = true;
  o.rho_top_ = true;
  return o;
}

bool CoordOrder::leq(std::size_t a, std::size_t b) const {
  if (a >= size_ || b >= size_) throw std::out_of_range("order element out of range");
  if (kind_ == OrderKind::chain) return a <= b;
  if (a == b) return true;
  const bool a_sigma = a < sigma_labels_;
  const bool b_sigma = b < sigma_labels_;
  if (a_sigma != b_sigma) return false;
  if (b_sigma) return sigma_top_ && b == sigma_labels_ - 1;
  return rho_top_ && b == size_ - 1;
}

std::optional<std::size_t> CoordOrder::join(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t u = 0; u < size_; ++u) {
    if (!leq(a, u) || !leq(b, u)) continue;
    if (!best || leq(u, *best)) best = u;
  }
  if (best) {
    for (std::size_t u = 0; u < size_; ++u) {
      if (leq(a, u) && leq(b, u) && !leq(*best, u)) return std::nullopt;
    }
  }
  return best;
}

void CoordOrder::zeta_step(Fp* base, std::size_t stride, const PrimeField& F) const {
  if (kind_ == OrderKind::chain) {
    for (std::size_t j = 1; j < size_; ++j) base[j * stride] = F.add(base[j * stride], base[(j - 1) * stride]);
    return;
  }
  if (sigma_top_) {
    Fp& top = base[(sigma_labels_ - 1) * stride];
    for (std::size_t j = 0; j + 1 < sigma_labels_; ++j) top = F.add(top, base[j * stride]);
  }
  if (rho_top_) {
    Fp& top = base[(size_ - 1) * stride];
    for (std::size_t j = sigma_labels_; j + 1 < size_; ++j) top = F.add(top, base[j * stride]);
  }
}

void CoordOrder::mobius_step(Fp* base, std::size_t stride, const PrimeField& F) const {
  if (kind_ == OrderKind::chain) {
    for (std::size_t j = size_; j-- > 1;) base[j * stride] = F.sub(base[j * stride], base[(j - 1) * stride]);
    return;
  }
  if (sigma_top_) {
    Fp& top = base[(sigma_labels_ - 1) * stride];
    for (std::size_t j = 0; j + 1 < sigma_labels_; ++j) top = F.sub(top, base[j * stride]);
  }
  if (rho_top_) {
    Fp& top = base[(size_ - 1) * stride];
    for (std::size_t j = sigma_labels_; j + 1 < size_; ++j) top = F.sub(top, base[j * stride]);
  }
}

namespace {

template <class Step>
void sweep_axes(std::span<Fp> data, std::span<const std::size_t> shape, std::size_t axes, Step step) {
  std::size_t total = 1;
  for (std::size_t s : shape) total *= s;
  if (total != data.size()) throw std::invalid_argument("tensor shape mismatch");
  std::size_t stride = total;
  for (std::size_t d = 0; d < axes; ++d) {
    const std::size_t r = shape[d];
    stride /= r;
    const std::size_t block = r * stride;
    for (std::size_t outer = 0; outer < total; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) step(d, data.data() + outer + inner, stride);
    }
  }
}

std::vector<std::size_t> shape_of(const Tensor& t) {
  std::vector<std::size_t> s;
  for (const Dim& d : t.dims()) s.push_back(d.size);
  return s;
}

}  // namespace

void zeta_product_inplace(std::span<Fp> data, std::span<const std::size_t> shape, std::size_t order_dims,
                          const CoordOrder& order, Transform dir, const PrimeField& field) {
  if (order_dims > shape.size()) throw std::invalid_argument("more order dims than tensor rank");
  for (std::size_t d = 0; d < order_dims; ++d) {
    if (shape[d] != order.size()) throw std::invalid_argument("dimension size does not match the order");
  }
  sweep_axes(data, shape, order_dims, [&](std::size_t, Fp* base, std::size_t stride) {
    if (dir == Transform::zeta) {
      order.zeta_step(base, stride, field);
    } else {
      order.mobius_step(base, stride, field);
    }
  });
}

Tensor zeta_chain(const Tensor& t, Transform dir) {
  for (const Dim& d : t.dims()) {
    if (d.kind != DimKind::linear) throw std::invalid_argument("chain zeta needs linear dims");
  }
  Tensor out = t;
  const auto shape = shape_of(t);
  const PrimeField& F = t.field();
  sweep_axes(out.data(), shape, shape.size(), [&](std::size_t d, Fp* base, std::size_t stride) {
    CoordOrder c = CoordOrder::chain(shape[d]);
    if (dir == Transform::zeta) {
      c.zeta_step(base, stride, F);
    } else {
      c.mobius_step(base, stride, F);
    }
  });
  return out;
}

Tensor zeta_product_order(const Tensor& t, const CoordOrder& order, Transform dir,
                          std::optional<std::size_t> order_dims) {
  Tensor out = t;
  const auto shape = shape_of(t);
  zeta_product_inplace(out.data(), shape, order_dims.value_or(t.rank()), order, dir, t.field());
  return out;
}

Tensor covering_product(const Tensor& f, const Tensor& g, const CoordOrder& order) {
  return cover_convolution(f, g, order, f.rank());
}

Tensor cover_convolution(const Tensor& f, const Tensor& g, const CoordOrder& order, std::size_t order_dims) {
  if (!f.same_shape(g)) throw std::invalid_argument("tensor shape mismatch");
  if (f.field().modulus() != g.field().modulus()) throw std::invalid_argument("tensor field mismatch");
  if (order_dims > f.rank()) throw std::invalid_argument("more order dims than tensor rank");
  std::vector<Dim> tail(f.dims().begin() + static_cast<std::ptrdiff_t>(order_dims), f.dims().end());
  for (const Dim& d : tail) {
    if (d.kind != DimKind::linear) throw std::invalid_argument("convolution dims must be linear");
  }
  const PrimeField& F = f.field();
  const auto shape = shape_of(f);
  Tensor zf = zeta_product_order(f, order, Transform::zeta, order_dims);
  Tensor zg = zeta_product_order(g, order, Transform::zeta, order_dims);
  Tensor h(f.dims(), F);
  const std::size_t q = shape_volume(tail);
  if (tail.empty()) {
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = F.mul(zf[i], zg[i]);
  } else {
    ConvolutionPlan plan(tail, F);
    for (std::size_t off = 0; off < h.size(); off += q) {
      plan.convolve(std::span<const Fp>(zf.data()).subspan(off, q), std::span<const Fp>(zg.data()).subspan(off, q),
                    std::span<Fp>(h.data()).subspan(off, q));
    }
  }
  zeta_product_inplace(h.data(), shape, order_dims, order, Transform::mobius, F);
  return h;
}

}  // namespace sigrho
