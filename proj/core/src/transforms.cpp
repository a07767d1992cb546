#include "sigrho/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sigrho {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// In-place DFT of n rows of `stride` entries each; tw[j] = omega^j for j < n/2.
void radix2(Fp* a, std::size_t n, std::size_t stride, const std::vector<Fp>& tw, const PrimeField& F) {
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap_ranges(a + i * stride, a + (i + 1) * stride, a + j * stride);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Fp* x = a + (i + j) * stride;
        Fp* y = x + half * stride;
        const Fp w = tw[j * step];
        for (std::size_t t = 0; t < stride; ++t) {
          const Fp u = x[t];
          const Fp v = j == 0 ? y[t] : F.mul(y[t], w);
          x[t] = F.add(u, v);
          y[t] = F.sub(u, v);
        }
      }
    }
  }
}

/// DFT of n rows of `stride` entries into out; tw[j] = omega^j for j < n.
void direct(const Fp* a, Fp* out, std::size_t n, std::size_t stride, const std::vector<Fp>& tw,
            const PrimeField& F) {
  if (n == 3) {
    // omega^2 = -1 - omega, so one product per line.
    const Fp w = tw[1];
    const Fp *a0 = a, *a1 = a + stride, *a2 = a + 2 * stride;
    Fp *y0 = out, *y1 = out + stride, *y2 = out + 2 * stride;
    for (std::size_t t = 0; t < stride; ++t) {
      const Fp d = F.mul(w, F.sub(a1[t], a2[t]));
      y0[t] = F.add(a0[t], F.add(a1[t], a2[t]));
      y1[t] = F.add(F.sub(a0[t], a2[t]), d);
      y2[t] = F.sub(F.sub(a0[t], a1[t]), d);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Fp* o = out + i * stride;
    std::copy(a, a + stride, o);
    for (std::size_t j = 1, e = i; j < n; ++j, e = (e + i) % n) {
      const Fp w = tw[e];
      const Fp* row = a + j * stride;
      for (std::size_t t = 0; t < stride; ++t) o[t] = F.add(o[t], F.mul(w, row[t]));
    }
  }
}

std::vector<Fp> power_table(const PrimeField& F, Fp omega, std::size_t n) {
  std::vector<Fp> t(n);
  Fp w = 1;
  for (std::size_t j = 0; j < n; ++j) {
    t[j] = w;
    w = static_cast<Fp>(static_cast<u128>(w) * omega % F.modulus());
  }
  return t;
}

void check_same(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("tensor shape mismatch");
  if (a.field().modulus() != b.field().modulus()) throw std::invalid_argument("tensor field mismatch");
}

}  // namespace

std::size_t padded_linear_size(std::size_t q) { return q <= 1 ? 1 : next_pow2(2 * q - 1); }

std::vector<std::uint64_t> required_orders(std::span<const Dim> dims) {
  std::vector<std::uint64_t> out;
  for (const Dim& d : dims) {
    std::size_t r = d.kind == DimKind::cyclic ? d.size : padded_linear_size(d.size);
    if (r > 1) out.push_back(r);
  }
  return out;
}

std::vector<Fp> dft(std::span<const Fp> seq, const PrimeField& field, Fp omega, Direction dir) {
  const std::size_t r = seq.size();
  if (r == 0) return {};
  if (!has_exact_order(field, omega, r)) throw std::invalid_argument("not a primitive root of requested order");
  Fp w = dir == Direction::forward ? omega % field.modulus() : field.inv(omega);
  std::vector<Fp> in(seq.begin(), seq.end());
  for (Fp& x : in) x = field.reduce(x);
  std::vector<Fp> out(r);
  if (is_pow2(r)) {
    out = in;
    radix2(out.data(), r, 1, power_table(field, w, r / 2), field);
  } else {
    direct(in.data(), out.data(), r, 1, power_table(field, w, r), field);
  }
  if (dir == Direction::inverse) {
    Fp ir = field.inv(r % field.modulus());
    for (Fp& x : out) x = field.mul(x, ir);
  }
  return out;
}

ConvolutionPlan::ConvolutionPlan(std::vector<Dim> dims, const PrimeField& field)
    : dims_(std::move(dims)), field_(&field) {
  for (const Dim& d : dims_) {
    if (d.size == 0) throw std::invalid_argument("tensor dimension of size zero");
    Axis ax;
    ax.size = d.kind == DimKind::cyclic ? d.size : padded_linear_size(d.size);
    volume_ *= d.size;
    padded_volume_ *= ax.size;
    padded_.push_back(ax.size);
    if (ax.size > 1) {
      Fp w = field.root(ax.size);
      Fp wi = field.inverse_root(ax.size);
      ax.radix2 = is_pow2(ax.size);
      std::size_t len = ax.radix2 ? ax.size / 2 : ax.size;
      ax.fwd = power_table(field, w, len);
      ax.inv = power_table(field, wi, len);
    }
    axes_.push_back(std::move(ax));
  }
  inv_volume_ = field.inv(padded_volume_ % field.modulus());
}

void ConvolutionPlan::embed(std::span<const Fp> src, std::vector<Fp>& padded) const {
  if (src.size() != volume_) throw std::invalid_argument("tensor shape mismatch");
  padded.assign(padded_volume_, 0);
  if (dims_.empty()) {
    padded[0] = src[0];
    return;
  }
  const std::size_t k = dims_.size();
  const std::size_t row = dims_[k - 1].size;
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t base = 0; base < volume_; base += row) {
    std::size_t dst = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) dst = dst * padded_[i] + idx[i];
    dst *= padded_[k - 1];
    for (std::size_t j = 0; j < row; ++j) padded[dst + j] = src[base + j];
    for (std::size_t i = k - 1; i-- > 0;) {
      if (++idx[i] < dims_[i].size) break;
      idx[i] = 0;
    }
  }
}

void ConvolutionPlan::restrict(const std::vector<Fp>& padded, std::span<Fp> out) const {
  if (out.size() != volume_) throw std::invalid_argument("tensor shape mismatch");
  if (dims_.empty()) {
    out[0] = padded[0];
    return;
  }
  const std::size_t k = dims_.size();
  const std::size_t row = dims_[k - 1].size;
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t base = 0; base < volume_; base += row) {
    std::size_t src = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) src = src * padded_[i] + idx[i];
    src *= padded_[k - 1];
    for (std::size_t j = 0; j < row; ++j) out[base + j] = padded[src + j];
    for (std::size_t i = k - 1; i-- > 0;) {
      if (++idx[i] < dims_[i].size) break;
      idx[i] = 0;
    }
  }
}

void ConvolutionPlan::sweep(std::vector<Fp>& buf, bool inverse) const {
  const PrimeField& F = *field_;
  std::size_t stride = padded_volume_;
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    const Axis& ax = axes_[d];
    const std::size_t r = ax.size;
    stride /= r;
    if (r == 1) continue;
    const auto& tw = inverse ? ax.inv : ax.fwd;
    const std::size_t block = r * stride;
    if (!ax.radix2) line_.resize(block);
    for (std::size_t outer = 0; outer < padded_volume_; outer += block) {
      Fp* base = buf.data() + outer;
      if (ax.radix2) {
        radix2(base, r, stride, tw, F);
      } else {
        direct(base, line_.data(), r, stride, tw, F);
        std::copy(line_.begin(), line_.end(), base);
      }
    }
  }
}

void ConvolutionPlan::forward(std::vector<Fp>& padded) const { sweep(padded, false); }

void ConvolutionPlan::inverse(std::vector<Fp>& padded) const {
  sweep(padded, true);
  if (padded_volume_ == 1) return;
  for (Fp& x : padded) x = field_->mul(x, inv_volume_);
}

void ConvolutionPlan::convolve(std::span<const Fp> f, std::span<const Fp> g, std::span<Fp> out) const {
  embed(f, scratch_a_);
  embed(g, scratch_b_);
  forward(scratch_a_);
  forward(scratch_b_);
  for (std::size_t i = 0; i < padded_volume_; ++i) scratch_a_[i] = field_->mul(scratch_a_[i], scratch_b_[i]);
  inverse(scratch_a_);
  restrict(scratch_a_, out);
}

Tensor multidim_dft(const Tensor& t, Direction dir) {
  for (const Dim& d : t.dims()) {
    if (d.kind != DimKind::cyclic) throw std::invalid_argument("multidimensional DFT needs cyclic dims");
  }
  ConvolutionPlan plan(t.dims(), t.field());
  std::vector<Fp> buf = t.data();
  if (dir == Direction::forward) {
    plan.forward(buf);
  } else {
    plan.inverse(buf);
  }
  return Tensor(t.dims(), std::move(buf), t.field());
}

Tensor cyclic_convolution(const Tensor& a, const Tensor& b) {
  check_same(a, b);
  for (const Dim& d : a.dims()) {
    if (d.kind != DimKind::cyclic) throw std::invalid_argument("cyclic convolution needs cyclic dims");
  }
  return combined_convolution(a, b);
}

Tensor combined_convolution(const Tensor& f, const Tensor& g) {
  check_same(f, g);
  ConvolutionPlan plan(f.dims(), f.field());
  Tensor out(f.dims(), f.field());
  plan.convolve(f.data(), g.data(), out.data());
  return out;
}

Tensor noncyclic_convolution(const Tensor& f, const Tensor& g) {
  for (const Dim& d : f.dims()) {
    if (d.kind != DimKind::linear) throw std::invalid_argument("non-cyclic convolution needs linear dims");
  }
  return combined_convolution(f, g);
}

}  // namespace sigrho
