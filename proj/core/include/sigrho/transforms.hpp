#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigrho/modring.hpp"
#include "sigrho/tensor.hpp"

namespace sigrho {

enum class Direction { forward, inverse };

/// One-dimensional DFT of length r = seq.size() with the given primitive r-th
/// root. Power-of-two lengths use radix-2 butterflies, others the direct sum.
/// The inverse includes the 1/r factor.
std::vector<Fp> dft(std::span<const Fp> seq, const PrimeField& field, Fp omega, Direction dir);

/// Per-axis DFT sweep. Every dimension must be cyclic and the field must hold
/// a root of each dimension's order.
Tensor multidim_dft(const Tensor& t, Direction dir);

/// Wrap-around convolution over Z_{r_1} x ... x Z_{r_k}.
Tensor cyclic_convolution(const Tensor& a, const Tensor& b);

/// Convolution that wraps on cyclic dims and drops overflow on linear dims.
Tensor combined_convolution(const Tensor& f, const Tensor& g);

/// combined_convolution where every dimension must be linear.
Tensor noncyclic_convolution(const Tensor& f, const Tensor& g);

/// Transform length used for a linear dimension of size q.
std::size_t padded_linear_size(std::size_t q);

/// Transform orders a convolution over these dims requires from the field.
std::vector<std::uint64_t> required_orders(std::span<const Dim> dims);

/// Precomputed combined convolution for one shape, reusable across many
/// operand pairs. Operands and results use the unpadded row-major layout.
class ConvolutionPlan {
 public:
  ConvolutionPlan(std::vector<Dim> dims, const PrimeField& field);

  const std::vector<Dim>& dims() const { return dims_; }
  std::size_t volume() const { return volume_; }
  std::size_t padded_volume() const { return padded_volume_; }
  const PrimeField& field() const { return *field_; }

  /// Zero-pads src into the transform domain buffer (resized as needed).
  void embed(std::span<const Fp> src, std::vector<Fp>& padded) const;
  void forward(std::vector<Fp>& padded) const;
  /// Inverse transform including normalisation.
  void inverse(std::vector<Fp>& padded) const;
  /// Copies the original index box back out of a padded buffer.
  void restrict(const std::vector<Fp>& padded, std::span<Fp> out) const;

  /// out = f (*) g. Uses internal scratch, so one plan per thread.
  void convolve(std::span<const Fp> f, std::span<const Fp> g, std::span<Fp> out) const;

 private:
  struct Axis {
    std::size_t size = 1;
    bool radix2 = false;
    std::vector<Fp> fwd;  // omega^j
    std::vector<Fp> inv;  // omega^{-j}
  };

  void sweep(std::vector<Fp>& buf, bool inverse) const;

  std::vector<Dim> dims_;
  std::vector<std::size_t> padded_;
  std::vector<Axis> axes_;
  std::size_t volume_ = 1;
  std::size_t padded_volume_ = 1;
  Fp inv_volume_ = 1;
  const PrimeField* field_;
  mutable std::vector<Fp> scratch_a_, scratch_b_, line_;
};

}  // namespace sigrho
