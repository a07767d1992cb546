#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigrho/modring.hpp"

namespace sigrho {

enum class DimKind { cyclic, linear };

struct Dim {
  std::size_t size = 1;
  DimKind kind = DimKind::cyclic;

  friend bool operator==(const Dim&, const Dim&) = default;
};

/// Dense rank-k array over F_p. Row-major, last dimension contiguous.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<Dim> dims, const PrimeField& field);
  Tensor(std::vector<Dim> dims, std::vector<Fp> data, const PrimeField& field);

  const std::vector<Dim>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::size_t size() const { return data_.size(); }
  const PrimeField& field() const { return *field_; }

  std::vector<Fp>& data() { return data_; }
  const std::vector<Fp>& data() const { return data_; }

  Fp& operator[](std::size_t i) { return data_[i]; }
  Fp operator[](std::size_t i) const { return data_[i]; }

  std::vector<std::size_t> strides() const;
  std::size_t flat_index(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  Fp at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }
  Fp& at(std::span<const std::size_t> idx) { return data_[flat_index(idx)]; }

  bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

 private:
  std::vector<Dim> dims_;
  std::vector<Fp> data_;
  const PrimeField* field_ = nullptr;
};

std::size_t shape_volume(std::span<const Dim> dims);

}  // namespace sigrho
