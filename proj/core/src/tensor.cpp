#include "sigrho/tensor.hpp"

#include <stdexcept>

namespace sigrho {

std::size_t shape_volume(std::span<const Dim> dims) {
  std::size_t v = 1;
  for (const Dim& d : dims) v *= d.size;
  return v;
}

Tensor::Tensor(std::vector<Dim> dims, const PrimeField& field)
    : dims_(std::move(dims)), field_(&field) {
  for (const Dim& d : dims_) {
    if (d.size == 0) throw std::invalid_argument("tensor dimension of size zero");
  }
  data_.assign(shape_volume(dims_), 0);
}

Tensor::Tensor(std::vector<Dim> dims, std::vector<Fp> data, const PrimeField& field)
    : dims_(std::move(dims)), data_(std::move(data)), field_(&field) {
  if (data_.size() != shape_volume(dims_)) throw std::invalid_argument("tensor data length mismatch");
  for (Fp& x : data_) x = field.reduce(x);
}

std::vector<std::size_t> Tensor::strides() const {
  std::vector<std::size_t> s(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) s[i - 1] = s[i] * dims_[i].size;
  return s;
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw std::invalid_argument("index rank mismatch");
  std::size_t f = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= dims_[i].size) throw std::out_of_range("tensor index out of range");
    f = f * dims_[i].size + idx[i];
  }
  return f;
}

std::vector<std::size_t> Tensor::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    idx[i] = flat % dims_[i].size;
    flat /= dims_[i].size;
  }
  return idx;
}

}  // namespace sigrho
