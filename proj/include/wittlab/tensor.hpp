#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wittlab {

/// Dense cubic tensor of integers, indexed (i, j, k) with 0 <= i, j, k < rank.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t rank, std::int64_t fill = 0)
      : rank_(rank), data_(rank * rank * rank, fill) {}

  std::size_t rank() const noexcept { return rank_; }

  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * rank_ + j) * rank_ + k];
  }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * rank_ + j) * rank_ + k];
  }

  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace wittlab
