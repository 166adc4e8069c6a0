#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace oudesign {

using Mat2 = Eigen::Matrix2d;

// A 2n x 2n real matrix addressed as an n x n grid of 2 x 2 blocks.
class BlockMat {
 public:
  explicit BlockMat(std::size_t blocks);

  std::size_t blocks() const noexcept { return blocks_; }
  Eigen::Index rows() const noexcept { return dense_.rows(); }

  Mat2 block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const Mat2& value);

  const Eigen::MatrixXd& dense() const noexcept { return dense_; }

 private:
  std::size_t blocks_;
  Eigen::MatrixXd dense_;
};

}  // namespace oudesign
