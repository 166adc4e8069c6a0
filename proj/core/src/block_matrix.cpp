#include "oudesign/block_matrix.hpp"

#include "oudesign/errors.hpp"

namespace oudesign {

BlockMat::BlockMat(std::size_t blocks)
    : blocks_(blocks),
      dense_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * blocks),
                                   static_cast<Eigen::Index>(2 * blocks))) {}

Mat2 BlockMat::block(std::size_t i, std::size_t j) const {
  if (i >= blocks_ || j >= blocks_) throw ArgumentError("block index out of range");
  return dense_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
}

void BlockMat::set_block(std::size_t i, std::size_t j, const Mat2& value) {
  if (i >= blocks_ || j >= blocks_) throw ArgumentError("block index out of range");
  dense_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j)) = value;
}

}  // namespace oudesign
