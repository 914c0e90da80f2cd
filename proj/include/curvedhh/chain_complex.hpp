#ifndef CURVEDHH_CHAIN_COMPLEX_HPP
#define CURVEDHH_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "curvedhh/sparse_matrix.hpp"

namespace curvedhh {

/*
 * A bounded cochain complex C^lo -> ... -> C^hi over one field.  Degrees are
 * cohomological: differential(k) maps C^k to C^{k+1} and is stored as a
 * dim(k+1) x dim(k) matrix.  The differential out of the top degree is zero.
 */
class FiniteChainComplex {
 public:
  explicit FiniteChainComplex(Field f = Field::rationals()) : field_(f) {}

  // dims[i] is the dimension in degree min_degree + i; differentials[i] maps
  // degree min_degree + i to the next one, so there are dims.size() - 1 of them
  // (or none when dims is empty).  Shapes are checked; d∘d is not (see validate()).
  FiniteChainComplex(Field f, int min_degree, std::vector<std::size_t> dims, std::vector<SparseMatrix> differentials);

  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return dims_.empty(); }
  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  // Zero matrix of the right shape outside the stored range.
  SparseMatrix differential(int degree) const;

  // Throws InvalidComplexError naming the first degree k with d_{k+1} d_k != 0.
  void validate() const;

 private:
  Field field_;
  int min_degree_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> diffs_;
};

// dim ker d_k - rank d_{k-1} for every degree in range (zeros included).
// Validates d∘d = 0 first.
std::map<int, std::size_t> homology_dims(const FiniteChainComplex& c);

// Alternating sum of chain dimensions.
long euler_characteristic(const FiniteChainComplex& c);

// Alternating sum of a degree -> dimension table.
long euler_characteristic(const std::map<int, std::size_t>& dims);

}  // namespace curvedhh

#endif  // CURVEDHH_CHAIN_COMPLEX_HPP
