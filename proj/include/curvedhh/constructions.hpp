#ifndef CURVEDHH_CONSTRUCTIONS_HPP
#define CURVEDHH_CONSTRUCTIONS_HPP

#include <vector>

#include "curvedhh/category.hpp"

namespace curvedhh {

// Keeps hom(X_j, X_k) for j < k and the units on the diagonal; products are
// restricted to surviving inputs and projected to surviving outputs.
AInftyCategory directed_subcategory(const AInftyCategory& b);

// Generators of A other than the units.
std::vector<int> augmentation_ideal(const AInftyCategory& a);

// A composable word in A_+, as written (index 0 applied last).  The empty
// word at an object has start == end.
struct TensorWord {
  int start = 0;
  int end = 0;
  std::vector<int> letters;
  // sum of (|a| - 1)
  int degree = 0;
};

// Every word of T(A_+[1]) including one empty word per object.  Throws
// ValidationError if A_+ is not directed (the enumeration would not stop).
std::vector<TensorWord> tensor_algebra_basis(const AInftyCategory& a);

}  // namespace curvedhh

#endif  // CURVEDHH_CONSTRUCTIONS_HPP
