#ifndef CURVEDHH_EXAMPLES_HPP
#define CURVEDHH_EXAMPLES_HPP

#include <memory>
#include <string>
#include <vector>

#include "curvedhh/category.hpp"

namespace curvedhh {

struct ExamplePair {
  std::string name;
  std::shared_ptr<const AInftyCategory> a;  // directed subcategory
  std::shared_ptr<const AInftyCategory> b;
  int dimension = 0;                        // fibre parameter d
  std::vector<std::string> notes;           // how the structure constants were obtained
};

// A_m chain A (arrows a_j : X_j -> X_{j+1} in degree 0, all compositions
// zero) and B = A ⊕ A^∨[1 - d].
ExamplePair gen_am_quiver(int m, int d, Field f = Field::rationals());

// m zero-spheres in m + 1 points, L_j = {p_{j-1}, p_j}.  Everything sits in
// degree 0; B is the algebra of functions on pairwise intersections.
ExamplePair gen_branched_cover(int m, Field f = Field::rationals());

// Two copies of S^{d-1}: B = Mat_2(H^*(S^{d-1})).
ExamplePair gen_two_spheres(int d, Field f = Field::rationals());

// No objects at all.
ExamplePair gen_empty(Field f = Field::rationals());

// Looks up "am-quiver", "branched-cover", "two-spheres" or "empty".
ExamplePair generate_example(const std::string& name, int m, int d, Field f = Field::rationals());
std::vector<std::string> example_names();

}  // namespace curvedhh

#endif  // CURVEDHH_EXAMPLES_HPP
