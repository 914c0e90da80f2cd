#ifndef CURVEDHH_BAR_HPP
#define CURVEDHH_BAR_HPP

#include <map>
#include <string>
#include <vector>

#include "curvedhh/bimodule.hpp"
#include "curvedhh/hochschild.hpp"

namespace curvedhh {

// An open word of D_+ letters, as written.  `object` is where the word
// starts (the source of its last letter); it is the only data of an empty
// word.
struct BarWord {
  int object = 0;
  Word letters;
  friend auto operator<=>(const BarWord&, const BarWord&) = default;
};

struct BarWordHash {
  std::size_t operator()(const BarWord& w) const noexcept;
};

using BarComplex = WordComplex<BarWord, BarWordHash>;

// Reduced bar complex of D modulo weight p+1: mu-blocks plus t e insertions
// in all n + 2 places.  Degree = sum (|x| - 1).
BarComplex bar_complex(const CurvedCategory& d, int p, Field f);
std::map<int, BettiRow> bar_betti_table(const CurvedCategory& d, int pmax, Field f);

// hom_{D(A)}(R, R), obtained as the dual of the bar complex of T(A_+[1]):
// chain groups in negated degrees, transposed differentials.
FiniteChainComplex simple_hom_complex(const AInftyCategory& a, Field f);

struct AcyclicityReport {
  bool closed = true;    // the subspace is preserved by the differential
  bool acyclic = true;
  std::map<int, std::size_t> chain_dims;  // cohomological
  std::map<int, std::size_t> homology;    // cohomological, nonzero only
  std::string message;
};

// Inside B̄/F^2: words of weight 0 and words whose weight-1 letter is t a
// with a in A (t e included), i.e. the cone of inserting t e.
AcyclicityReport insert_a_subcomplex_check(const CurvedCategory& d, Field f);

// T(A_+[1]) ⊗ tQ[1] ⊗ T(A_+[1]) with the mu_A and Q-action blocks.
struct SerreWord {
  std::vector<int> left;   // A-generators applied after q, as written
  int q = 0;
  std::vector<int> right;  // A-generators applied before q, as written
  friend auto operator<=>(const SerreWord&, const SerreWord&) = default;
};

struct SerreWordHash {
  std::size_t operator()(const SerreWord& w) const noexcept;
};

using SerreComplex = WordComplex<SerreWord, SerreWordHash>;

SerreComplex serre_step_complex(const Bimodule& q, Field f);

struct SerreComparison {
  bool match = true;
  std::map<int, std::size_t> bar;    // cohomological homology of B̄/F^2
  std::map<int, std::size_t> serre;  // cohomological homology of the step complex
  std::string message;
};

// Compares H(B̄/F^2) with the homology of the step complex for Q = B/A.
SerreComparison compare_serre_step(const CurvedCategory& d, Field f);

}  // namespace curvedhh

#endif  // CURVEDHH_BAR_HPP
