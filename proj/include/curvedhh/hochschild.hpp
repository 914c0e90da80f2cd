#ifndef CURVEDHH_HOCHSCHILD_HPP
#define CURVEDHH_HOCHSCHILD_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvedhh/curved.hpp"
#include "curvedhh/word_complex.hpp"

namespace curvedhh {

// Homological degree -> dimension, nonzero entries only.
using BettiRow = std::map<int, std::size_t>;

using HochschildComplex = WordComplex<Word, WordHash>;

std::string describe_word(const CurvedCategory& d, const Word& w);

// Cyclic words (x_n, ..., x_0) stored leftmost first: w[0] = x_n.
// Interior letters lie in D_+, the leftmost one in A (weight 0) or t B.
std::vector<Word> enumerate_cyclic_words(const CurvedCategory& d, int p);

// |x_n| + sum_{i<n} (|x_i| - 1), effective degrees.
int cyclic_degree(const CurvedCategory& d, const Word& w);

// Terms of b(w) with total weight <= p.  `raises` is true for the curvature
// insertions, false for the mu-terms.
using TermSink = std::function<void(const Word&, const mpq_class&, bool raises)>;
void hochschild_terms(const CurvedCategory& d, const Word& w, int p, const TermSink& emit);

// The reduced cyclic bar complex of D modulo weight p+1, assembled over `f`.
// Throws ConventionViolation if d∘d != 0.
HochschildComplex hochschild_complex(const CurvedCategory& d, int p, Field f);

// Betti numbers of the complex truncated at weight p, homological degrees.
BettiRow truncated_hochschild_betti(const CurvedCategory& d, int p, Field f);
// Rows for every p = 0..pmax from one assembly.
std::map<int, BettiRow> hochschild_betti_table(const CurvedCategory& d, int pmax, Field f);

// Nonzero entries of a cohomological dimension map, degrees negated.
BettiRow to_homological(const std::map<int, std::size_t>& cohomological);

struct E1Page {
  int max_weight = 0;
  // weight -> homological degree -> dim E^1
  std::map<int, BettiRow> e1;
  // (weight w, homological degree n) -> rank of d^1 : E^1(w, n) -> E^1(w + 1, n - 1)
  std::map<std::pair<int, int>, std::size_t> d1_rank;
  // Only weights 0..max_weight-1, whose outgoing d^1 is fully computed.
  std::map<int, BettiRow> e2;
};

// Homology of the weight-graded pieces and the map induced between them by
// the curvature insertions.
E1Page e1_page(const CurvedCategory& d, int p, Field f);

// Rank of the map induced on cohomology by a chain map f : C -> C'[1],
// given f: C^k -> C'^{k+1}, d: C^k -> C^{k+1} and d': C'^k -> C'^{k+1}.
std::size_t induced_rank(const SparseMatrix& f, const SparseMatrix& d, const SparseMatrix& d_prime);

}  // namespace curvedhh

#endif  // CURVEDHH_HOCHSCHILD_HPP
