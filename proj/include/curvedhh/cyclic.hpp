#ifndef CURVEDHH_CYCLIC_HPP
#define CURVEDHH_CYCLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvedhh/hochschild.hpp"

namespace curvedhh {

/*
 * Donaldson complex (B[d] ⊗ T(A_+[1]))^diag, built directly from the pair
 * (A, B).  Basis words are [b, a_k, ..., a_1] as written, b any generator of
 * B (units allowed), a_i in A_+, closing up cyclically.  The degree is
 * (|b| - d) + sum (|a_i| - 1).
 */
struct DonaldsonWord {
  int b = 0;                // generator of B
  std::vector<int> tail;    // generators of B lying in A_+
  friend auto operator<=>(const DonaldsonWord&, const DonaldsonWord&) = default;
};

struct DonaldsonWordHash {
  std::size_t operator()(const DonaldsonWord& w) const noexcept;
};

using DonaldsonComplex = WordComplex<DonaldsonWord, DonaldsonWordHash>;

DonaldsonComplex donaldson_complex(const AInftyCategory& a, const AInftyCategory& b, int d, Field f);
BettiRow donaldson_betti(const AInftyCategory& a, const AInftyCategory& b, int d, Field f);

/*
 * Reduced Connes complex: cyclic words with every letter in D_+, modulo the
 * signed rotation.  Each orbit is represented by its lexicographically least
 * rotation whose leftmost letter has positive weight.  Only weights >= 1
 * occur.
 */
struct CanonicalWord {
  Word word;
  int sign = 1;
  // False when a rotation fixes the word with sign -1 and the characteristic
  // is not 2, so the class vanishes.
  bool nonzero = true;
};

// Moving the r rightmost letters to the front costs (-1)^{(moved)(rest)} in
// reduced degrees.  Returns the canonical representative of w's orbit and
// the sign with w = sign * representative.
CanonicalWord canonical_rotation(const CurvedCategory& d, const Word& w, std::uint32_t characteristic);

struct ConnesResult {
  HochschildComplex complex;
  // weight -> homological degree -> dim
  std::map<int, BettiRow> betti;
  std::optional<std::string> warning;
};

HochschildComplex connes_complex(const CurvedCategory& d, int p, Field f);
ConnesResult connes_betti(const CurvedCategory& d, int p, Field f);

}  // namespace curvedhh

#endif  // CURVEDHH_CYCLIC_HPP
