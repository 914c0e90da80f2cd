#ifndef CURVEDHH_BIMODULE_HPP
#define CURVEDHH_BIMODULE_HPP

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvedhh/category.hpp"

namespace curvedhh {

/*
 * A finite A-infinity bimodule Q over a category A.  A generator of Q is
 * drawn like a morphism from `source` to `target`, so an input tuple
 * (a_r, ..., a_1, q, a'_s, ..., a'_1) is composable exactly as a tuple of
 * morphisms would be.  Terms in combinations refer to Q-generator indices.
 *
 * Units act implicitly: mu(e, q) = (-1)^{|q|} q, mu(q, e) = q, and every
 * other action with a unit among the inputs vanishes.
 */
class Bimodule {
 public:
  explicit Bimodule(std::shared_ptr<const AInftyCategory> base);

  const AInftyCategory& base() const noexcept { return *base_; }
  std::shared_ptr<const AInftyCategory> base_ptr() const noexcept { return base_; }

  int add_generator(std::string name, int source, int target, int degree);
  // Adds coeff * output to mu^{r|1|s}(left, q, right); the degree rule is
  // |out| = sum of input degrees + 1 - r - s.
  void add_action(const std::vector<int>& left, int q, const std::vector<int>& right, int output, const mpq_class& coeff);

  int generator_count() const noexcept { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const Generator& generator(int q) const { return gens_.at(static_cast<std::size_t>(q)); }
  std::optional<int> find_generator(std::string_view name) const;

  struct Action {
    std::vector<int> left;
    int q;
    std::vector<int> right;
    Combination output;
  };
  // Explicit actions in a deterministic order.
  std::vector<Action> actions() const;

  Combination act(std::span<const int> left, int q, std::span<const int> right) const;

 private:
  static std::vector<int> key(std::span<const int> left, int q, std::span<const int> right);

  std::shared_ptr<const AInftyCategory> base_;
  std::vector<Generator> gens_;
  std::unordered_map<std::vector<int>, Combination, VectorHash> actions_;
};

// The extension A ⊕ Q: mu_A on tuples from A, the Q-action on tuples with a
// single entry from Q, zero otherwise.  Generator names must not clash.
AInftyCategory trivial_extension(const AInftyCategory& a, const Bimodule& q);

// Bimodule relations, checked on the trivial extension for tuples with
// exactly one Q-entry.
ValidationReport check_bimodule(const Bimodule& q);
// Throws RelationViolation on failure.
ValidationReport validate_bimodule(const Bimodule& q);

// Q[n]: degrees drop by n, mu(a_r..a_1, q, ...) picks up (-1)^{n (||a_1|| + ... + ||a_r||)}.
Bimodule shift_bimodule(const Bimodule& q, int n);

// A^∨ with A^∨(X_i, X_j) dual to hom_A(X_j, X_i) in negated degrees.  The
// generator dual to c is named c + "^v".  If mu_A(a'_s..a'_1, c', a_r..a_1)
// has coefficient k on c then mu(a_r..a_1, c^v, a'_s..a'_1) has coefficient
// (-1)^{|c|} k on c'^v.
Bimodule dual_bimodule(std::shared_ptr<const AInftyCategory> a);

// B/A as an A-bimodule, where A is a subcategory of B matched by generator
// names.  Q-generators keep their B names.
Bimodule quotient_bimodule(const AInftyCategory& b, std::shared_ptr<const AInftyCategory> a);

}  // namespace curvedhh

#endif  // CURVEDHH_BIMODULE_HPP
