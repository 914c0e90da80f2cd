#ifndef CURVEDHH_CATEGORY_HPP
#define CURVEDHH_CATEGORY_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "curvedhh/scalar.hpp"

namespace curvedhh {

// A basis element of hom(source, target), cohomologically graded.
struct Generator {
  std::string name;
  int source = 0;
  int target = 0;
  int degree = 0;
};

struct Term {
  int gen;
  mpq_class coeff;
};

// Sorted by generator, no zero coefficients.
using Combination = std::vector<Term>;

// Adds coeff * gen to c, keeping it normalised.
void accumulate(Combination& c, int gen, const mpq_class& coeff);
Combination normalized(Combination c);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/*
 * A finite A-infinity category given by explicit structure constants.
 *
 * Inputs are always listed as written, mu^n(a_n, ..., a_1): index 0 is the
 * last morphism applied and the back of the vector is applied first.  A tuple
 * is composable when source(inputs[k]) == target(inputs[k+1]).
 *
 * Strict units are implicit: a designated unit e_X never appears in the
 * explicit table, and mu() supplies
 *
 *     mu^1(e) = 0,   mu^2(e, a) = (-1)^{|a|} a,   mu^2(a, e) = a,
 *
 * with every higher mu^n vanishing on tuples that contain a unit.
 */
class AInftyCategory {
 public:
  using ProductTable = std::unordered_map<std::vector<int>, Combination, VectorHash>;

  AInftyCategory() = default;
  explicit AInftyCategory(Field f) : field_(f) {}

  int add_object(std::string label);
  // Names are unique across the whole category.
  int add_generator(std::string name, int source, int target, int degree);
  void set_unit(int object, int gen);
  // Adds coeff * output to mu(inputs).  Checks composability, the degree rule
  // |mu^n(a_n..a_1)| = sum |a_i| + 2 - n, and that no unit is involved.
  void add_product(const std::vector<int>& inputs, int output, const mpq_class& coeff);
  void add_product(const std::vector<int>& inputs, const Combination& output);

  const Field& field() const noexcept { return field_; }
  void set_field(Field f) { field_ = f; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  int generator_count() const noexcept { return static_cast<int>(gens_.size()); }
  const Generator& generator(int g) const { return gens_.at(static_cast<std::size_t>(g)); }
  int degree(int g) const { return generator(g).degree; }
  std::optional<int> find_generator(std::string_view name) const;
  std::optional<int> find_object(std::string_view label) const;

  std::optional<int> unit(int object) const;
  bool is_unit(int gen) const;
  // Every object has a designated unit.
  bool is_unital() const;

  // Generators of hom(source, target), in insertion order.
  const std::vector<int>& hom_basis(int source, int target) const;
  // Generators with the given source, in insertion order.
  const std::vector<int>& outgoing(int source) const;

  const ProductTable& products() const noexcept { return products_; }
  // Explicit products sorted by input tuple, for deterministic iteration.
  std::vector<std::pair<std::vector<int>, Combination>> sorted_products() const;
  // Largest n with a nonzero mu^n (2 if only units compose, 0 if nothing does).
  int max_arity() const;

  bool composable(std::span<const int> inputs) const;
  // mu^n on a composable tuple of generators, units included.
  Combination mu(std::span<const int> inputs) const;

 private:
  Field field_ = Field::rationals();
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Generator> gens_;
  std::vector<std::optional<int>> units_;
  std::vector<bool> is_unit_;
  std::map<std::pair<int, int>, std::vector<int>> hom_;
  std::vector<std::vector<int>> outgoing_;
  ProductTable products_;
  int explicit_arity_ = 0;
};

// Applied-order chains: every composable sequence of `length` generators drawn
// from `allowed` whose first-applied element starts at `start`.  Returned as
// written (index 0 = last applied).
std::vector<std::vector<int>> chains_from(const AInftyCategory& c, int start, int length,
                                          const std::function<bool(int)>& allowed);
// Chains of `length` generators ending at `end`.
std::vector<std::vector<int>> chains_to(const AInftyCategory& c, int end, int length,
                                        const std::function<bool(int)>& allowed);

struct ValidationReport {
  bool ok = true;
  int max_arity_checked = 0;
  std::size_t tuples_checked = 0;
  std::vector<int> failing_tuple;  // as written
  Combination residual;
  std::string message;
};

// Checks the A-infinity relations
//   sum (-1)^{||a_1||+...+||a_i||} mu(a_n,...,a_{i+j+1}, mu(a_{i+j},...,a_{i+1}), a_i,...,a_1) = 0
// with ||a|| = |a| - 1, on every composable basis tuple of length up to
// 2 * max_arity - 1.  `filter` (optional) restricts which tuples are checked.
ValidationReport check_ainfty(const AInftyCategory& c,
                              const std::function<bool(std::span<const int>)>& filter = {});

// As check_ainfty, but throws RelationViolation on the first failing tuple.
ValidationReport validate_ainfty(const AInftyCategory& c);

std::string describe_tuple(const AInftyCategory& c, std::span<const int> tuple);
std::string describe_combination(const AInftyCategory& c, const Combination& comb);

}  // namespace curvedhh

#endif  // CURVEDHH_CATEGORY_HPP
