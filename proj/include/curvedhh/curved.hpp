#ifndef CURVEDHH_CURVED_HPP
#define CURVEDHH_CURVED_HPP

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "curvedhh/category.hpp"

namespace curvedhh {

// A generator of B multiplied by t^weight.
struct Letter {
  int gen = 0;
  int weight = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct LetterTerm {
  Letter letter;
  mpq_class coeff;
};

/*
 * The t-adic curved category D built from a pair A ⊂ B.  Morphisms are
 * A ⊕ t B[[t]] truncated at weight P; mu is the t-linear extension of mu_B
 * and the curvature is t e_j on every object.  Letters refer to generators
 * of B, and `in_a` marks those that belong to A.
 */
class CurvedCategory {
 public:
  // Checks that a sits inside b: same objects and units, every generator of
  // a present in b (matched by name) with the same endpoints and degree, and
  // b's products of a-generators staying in a and agreeing with a's.
  CurvedCategory(std::shared_ptr<const AInftyCategory> a, std::shared_ptr<const AInftyCategory> b, int truncation);

  const AInftyCategory& a() const noexcept { return *a_; }
  const AInftyCategory& b() const noexcept { return *b_; }
  std::shared_ptr<const AInftyCategory> a_ptr() const noexcept { return a_; }
  std::shared_ptr<const AInftyCategory> b_ptr() const noexcept { return b_; }
  int truncation() const noexcept { return truncation_; }
  int object_count() const noexcept { return b_->object_count(); }

  bool in_a(int gen) const { return in_a_.at(static_cast<std::size_t>(gen)); }
  bool in_a_plus(int gen) const { return in_a(gen) && !b_->is_unit(gen); }
  // Weight-0 letters must come from A_+, positive weights may use all of B.
  bool in_d_plus(const Letter& x) const { return x.weight > 0 || in_a_plus(x.gen); }
  // Leftmost Hochschild slot: all of A at weight 0.
  bool leftmost_ok(const Letter& x) const { return x.weight > 0 || in_a(x.gen); }

  int source(const Letter& x) const { return b_->generator(x.gen).source; }
  int target(const Letter& x) const { return b_->generator(x.gen).target; }
  int degree(const Letter& x) const { return b_->degree(x.gen) + 2 * x.weight; }
  // ||x|| mod 2.
  int reduced_parity(const Letter& x) const { return ((degree(x) - 1) % 2 + 2) % 2; }
  Letter curvature(int object) const;

  // B-generator id of the a-generator with index g.
  int from_a(int a_gen) const { return a_to_b_.at(static_cast<std::size_t>(a_gen)); }

  // Letters available at weight <= max_weight, sorted.
  std::vector<Letter> letters(int max_weight) const;

  // t-linear mu on letters; weights add.  No truncation is applied.
  std::vector<LetterTerm> mu(std::span<const Letter> inputs) const;

 private:
  std::shared_ptr<const AInftyCategory> a_, b_;
  int truncation_;
  std::vector<bool> in_a_;
  std::vector<int> a_to_b_;
};

int word_weight(const Word& w);

}  // namespace curvedhh

#endif  // CURVEDHH_CURVED_HPP
