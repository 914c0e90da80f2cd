#include "curvedhh/curved.hpp"

#include <algorithm>

#include "curvedhh/errors.hpp"

namespace curvedhh {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (const auto& x : w) {
    h ^= static_cast<std::size_t>(x.gen) * 31u + static_cast<std::size_t>(x.weight) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

int word_weight(const Word& w) {
  int s = 0;
  for (const auto& x : w) s += x.weight;
  return s;
}

CurvedCategory::CurvedCategory(std::shared_ptr<const AInftyCategory> a, std::shared_ptr<const AInftyCategory> b,
                               int truncation)
    : a_(std::move(a)), b_(std::move(b)), truncation_(truncation) {
  if (!a_ || !b_) throw ConfigurationError("curved category needs both A and B");
  if (truncation_ < 0) throw ConfigurationError("truncation level must be non-negative");
  if (a_->objects() != b_->objects()) throw ValidationError("A and B have different objects");
  if (!b_->is_unital()) throw ValidationError("B must be strictly unital");
  in_a_.assign(static_cast<std::size_t>(b_->generator_count()), false);
  for (int g = 0; g < a_->generator_count(); ++g) {
    const auto& ga = a_->generator(g);
    auto gb = b_->find_generator(ga.name);
    if (!gb) throw ValidationError("generator '" + ga.name + "' of A is missing from B");
    const auto& x = b_->generator(*gb);
    if (x.source != ga.source || x.target != ga.target || x.degree != ga.degree)
      throw ValidationError("generator '" + ga.name + "' differs between A and B");
    if (a_->is_unit(g) != b_->is_unit(*gb)) throw ValidationError("units of A and B disagree at '" + ga.name + "'");
    in_a_[static_cast<std::size_t>(*gb)] = true;
    a_to_b_.push_back(*gb);
  }
  for (int o = 0; o < b_->object_count(); ++o)
    if (!a_->unit(o)) throw ValidationError("A must contain the unit of every object");
  for (const auto& g : a_->generators())
    if (!a_->is_unit(*a_->find_generator(g.name)) && g.source >= g.target)
      throw ValidationError("A is not directed: '" + g.name + "' goes from " + a_->objects()[static_cast<std::size_t>(g.source)] +
                            " to " + a_->objects()[static_cast<std::size_t>(g.target)]);
  // mu_B restricted to A must land in A and agree with mu_A.
  for (const auto& [inputs, out] : a_->products()) {
    std::vector<int> ib;
    for (int g : inputs) ib.push_back(from_a(g));
    Combination expect;
    for (const auto& t : out) accumulate(expect, from_a(t.gen), t.coeff);
    const auto got = b_->mu(ib);
    if (got.size() != expect.size() ||
        !std::equal(got.begin(), got.end(), expect.begin(), [](const Term& x, const Term& y) {
          return x.gen == y.gen && x.coeff == y.coeff;
        }))
      throw ValidationError("A and B disagree on mu" + describe_tuple(*a_, inputs));
  }
  for (const auto& [inputs, out] : b_->products()) {
    if (!std::all_of(inputs.begin(), inputs.end(), [&](int g) { return in_a(g); })) continue;
    for (const auto& t : out)
      if (!in_a(t.gen)) throw ValidationError("A is not closed under mu" + describe_tuple(*b_, inputs));
    std::vector<int> ia;
    for (int g : inputs) ia.push_back(*a_->find_generator(b_->generator(g).name));
    if (a_->mu(ia).size() != out.size()) throw ValidationError("A and B disagree on mu" + describe_tuple(*b_, inputs));
  }
}

Letter CurvedCategory::curvature(int object) const { return Letter{*b_->unit(object), 1}; }

std::vector<Letter> CurvedCategory::letters(int max_weight) const {
  std::vector<Letter> out;
  for (int g = 0; g < b_->generator_count(); ++g)
    for (int w = 0; w <= max_weight; ++w)
      if (w > 0 || in_a(g)) out.push_back(Letter{g, w});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LetterTerm> CurvedCategory::mu(std::span<const Letter> inputs) const {
  std::vector<int> gens;
  int w = 0;
  gens.reserve(inputs.size());
  for (const auto& x : inputs) {
    gens.push_back(x.gen);
    w += x.weight;
  }
  std::vector<LetterTerm> out;
  for (const auto& t : b_->mu(gens)) out.push_back(LetterTerm{Letter{t.gen, w}, t.coeff});
  return out;
}

}  // namespace curvedhh
