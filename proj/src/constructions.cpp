#include "curvedhh/constructions.hpp"

#include <algorithm>
#include <functional>

#include "curvedhh/errors.hpp"

namespace curvedhh {

AInftyCategory directed_subcategory(const AInftyCategory& b) {
  if (!b.is_unital()) throw ValidationError("directed subcategory needs a strictly unital category");
  AInftyCategory a(b.field());
  a.set_name(b.name());
  for (const auto& o : b.objects()) a.add_object(o);
  std::vector<int> to_a(static_cast<std::size_t>(b.generator_count()), -1);
  for (int g = 0; g < b.generator_count(); ++g) {
    const auto& x = b.generator(g);
    if (b.is_unit(g) || x.source < x.target) to_a[static_cast<std::size_t>(g)] = a.add_generator(x.name, x.source, x.target, x.degree);
  }
  for (int o = 0; o < b.object_count(); ++o) a.set_unit(o, to_a[static_cast<std::size_t>(*b.unit(o))]);
  for (const auto& [inputs, out] : b.sorted_products()) {
    std::vector<int> ia;
    for (int g : inputs) ia.push_back(to_a[static_cast<std::size_t>(g)]);
    if (std::find(ia.begin(), ia.end(), -1) != ia.end()) continue;
    for (const auto& t : out)
      if (to_a[static_cast<std::size_t>(t.gen)] >= 0) a.add_product(ia, to_a[static_cast<std::size_t>(t.gen)], t.coeff);
  }
  return a;
}

std::vector<int> augmentation_ideal(const AInftyCategory& a) {
  std::vector<int> out;
  for (int g = 0; g < a.generator_count(); ++g)
    if (!a.is_unit(g)) out.push_back(g);
  return out;
}

std::vector<TensorWord> tensor_algebra_basis(const AInftyCategory& a) {
  for (int g : augmentation_ideal(a)) {
    const auto& x = a.generator(g);
    if (x.source >= x.target)
      throw ValidationError("tensor algebra of a non-directed category is infinite ('" + x.name + "')");
  }
  std::vector<TensorWord> out;
  auto plus = [&a](int g) { return !a.is_unit(g); };
  for (int o = 0; o < a.object_count(); ++o) out.push_back(TensorWord{o, o, {}, 0});
  for (int len = 1; len < std::max(2, a.object_count()); ++len) {
    for (int s = 0; s < a.object_count(); ++s) {
      for (auto& w : chains_from(a, s, len, plus)) {
        TensorWord t{s, a.generator(w.front()).target, std::move(w), 0};
        for (int g : t.letters) t.degree += a.degree(g) - 1;
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace curvedhh
