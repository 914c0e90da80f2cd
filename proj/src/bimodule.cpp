#include "curvedhh/bimodule.hpp"

#include <algorithm>

#include "curvedhh/errors.hpp"

namespace curvedhh {

namespace {

int parity(int k) { return ((k % 2) + 2) % 2; }

}  // namespace

Bimodule::Bimodule(std::shared_ptr<const AInftyCategory> base) : base_(std::move(base)) {
  if (!base_) throw ConfigurationError("bimodule needs a base category");
}

int Bimodule::add_generator(std::string name, int source, int target, int degree) {
  if (source < 0 || target < 0 || source >= base_->object_count() || target >= base_->object_count())
    throw ValidationError("bimodule generator '" + name + "' refers to an unknown object");
  if (find_generator(name) || base_->find_generator(name))
    throw ValidationError("duplicate generator name '" + name + "'");
  gens_.push_back(Generator{std::move(name), source, target, degree});
  return generator_count() - 1;
}

std::optional<int> Bimodule::find_generator(std::string_view name) const {
  for (int q = 0; q < generator_count(); ++q)
    if (gens_[static_cast<std::size_t>(q)].name == name) return q;
  return std::nullopt;
}

std::vector<int> Bimodule::key(std::span<const int> left, int q, std::span<const int> right) {
  std::vector<int> k;
  k.reserve(left.size() + right.size() + 2);
  k.push_back(static_cast<int>(left.size()));
  k.insert(k.end(), left.begin(), left.end());
  k.push_back(q);
  k.insert(k.end(), right.begin(), right.end());
  return k;
}

void Bimodule::add_action(const std::vector<int>& left, int q, const std::vector<int>& right, int output,
                          const mpq_class& coeff) {
  const auto& a = *base_;
  const auto& gq = generator(q);
  const auto& go = generator(output);
  auto describe = [&] {
    std::string s = "mu(";
    for (int g : left) s += a.generator(g).name + ", ";
    s += gq.name;
    for (int g : right) s += ", " + a.generator(g).name;
    return s + ")";
  };
  int src = gq.source, tgt = gq.target;
  int deg = gq.degree + 1 - static_cast<int>(left.size() + right.size());
  for (auto it = right.begin(); it != right.end(); ++it) {
    const auto& g = a.generator(*it);
    if (a.is_unit(*it)) throw ValidationError("unit actions are implied and may not be listed: " + describe());
    if (g.target != src) throw DegreeError(describe() + " is not composable");
    src = g.source;
    deg += g.degree;
  }
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    const auto& g = a.generator(*it);
    if (a.is_unit(*it)) throw ValidationError("unit actions are implied and may not be listed: " + describe());
    if (g.source != tgt) throw DegreeError(describe() + " is not composable");
    tgt = g.target;
    deg += g.degree;
  }
  if (go.source != src || go.target != tgt)
    throw DegreeError("output '" + go.name + "' of " + describe() + " has the wrong endpoints");
  if (go.degree != deg)
    throw DegreeError(describe() + " -> " + go.name + " violates the degree rule (expected " + std::to_string(deg) + ")");
  if (sgn(coeff) == 0) return;
  auto k = key(left, q, right);
  auto& c = actions_[k];
  accumulate(c, output, coeff);
  if (c.empty()) actions_.erase(k);
}

std::vector<Bimodule::Action> Bimodule::actions() const {
  std::vector<std::pair<std::vector<int>, Combination>> sorted(actions_.begin(), actions_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<Action> out;
  for (auto& [k, c] : sorted) {
    const auto r = static_cast<std::size_t>(k[0]);
    Action act;
    act.left.assign(k.begin() + 1, k.begin() + 1 + static_cast<long>(r));
    act.q = k[1 + r];
    act.right.assign(k.begin() + 2 + static_cast<long>(r), k.end());
    act.output = c;
    out.push_back(std::move(act));
  }
  return out;
}

Combination Bimodule::act(std::span<const int> left, int q, std::span<const int> right) const {
  const auto& a = *base_;
  const bool unit_left = std::any_of(left.begin(), left.end(), [&](int g) { return a.is_unit(g); });
  const bool unit_right = std::any_of(right.begin(), right.end(), [&](int g) { return a.is_unit(g); });
  if (unit_left || unit_right) {
    if (left.size() + right.size() != 1) return {};
    if (!left.empty()) return {Term{q, mpq_class(parity(generator(q).degree) ? -1 : 1)}};
    return {Term{q, mpq_class(1)}};
  }
  auto it = actions_.find(key(left, q, right));
  if (it == actions_.end()) return {};
  return it->second;
}

AInftyCategory trivial_extension(const AInftyCategory& a, const Bimodule& q) {
  AInftyCategory b(a.field());
  b.set_name(a.name());
  for (const auto& o : a.objects()) b.add_object(o);
  for (const auto& g : a.generators()) b.add_generator(g.name, g.source, g.target, g.degree);
  const int shift = a.generator_count();
  for (const auto& g : q.generators()) b.add_generator(g.name, g.source, g.target, g.degree);
  for (int o = 0; o < a.object_count(); ++o)
    if (auto u = a.unit(o)) b.set_unit(o, *u);
  for (const auto& [inputs, out] : a.sorted_products()) b.add_product(inputs, out);
  for (const auto& act : q.actions()) {
    std::vector<int> inputs = act.left;
    inputs.push_back(act.q + shift);
    inputs.insert(inputs.end(), act.right.begin(), act.right.end());
    for (const auto& t : act.output) b.add_product(inputs, t.gen + shift, t.coeff);
  }
  return b;
}

ValidationReport check_bimodule(const Bimodule& q) {
  const auto ext = trivial_extension(q.base(), q);
  const int first_q = q.base().generator_count();
  return check_ainfty(ext, [first_q](std::span<const int> tuple) {
    return std::count_if(tuple.begin(), tuple.end(), [first_q](int g) { return g >= first_q; }) == 1;
  });
}

ValidationReport validate_bimodule(const Bimodule& q) {
  auto report = check_bimodule(q);
  if (!report.ok) throw RelationViolation("bimodule " + report.message);
  return report;
}

Bimodule shift_bimodule(const Bimodule& q, int n) {
  Bimodule out(q.base_ptr());
  for (const auto& g : q.generators()) out.add_generator(g.name, g.source, g.target, g.degree - n);
  const auto& a = q.base();
  for (const auto& act : q.actions()) {
    int left = 0;
    for (int g : act.left) left += a.degree(g) - 1;
    const int sign = parity(n) && parity(left) ? -1 : 1;
    for (const auto& t : act.output) out.add_action(act.left, act.q, act.right, t.gen, sign * t.coeff);
  }
  return out;
}

Bimodule dual_bimodule(std::shared_ptr<const AInftyCategory> a) {
  Bimodule out(a);
  const auto& cat = *a;
  std::vector<int> dual(static_cast<std::size_t>(cat.generator_count()));
  for (int g = 0; g < cat.generator_count(); ++g) {
    const auto& x = cat.generator(g);
    dual[static_cast<std::size_t>(g)] = out.add_generator(x.name + "^v", x.target, x.source, -x.degree);
  }
  // mu_A(a'_s..a'_1, c', a_r..a_1) = k c  gives  mu(a_r..a_1, c^v, a'_s..a'_1) = (-1)^{|c|} k c'^v.
  auto emit = [&](const std::vector<int>& inputs, const Combination& out_comb) {
    for (std::size_t pos = 0; pos < inputs.size(); ++pos) {
      const int cp = inputs[pos];
      std::vector<int> right(inputs.begin(), inputs.begin() + static_cast<long>(pos));
      std::vector<int> left(inputs.begin() + static_cast<long>(pos) + 1, inputs.end());
      if (std::any_of(left.begin(), left.end(), [&](int g) { return cat.is_unit(g); })) continue;
      if (std::any_of(right.begin(), right.end(), [&](int g) { return cat.is_unit(g); })) continue;
      for (const auto& t : out_comb) {
        const bool odd = parity(cat.degree(t.gen));
        out.add_action(left, dual[static_cast<std::size_t>(t.gen)], right, dual[static_cast<std::size_t>(cp)],
                       odd ? -t.coeff : t.coeff);
      }
    }
  };
  for (const auto& [inputs, comb] : cat.sorted_products()) emit(inputs, comb);
  for (int g = 0; g < cat.generator_count(); ++g) {
    if (cat.is_unit(g)) continue;
    const auto& x = cat.generator(g);
    const int es = *cat.unit(x.source), et = *cat.unit(x.target);
    emit({g, es}, cat.mu(std::vector<int>{g, es}));
    emit({et, g}, cat.mu(std::vector<int>{et, g}));
  }
  return out;
}


Bimodule quotient_bimodule(const AInftyCategory& b, std::shared_ptr<const AInftyCategory> a) {
  const auto& cat = *a;
  if (cat.objects() != b.objects()) throw ValidationError("quotient needs A and B on the same objects");
  std::vector<int> b_to_a(static_cast<std::size_t>(b.generator_count()), -1);
  for (int g = 0; g < cat.generator_count(); ++g) {
    const auto& x = cat.generator(g);
    auto gb = b.find_generator(x.name);
    if (!gb) throw ValidationError("A is not a subcategory of B: '" + x.name + "' is missing");
    const auto& y = b.generator(*gb);
    if (y.source != x.source || y.target != x.target || y.degree != x.degree)
      throw ValidationError("A is not a subcategory of B: '" + x.name + "' differs");
    b_to_a[static_cast<std::size_t>(*gb)] = g;
  }
  for (int o = 0; o < cat.object_count(); ++o) {
    auto ua = cat.unit(o), ub = b.unit(o);
    if (ua.has_value() != ub.has_value() || (ua && b_to_a[static_cast<std::size_t>(*ub)] != *ua))
      throw ValidationError("A and B have different units at " + cat.objects()[static_cast<std::size_t>(o)]);
  }
  Bimodule q(a);
  std::vector<int> b_to_q(static_cast<std::size_t>(b.generator_count()), -1);
  for (int g = 0; g < b.generator_count(); ++g) {
    if (b_to_a[static_cast<std::size_t>(g)] >= 0) continue;
    const auto& x = b.generator(g);
    b_to_q[static_cast<std::size_t>(g)] = q.add_generator(x.name, x.source, x.target, x.degree);
  }
  for (const auto& [inputs, out] : b.sorted_products()) {
    int qpos = -1, count = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      if (b_to_q[static_cast<std::size_t>(inputs[i])] >= 0) {
        qpos = static_cast<int>(i);
        ++count;
      }
    if (count == 0) {
      for (const auto& t : out)
        if (b_to_a[static_cast<std::size_t>(t.gen)] < 0)
          throw ValidationError("A is not a subcategory of B: mu" + describe_tuple(b, inputs) + " leaves A");
      continue;
    }
    if (count != 1) continue;
    std::vector<int> left, right;
    for (int i = 0; i < qpos; ++i) left.push_back(b_to_a[static_cast<std::size_t>(inputs[static_cast<std::size_t>(i)])]);
    for (std::size_t i = static_cast<std::size_t>(qpos) + 1; i < inputs.size(); ++i)
      right.push_back(b_to_a[static_cast<std::size_t>(inputs[i])]);
    const int qg = b_to_q[static_cast<std::size_t>(inputs[static_cast<std::size_t>(qpos)])];
    for (const auto& t : out)
      if (b_to_q[static_cast<std::size_t>(t.gen)] >= 0)
        q.add_action(left, qg, right, b_to_q[static_cast<std::size_t>(t.gen)], t.coeff);
  }
  return q;
}

}  // namespace curvedhh
