#include "curvedhh/category.hpp"

#include <algorithm>
#include <sstream>

#include "curvedhh/errors.hpp"

namespace curvedhh {

void accumulate(Combination& c, int gen, const mpq_class& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = std::lower_bound(c.begin(), c.end(), gen, [](const Term& t, int g) { return t.gen < g; });
  if (it != c.end() && it->gen == gen) {
    it->coeff += coeff;
    if (sgn(it->coeff) == 0) c.erase(it);
  } else {
    c.insert(it, Term{gen, coeff});
  }
}

Combination normalized(Combination c) {
  Combination out;
  for (auto& t : c) accumulate(out, t.gen, t.coeff);
  return out;
}

std::size_t VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int AInftyCategory::add_object(std::string label) {
  if (find_object(label)) throw ValidationError("duplicate object label '" + label + "'");
  objects_.push_back(std::move(label));
  units_.emplace_back();
  outgoing_.emplace_back();
  return object_count() - 1;
}

int AInftyCategory::add_generator(std::string name, int source, int target, int degree) {
  if (source < 0 || source >= object_count() || target < 0 || target >= object_count())
    throw ValidationError("generator '" + name + "' refers to an unknown object");
  if (find_generator(name)) throw ValidationError("duplicate generator name '" + name + "'");
  gens_.push_back(Generator{std::move(name), source, target, degree});
  is_unit_.push_back(false);
  const int g = generator_count() - 1;
  hom_[{source, target}].push_back(g);
  outgoing_[static_cast<std::size_t>(source)].push_back(g);
  return g;
}

void AInftyCategory::set_unit(int object, int gen) {
  const auto& g = generator(gen);
  if (g.source != object || g.target != object || g.degree != 0)
    throw DegreeError("unit '" + g.name + "' must be a degree-0 endomorphism of " + objects_.at(static_cast<std::size_t>(object)));
  if (units_.at(static_cast<std::size_t>(object)))
    throw ValidationError("object " + objects_[static_cast<std::size_t>(object)] + " already has a unit");
  for (const auto& [inputs, out] : products_)
    if (std::find(inputs.begin(), inputs.end(), gen) != inputs.end())
      throw ValidationError("unit '" + g.name + "' already appears in an explicit product");
  units_[static_cast<std::size_t>(object)] = gen;
  is_unit_[static_cast<std::size_t>(gen)] = true;
}

std::optional<int> AInftyCategory::find_generator(std::string_view name) const {
  for (int g = 0; g < generator_count(); ++g)
    if (gens_[static_cast<std::size_t>(g)].name == name) return g;
  return std::nullopt;
}

std::optional<int> AInftyCategory::find_object(std::string_view label) const {
  for (int o = 0; o < object_count(); ++o)
    if (objects_[static_cast<std::size_t>(o)] == label) return o;
  return std::nullopt;
}

std::optional<int> AInftyCategory::unit(int object) const { return units_.at(static_cast<std::size_t>(object)); }

bool AInftyCategory::is_unit(int gen) const { return is_unit_.at(static_cast<std::size_t>(gen)); }

bool AInftyCategory::is_unital() const {
  return std::all_of(units_.begin(), units_.end(), [](const auto& u) { return u.has_value(); });
}

const std::vector<int>& AInftyCategory::hom_basis(int source, int target) const {
  static const std::vector<int> none;
  auto it = hom_.find({source, target});
  return it == hom_.end() ? none : it->second;
}

const std::vector<int>& AInftyCategory::outgoing(int source) const {
  return outgoing_.at(static_cast<std::size_t>(source));
}

bool AInftyCategory::composable(std::span<const int> inputs) const {
  for (std::size_t k = 0; k + 1 < inputs.size(); ++k)
    if (generator(inputs[k]).source != generator(inputs[k + 1]).target) return false;
  return true;
}

void AInftyCategory::add_product(const std::vector<int>& inputs, int output, const mpq_class& coeff) {
  if (inputs.empty()) throw DegreeError("mu^0 is not part of an uncurved category");
  for (int g : inputs) generator(g);
  const auto& out = generator(output);
  if (!composable(inputs)) throw DegreeError("inputs " + describe_tuple(*this, inputs) + " are not composable");
  if (out.source != generator(inputs.back()).source || out.target != generator(inputs.front()).target)
    throw DegreeError("output '" + out.name + "' does not connect the endpoints of " + describe_tuple(*this, inputs));
  int expected = 2 - static_cast<int>(inputs.size());
  for (int g : inputs) expected += degree(g);
  if (out.degree != expected)
    throw DegreeError("mu" + describe_tuple(*this, inputs) + " -> " + out.name + " violates the degree rule (expected degree " +
                      std::to_string(expected) + ", output has degree " + std::to_string(out.degree) + ")");
  for (int g : inputs)
    if (is_unit(g))
      throw ValidationError("products involving the unit '" + generator(g).name + "' are implied and may not be listed");
  if (sgn(coeff) == 0) return;
  auto& comb = products_[inputs];
  accumulate(comb, output, coeff);
  if (comb.empty()) products_.erase(inputs);
  explicit_arity_ = 0;
  for (const auto& [in, c] : products_) explicit_arity_ = std::max(explicit_arity_, static_cast<int>(in.size()));
}

void AInftyCategory::add_product(const std::vector<int>& inputs, const Combination& output) {
  for (const auto& t : output) add_product(inputs, t.gen, t.coeff);
}

std::vector<std::pair<std::vector<int>, Combination>> AInftyCategory::sorted_products() const {
  std::vector<std::pair<std::vector<int>, Combination>> out(products_.begin(), products_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

int AInftyCategory::max_arity() const {
  int a = explicit_arity_;
  for (const auto& u : units_)
    if (u) a = std::max(a, 2);
  return a;
}

Combination AInftyCategory::mu(std::span<const int> inputs) const {
  if (inputs.empty() || !composable(inputs)) return {};
  const bool has_unit = std::any_of(inputs.begin(), inputs.end(), [&](int g) { return is_unit(g); });
  if (has_unit) {
    if (inputs.size() != 2) return {};
    if (is_unit(inputs[0])) {
      const int a = inputs[1];
      return {Term{a, mpq_class(degree(a) % 2 == 0 ? 1 : -1)}};
    }
    return {Term{inputs[0], mpq_class(1)}};
  }
  auto it = products_.find(std::vector<int>(inputs.begin(), inputs.end()));
  if (it == products_.end()) return {};
  return it->second;
}

namespace {

void extend_chains(const AInftyCategory& c, std::vector<int>& applied, int at, int remaining,
                   const std::function<bool(int)>& allowed, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.emplace_back(applied.rbegin(), applied.rend());
    return;
  }
  for (int g : c.outgoing(at)) {
    if (!allowed(g)) continue;
    applied.push_back(g);
    extend_chains(c, applied, c.generator(g).target, remaining - 1, allowed, out);
    applied.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> chains_from(const AInftyCategory& c, int start, int length,
                                          const std::function<bool(int)>& allowed) {
  std::vector<std::vector<int>> out;
  std::vector<int> applied;
  extend_chains(c, applied, start, length, allowed, out);
  return out;
}

std::vector<std::vector<int>> chains_to(const AInftyCategory& c, int end, int length,
                                        const std::function<bool(int)>& allowed) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < c.object_count(); ++s)
    for (auto& ch : chains_from(c, s, length, allowed)) {
      const int last = ch.empty() ? s : c.generator(ch.front()).target;
      if (last == end) out.push_back(std::move(ch));
    }
  if (length == 0) {
    out.clear();
    out.emplace_back();
  }
  return out;
}

namespace {

int reduced_parity(const AInftyCategory& c, int g) { return ((c.degree(g) - 1) % 2 + 2) % 2; }

Combination relation_residual(const AInftyCategory& c, const std::vector<int>& tuple) {
  const int n = static_cast<int>(tuple.size());
  Combination residual;
  std::vector<int> outer;
  for (int i = 0; i < n; ++i) {
    int sign = 0;
    for (int k = n - i; k < n; ++k) sign ^= reduced_parity(c, tuple[static_cast<std::size_t>(k)]);
    for (int j = 1; i + j <= n; ++j) {
      const int begin = n - i - j;
      std::span<const int> block(tuple.data() + begin, static_cast<std::size_t>(j));
      const Combination inner = c.mu(block);
      for (const auto& t : inner) {
        outer.assign(tuple.begin(), tuple.begin() + begin);
        outer.push_back(t.gen);
        outer.insert(outer.end(), tuple.begin() + n - i, tuple.end());
        for (const auto& u : c.mu(outer)) accumulate(residual, u.gen, (sign ? -1 : 1) * t.coeff * u.coeff);
      }
    }
  }
  return residual;
}

}  // namespace

ValidationReport check_ainfty(const AInftyCategory& c, const std::function<bool(std::span<const int>)>& filter) {
  ValidationReport report;
  const int top = std::max(1, 2 * c.max_arity() - 1);
  report.max_arity_checked = top;
  auto any = [](int) { return true; };
  for (int n = 1; n <= top; ++n) {
    for (int s = 0; s < c.object_count(); ++s) {
      for (const auto& tuple : chains_from(c, s, n, any)) {
        if (filter && !filter(tuple)) continue;
        ++report.tuples_checked;
        Combination r = relation_residual(c, tuple);
        if (!r.empty()) {
          report.ok = false;
          report.failing_tuple = tuple;
          report.residual = std::move(r);
          report.message = "A-infinity relation fails on " + describe_tuple(c, tuple) + ": residual " +
                           describe_combination(c, report.residual);
          return report;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_ainfty(const AInftyCategory& c) {
  auto report = check_ainfty(c);
  if (!report.ok) throw RelationViolation(report.message);
  return report;
}

std::string describe_tuple(const AInftyCategory& c, std::span<const int> tuple) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? ", " : "") << c.generator(tuple[i]).name;
  os << ')';
  return os.str();
}

std::string describe_combination(const AInftyCategory& c, const Combination& comb) {
  if (comb.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < comb.size(); ++i)
    os << (i ? " + " : "") << comb[i].coeff.get_str() << "*" << c.generator(comb[i].gen).name;
  return os.str();
}

}  // namespace curvedhh
