#include "curvedhh/examples.hpp"

#include "curvedhh/bimodule.hpp"
#include "curvedhh/constructions.hpp"
#include "curvedhh/errors.hpp"

namespace curvedhh {

namespace {

std::string obj(int j) { return "X" + std::to_string(j); }

}  // namespace

ExamplePair gen_am_quiver(int m, int d, Field f) {
  if (m < 1) throw ConfigurationError("am-quiver needs m >= 1");
  auto a = std::make_shared<AInftyCategory>(f);
  a->set_name("am-quiver(m=" + std::to_string(m) + ",d=" + std::to_string(d) + ")");
  for (int j = 1; j <= m; ++j) a->add_object(obj(j));
  for (int j = 0; j < m; ++j) a->set_unit(j, a->add_generator("e" + std::to_string(j + 1), j, j, 0));
  for (int j = 0; j + 1 < m; ++j) a->add_generator("a" + std::to_string(j + 1), j, j + 1, 0);

  const auto q = shift_bimodule(dual_bimodule(a), 1 - d);
  auto b = std::make_shared<AInftyCategory>(trivial_extension(*a, q));
  ExamplePair out{a->name(), a, b, d, {}};
  out.notes = {"A: A_m chain, arrows in degree 0, compositions of two arrows vanish",
               "B: trivial extension of A by its dual shifted by 1-d"};
  return out;
}

ExamplePair gen_branched_cover(int m, Field f) {
  if (m < 2) throw ConfigurationError("branched-cover needs m >= 2");
  auto b = std::make_shared<AInftyCategory>(f);
  b->set_name("branched-cover(m=" + std::to_string(m) + ")");
  for (int j = 1; j <= m; ++j) b->add_object(obj(j));
  // e_j = idempotent sum over both points of L_j, q_j = idempotent at p_{j-1}.
  std::vector<int> e, q, fwd, back;
  for (int j = 0; j < m; ++j) {
    e.push_back(b->add_generator("e" + std::to_string(j + 1), j, j, 0));
    b->set_unit(j, e.back());
    q.push_back(b->add_generator("q" + std::to_string(j + 1), j, j, 0));
  }
  // L_j ∩ L_{j+1} = {p_j}: one morphism each way.
  for (int j = 0; j + 1 < m; ++j) {
    fwd.push_back(b->add_generator("a" + std::to_string(j + 1), j, j + 1, 0));
    back.push_back(b->add_generator("b" + std::to_string(j + 1), j + 1, j, 0));
  }
  const mpq_class one(1);
  for (int j = 0; j < m; ++j) b->add_product({q[j], q[j]}, q[j], one);
  for (int j = 0; j + 1 < m; ++j) {
    // p_j is the second point of L_j and the first point of L_{j+1}.
    b->add_product({back[j], fwd[j]}, e[j], one);
    b->add_product({back[j], fwd[j]}, q[j], -one);
    b->add_product({fwd[j], back[j]}, q[j + 1], one);
    b->add_product({q[j + 1], fwd[j]}, fwd[j], one);
    b->add_product({back[j], q[j + 1]}, back[j], one);
  }
  auto a = std::make_shared<AInftyCategory>(directed_subcategory(*b));
  ExamplePair out{b->name(), a, b, 1, {}};
  out.notes = {"fibre: m+1 points p_0..p_m, L_j = {p_{j-1}, p_j}",
               "hom(L_j, L_k) = functions on L_j ∩ L_k, composition = pointwise product",
               "all generators in degree 0 (object shifts cancel in cyclic words)"};
  return out;
}

ExamplePair gen_two_spheres(int d, Field f) {
  if (d < 1) throw ConfigurationError("two-spheres needs d >= 1");
  auto b = std::make_shared<AInftyCategory>(f);
  b->set_name("two-spheres(d=" + std::to_string(d) + ")");
  b->add_object("X1");
  b->add_object("X2");
  const int top = d - 1;
  // Basis E_kl ⊗ {1, x} of Mat_2(K[x]/x^2), |x| = d - 1.
  struct Entry {
    int gen, from, to, x;
  };
  std::vector<Entry> basis;
  const char* names[2][2][2] = {{{"e1", "x1"}, {"f", "g"}}, {{"fp", "gp"}, {"e2", "x2"}}};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int x = 0; x < 2; ++x)
        basis.push_back({b->add_generator(names[s][t][x], s, t, x * top), s, t, x});
  b->set_unit(0, basis[0].gen);
  b->set_unit(1, basis[6].gen);
  for (const auto& first : basis)
    for (const auto& second : basis) {
      if (first.to != second.from || first.x + second.x > 1) continue;
      if (b->is_unit(first.gen) || b->is_unit(second.gen)) continue;
      const int x = first.x + second.x;
      int out = -1;
      for (const auto& e : basis)
        if (e.from == first.from && e.to == second.to && e.x == x) out = e.gen;
      // mu^2(y, x) = (-1)^{|x|} y x
      const int sign = (first.x * top) % 2 ? -1 : 1;
      b->add_product({second.gen, first.gen}, out, mpq_class(sign));
    }
  auto a = std::make_shared<AInftyCategory>(directed_subcategory(*b));
  ExamplePair out{b->name(), a, b, d, {}};
  out.notes = {"B = Mat_2(H^*(S^{d-1})): two copies of the same sphere, perturbed to meet in two points",
               "f, g : X1 -> X2 and fp, gp : X2 -> X1 in degrees 0 and d-1"};
  return out;
}

ExamplePair gen_empty(Field f) {
  auto b = std::make_shared<AInftyCategory>(f);
  b->set_name("empty");
  auto a = std::make_shared<AInftyCategory>(f);
  a->set_name("empty");
  return ExamplePair{"empty", a, b, 0, {"no objects"}};
}

std::vector<std::string> example_names() { return {"am-quiver", "branched-cover", "two-spheres", "empty"}; }

ExamplePair generate_example(const std::string& name, int m, int d, Field f) {
  if (name == "am-quiver") return gen_am_quiver(m, d, f);
  if (name == "branched-cover") return gen_branched_cover(m, f);
  if (name == "two-spheres") return gen_two_spheres(d, f);
  if (name == "empty") return gen_empty(f);
  throw ConfigurationError("unknown example '" + name + "'");
}

}  // namespace curvedhh
