#include "curvedhh/cyclic.hpp"

#include <algorithm>
#include <functional>

namespace curvedhh {

namespace {

int parity(int k) { return ((k % 2) + 2) % 2; }

}  // namespace

std::size_t DonaldsonWordHash::operator()(const DonaldsonWord& w) const noexcept {
  return VectorHash{}(w.tail) ^ (static_cast<std::size_t>(w.b) * 0x9e3779b97f4a7c15ull);
}

DonaldsonComplex donaldson_complex(const AInftyCategory& a, const AInftyCategory& b, int d, Field f) {
  std::vector<bool> plus(static_cast<std::size_t>(b.generator_count()), false);
  for (int g = 0; g < a.generator_count(); ++g) {
    if (a.is_unit(g)) continue;
    const auto& x = a.generator(g);
    auto gb = b.find_generator(x.name);
    if (!gb) throw ValidationError("generator '" + x.name + "' of A is missing from B");
    if (x.source >= x.target) throw ValidationError("A is not directed: '" + x.name + "'");
    plus[static_cast<std::size_t>(*gb)] = true;
  }
  auto in_plus = [&](int g) { return plus[static_cast<std::size_t>(g)]; };
  auto par = [&](int g) { return parity(b.degree(g) - 1); };

  std::vector<DonaldsonComplex::Basis> basis;
  std::vector<int> tail;
  std::function<void(int)> extend = [&](int head) {
    const int at = tail.empty() ? b.generator(head).source : b.generator(tail.back()).source;
    if (at == b.generator(head).target) {
      int deg = b.degree(head) - d;
      for (int g : tail) deg += b.degree(g) - 1;
      basis.push_back({DonaldsonWord{head, tail}, deg, 1});
    }
    for (int g = 0; g < b.generator_count(); ++g) {
      if (!in_plus(g) || b.generator(g).target != at) continue;
      tail.push_back(g);
      extend(head);
      tail.pop_back();
    }
  };
  for (int g = 0; g < b.generator_count(); ++g) extend(g);

  auto diff = [&](const DonaldsonWord& word, const DonaldsonComplex::Emit& emit) {
    std::vector<int> w{word.b};
    w.insert(w.end(), word.tail.begin(), word.tail.end());
    const int n = static_cast<int>(w.size()) - 1;
    // right[i] = ||x_0|| + ... + ||x_{i-1}||, x_i = w[n - i]
    std::vector<int> right(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n + 1; ++i)
      right[static_cast<std::size_t>(i)] = right[static_cast<std::size_t>(i) - 1] ^ par(w[static_cast<std::size_t>(n - i + 1)]);
    const int total = right[static_cast<std::size_t>(n) + 1];
    for (int i = 0; i <= n; ++i) {
      for (int j = 1; j <= n - i + 1; ++j) {
        const int lo = n - i - j + 1, hi = n - i;
        std::vector<int> block(w.begin() + lo, w.begin() + hi + 1);
        for (const auto& t : b.mu(block)) {
          if (lo > 0 && !in_plus(t.gen)) continue;
          std::vector<int> next(w.begin(), w.begin() + lo);
          next.push_back(t.gen);
          next.insert(next.end(), w.begin() + hi + 1, w.end());
          emit(DonaldsonWord{next.front(), std::vector<int>(next.begin() + 1, next.end())},
               right[static_cast<std::size_t>(i)] ? -t.coeff : t.coeff, false);
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      const int sr = right[static_cast<std::size_t>(i)], sl = total ^ sr;
      for (int j = 0; j <= n - i; ++j) {
        const int u = right[static_cast<std::size_t>(i + j)] ^ sr;
        std::vector<int> inputs(w.begin() + (n - i + 1), w.end());
        inputs.insert(inputs.end(), w.begin(), w.begin() + (n - i - j + 1));
        for (const auto& t : b.mu(inputs)) {
          std::vector<int> rest(w.begin() + (n - i - j + 1), w.begin() + (n - i + 1));
          emit(DonaldsonWord{t.gen, rest}, ((sr & sl) ^ u) ? -t.coeff : t.coeff, false);
        }
      }
    }
  };
  auto describe = [&](const DonaldsonWord& w) {
    std::string s = "[" + b.generator(w.b).name;
    for (int g : w.tail) s += " | " + b.generator(g).name;
    return s + "]";
  };
  DonaldsonComplex c(f, std::move(basis), diff, describe);
  c.check_square_zero(1);
  return c;
}

BettiRow donaldson_betti(const AInftyCategory& a, const AInftyCategory& b, int d, Field f) {
  return to_homological(homology_dims(donaldson_complex(a, b, d, f).truncation(1)));
}

CanonicalWord canonical_rotation(const CurvedCategory& d, const Word& w, std::uint32_t characteristic) {
  const std::size_t n = w.size();
  std::vector<int> par(n);
  for (std::size_t k = 0; k < n; ++k) par[k] = d.reduced_parity(w[k]);
  CanonicalWord best;
  bool have = false;
  Word rot;
  for (std::size_t r = 0; r < n; ++r) {
    // Move the r rightmost letters to the front.
    if (w[(n - r) % n].weight == 0) continue;
    rot.assign(w.end() - static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.end() - static_cast<long>(r));
    int moved = 0, rest = 0;
    for (std::size_t k = 0; k < n; ++k) (k >= n - r ? moved : rest) ^= par[k];
    const int sign = (moved & rest) ? -1 : 1;
    if (!have || rot < best.word) {
      best.word = rot;
      best.sign = sign;
      best.nonzero = true;
      have = true;
    } else if (rot == best.word && sign != best.sign && characteristic != 2) {
      best.nonzero = false;
    }
  }
  if (!have) throw ConventionViolation("cyclic word has no letter of positive weight");
  return best;
}

HochschildComplex connes_complex(const CurvedCategory& d, int p, Field f) {
  const auto ch = f.characteristic();
  std::vector<HochschildComplex::Basis> basis;
  for (auto& w : enumerate_cyclic_words(d, p)) {
    if (w.front().weight == 0) continue;
    if (!std::all_of(w.begin(), w.end(), [&](const Letter& x) { return d.in_d_plus(x); })) continue;
    const auto c = canonical_rotation(d, w, ch);
    if (c.word != w || !c.nonzero) continue;
    const int deg = cyclic_degree(d, w), wt = word_weight(w);
    basis.push_back({std::move(w), deg, wt});
  }
  auto diff = [&](const Word& w, const HochschildComplex::Emit& emit) {
    hochschild_terms(d, w, p, [&](const Word& out, const mpq_class& coeff, bool raises) {
      if (raises) return;
      const auto c = canonical_rotation(d, out, ch);
      if (c.nonzero) emit(c.word, c.sign * coeff, false);
    });
  };
  HochschildComplex c(f, std::move(basis), diff, [&](const Word& w) { return describe_word(d, w); });
  c.check_square_zero(p);
  return c;
}

ConnesResult connes_betti(const CurvedCategory& d, int p, Field f) {
  ConnesResult out{connes_complex(d, p, f), {}, std::nullopt};
  for (int w = 1; w <= p; ++w) out.betti[w] = to_homological(homology_dims(out.complex.graded_piece(w)));
  if (!f.is_rational())
    out.warning = "coinvariants over " + f.name() +
                  " need not compute cyclic homology; the identification assumes characteristic 0";
  return out;
}

}  // namespace curvedhh
