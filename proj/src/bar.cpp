#include "curvedhh/bar.hpp"

#include <algorithm>
#include <functional>

#include "curvedhh/constructions.hpp"

namespace curvedhh {

namespace {

int parity(int k) { return ((k % 2) + 2) % 2; }

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
  std::map<int, std::size_t> out;
  for (const auto& [k, n] : m)
    if (n) out[k] = n;
  return out;
}

// right[i] = parity of ||x_0|| + ... + ||x_{i-1}|| for a word given by the
// parities of its letters as written.
std::vector<int> right_sums(const std::vector<int>& par) {
  const std::size_t n = par.size();
  std::vector<int> right(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) right[i] = right[i - 1] ^ par[n - i];
  return right;
}

}  // namespace

std::size_t BarWordHash::operator()(const BarWord& w) const noexcept {
  return WordHash{}(w.letters) ^ (static_cast<std::size_t>(w.object) * 0x9e3779b97f4a7c15ull);
}

std::size_t SerreWordHash::operator()(const SerreWord& w) const noexcept {
  std::size_t h = VectorHash{}(w.left);
  h ^= VectorHash{}(w.right) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h ^ (static_cast<std::size_t>(w.q) << 17);
}

BarComplex bar_complex(const CurvedCategory& d, int p, Field f) {
  std::vector<std::vector<Letter>> by_source(static_cast<std::size_t>(d.object_count()));
  for (const auto& x : d.letters(p))
    if (d.in_d_plus(x)) by_source[static_cast<std::size_t>(d.source(x))].push_back(x);

  std::vector<BarComplex::Basis> basis;
  Word applied;
  std::function<void(int, int, int, int)> extend = [&](int start, int at, int weight, int degree) {
    basis.push_back({BarWord{start, Word(applied.rbegin(), applied.rend())}, degree, weight});
    for (const auto& y : by_source[static_cast<std::size_t>(at)]) {
      if (weight + y.weight > p) continue;
      applied.push_back(y);
      extend(start, d.target(y), weight + y.weight, degree + d.degree(y) - 1);
      applied.pop_back();
    }
  };
  for (int o = 0; o < d.object_count(); ++o) extend(o, o, 0, 0);

  auto diff = [&](const BarWord& bw, const BarComplex::Emit& emit) {
    const Word& w = bw.letters;
    const int n = static_cast<int>(w.size());
    std::vector<int> par(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) par[k] = d.reduced_parity(w[k]);
    const auto right = right_sums(par);
    BarWord next{bw.object, {}};
    for (int i = 0; i < n; ++i) {
      for (int j = 1; i + j <= n; ++j) {
        const int lo = n - i - j, hi = n - 1 - i;
        std::span<const Letter> block(w.data() + lo, static_cast<std::size_t>(j));
        for (const auto& t : d.mu(block)) {
          if (!d.in_d_plus(t.letter)) continue;
          next.letters.assign(w.begin(), w.begin() + lo);
          next.letters.push_back(t.letter);
          next.letters.insert(next.letters.end(), w.begin() + hi + 1, w.end());
          emit(next, right[static_cast<std::size_t>(i)] ? -t.coeff : t.coeff, false);
        }
      }
    }
    if (word_weight(w) + 1 > p) return;
    for (int i = 0; i <= n; ++i) {
      // Between x_i and x_{i-1}, i.e. in front of w[n - i].
      const int object = i < n ? d.source(w[static_cast<std::size_t>(n - 1 - i)]) : (n ? d.target(w.front()) : bw.object);
      next.letters.assign(w.begin(), w.begin() + (n - i));
      next.letters.push_back(d.curvature(object));
      next.letters.insert(next.letters.end(), w.begin() + (n - i), w.end());
      emit(next, right[static_cast<std::size_t>(i)] ? -1 : 1, true);
    }
  };
  auto describe = [&](const BarWord& w) {
    if (w.letters.empty()) return "[] at " + d.b().objects()[static_cast<std::size_t>(w.object)];
    return describe_word(d, w.letters);
  };
  BarComplex c(f, std::move(basis), diff, describe);
  c.check_square_zero(p);
  return c;
}

std::map<int, BettiRow> bar_betti_table(const CurvedCategory& d, int pmax, Field f) {
  const auto c = bar_complex(d, pmax, f);
  std::map<int, BettiRow> out;
  for (int p = 0; p <= pmax; ++p) out[p] = to_homological(homology_dims(c.truncation(p)));
  return out;
}

FiniteChainComplex simple_hom_complex(const AInftyCategory& a, Field f) {
  // Bar complex of T(A_+[1]); empty words are keyed as {-1 - object}.
  using Key = std::vector<int>;
  using Complex = WordComplex<Key, VectorHash>;
  std::vector<Complex::Basis> basis;
  for (const auto& t : tensor_algebra_basis(a))
    basis.push_back({t.letters.empty() ? Key{-1 - t.start} : t.letters, t.degree, 0});
  auto diff = [&](const Key& w, const Complex::Emit& emit) {
    if (w.size() == 1 && w[0] < 0) return;
    const int n = static_cast<int>(w.size());
    std::vector<int> par;
    for (int g : w) par.push_back(parity(a.degree(g) - 1));
    const auto right = right_sums(par);
    for (int i = 0; i < n; ++i)
      for (int j = 1; i + j <= n; ++j) {
        const int lo = n - i - j, hi = n - 1 - i;
        std::vector<int> block(w.begin() + lo, w.begin() + hi + 1);
        for (const auto& t : a.mu(block)) {
          if (a.is_unit(t.gen)) continue;
          Key next(w.begin(), w.begin() + lo);
          next.push_back(t.gen);
          next.insert(next.end(), w.begin() + hi + 1, w.end());
          emit(next, right[static_cast<std::size_t>(i)] ? -t.coeff : t.coeff, false);
        }
      }
  };
  auto describe = [&](const Key& w) {
    if (w.size() == 1 && w[0] < 0) return std::string("[]");
    return describe_tuple(a, w);
  };
  const Complex bar(f, std::move(basis), diff, describe);
  const auto c = bar.truncation(0);
  if (c.empty()) return FiniteChainComplex(f);
  // Dual: degree -k holds the dual of C^k; the differential into -k is d_k^T.
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> diffs;
  for (int k = c.max_degree(); k >= c.min_degree(); --k) dims.push_back(c.dim(k));
  for (int k = c.max_degree() - 1; k >= c.min_degree(); --k) diffs.push_back(c.differential(k).transpose());
  return FiniteChainComplex(f, -c.max_degree(), std::move(dims), std::move(diffs));
}

AcyclicityReport insert_a_subcomplex_check(const CurvedCategory& d, Field f) {
  AcyclicityReport report;
  const auto c = bar_complex(d, 1, f);
  auto keep = [&d](const BarComplex::Basis& b) {
    if (b.weight == 0) return true;
    if (b.weight != 1) return false;
    for (const auto& x : b.key.letters)
      if (x.weight == 1) return d.in_a(x.gen);
    return false;
  };
  report.closed = c.closed_under(keep);
  const auto sub = c.restriction(keep);
  if (!sub.empty())
    for (int k = sub.min_degree(); k <= sub.max_degree(); ++k)
      if (sub.dim(k)) report.chain_dims[k] = sub.dim(k);
  if (!report.closed) {
    report.acyclic = false;
    report.message = "the span of insert-a words is not preserved by the differential";
    return report;
  }
  report.homology = nonzero(homology_dims(sub));
  report.acyclic = report.homology.empty();
  if (!report.acyclic) {
    report.message = "insert-a cone has homology:";
    for (const auto& [k, n] : report.homology)
      report.message += " H^" + std::to_string(k) + " = " + std::to_string(n);
  }
  return report;
}

SerreComplex serre_step_complex(const Bimodule& q, Field f) {
  const auto& a = q.base();
  for (int g : augmentation_ideal(a))
    if (a.generator(g).source >= a.generator(g).target)
      throw ValidationError("serre step complex needs a directed category");
  auto plus = [&a](int g) { return !a.is_unit(g); };
  std::vector<SerreComplex::Basis> basis;
  const int longest = std::max(1, a.object_count());
  for (int g = 0; g < q.generator_count(); ++g) {
    const auto& x = q.generator(g);
    for (int rl = 0; rl < longest; ++rl)
      for (const auto& right : chains_to(a, x.source, rl, plus))
        for (int ll = 0; ll < longest; ++ll)
          for (const auto& left : chains_from(a, x.target, ll, plus)) {
            int deg = x.degree + 1;
            for (int y : left) deg += a.degree(y) - 1;
            for (int y : right) deg += a.degree(y) - 1;
            basis.push_back({SerreWord{left, g, right}, deg, 1});
          }
  }
  auto diff = [&](const SerreWord& w, const SerreComplex::Emit& emit) {
    // Tokens as written: left, q (as -1), right.
    std::vector<int> tokens = w.left;
    tokens.push_back(-1);
    tokens.insert(tokens.end(), w.right.begin(), w.right.end());
    const int n = static_cast<int>(tokens.size());
    const int qpos = static_cast<int>(w.left.size());
    std::vector<int> par;
    for (int t : tokens) par.push_back(parity((t < 0 ? q.generator(w.q).degree : a.degree(t)) - 1));
    const auto right = right_sums(par);
    for (int i = 0; i < n; ++i)
      for (int j = 1; i + j <= n; ++j) {
        const int lo = n - i - j, hi = n - 1 - i;
        const mpq_class sign = right[static_cast<std::size_t>(i)] ? -1 : 1;
        if (lo <= qpos && qpos <= hi) {
          std::vector<int> l(tokens.begin() + lo, tokens.begin() + qpos);
          std::vector<int> r(tokens.begin() + qpos + 1, tokens.begin() + hi + 1);
          for (const auto& t : q.act(l, w.q, r)) {
            SerreWord next{std::vector<int>(tokens.begin(), tokens.begin() + lo), t.gen,
                           std::vector<int>(tokens.begin() + hi + 1, tokens.end())};
            emit(next, sign * t.coeff, false);
          }
        } else {
          std::vector<int> block(tokens.begin() + lo, tokens.begin() + hi + 1);
          for (const auto& t : a.mu(block)) {
            if (a.is_unit(t.gen)) continue;
            std::vector<int> next(tokens.begin(), tokens.begin() + lo);
            next.push_back(t.gen);
            next.insert(next.end(), tokens.begin() + hi + 1, tokens.end());
            const auto at = std::find(next.begin(), next.end(), -1) - next.begin();
            emit(SerreWord{std::vector<int>(next.begin(), next.begin() + at), w.q,
                           std::vector<int>(next.begin() + at + 1, next.end())},
                 sign * t.coeff, false);
          }
        }
      }
  };
  auto describe = [&](const SerreWord& w) {
    std::string s = "[";
    for (int g : w.left) s += a.generator(g).name + " | ";
    s += "t " + q.generator(w.q).name;
    for (int g : w.right) s += " | " + a.generator(g).name;
    return s + "]";
  };
  SerreComplex c(f, std::move(basis), diff, describe);
  c.check_square_zero(1);
  return c;
}

SerreComparison compare_serre_step(const CurvedCategory& d, Field f) {
  SerreComparison out;
  out.bar = nonzero(homology_dims(bar_complex(d, 1, f).truncation(1)));
  const auto q = quotient_bimodule(d.b(), d.a_ptr());
  out.serre = nonzero(homology_dims(serre_step_complex(q, f).truncation(1)));
  out.match = out.bar == out.serre;
  if (!out.match) out.message = "homology of the weight <= 1 bar complex differs from the step complex";
  return out;
}

}  // namespace curvedhh
