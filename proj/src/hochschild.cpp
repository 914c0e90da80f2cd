#include "curvedhh/hochschild.hpp"

#include <future>
#include <sstream>

namespace curvedhh {

std::string describe_word(const CurvedCategory& d, const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << " | ";
    if (w[i].weight == 1) os << "t ";
    if (w[i].weight > 1) os << "t^" << w[i].weight << ' ';
    os << d.b().generator(w[i].gen).name;
  }
  os << ']';
  return os.str();
}

namespace {

struct Enumerator {
  const CurvedCategory& d;
  int p;
  std::vector<std::vector<Letter>> interior_by_target;
  std::vector<Word> out;
  Word word;

  Enumerator(const CurvedCategory& dd, int pp) : d(dd), p(pp), interior_by_target(static_cast<std::size_t>(dd.object_count())) {
    for (const auto& x : d.letters(p))
      if (d.in_d_plus(x)) interior_by_target[static_cast<std::size_t>(d.target(x))].push_back(x);
  }

  void extend(int weight) {
    if (d.source(word.back()) == d.target(word.front())) out.push_back(word);
    for (const auto& y : interior_by_target[static_cast<std::size_t>(d.source(word.back()))]) {
      if (weight + y.weight > p) continue;
      word.push_back(y);
      extend(weight + y.weight);
      word.pop_back();
    }
  }

  void run() {
    for (const auto& x : d.letters(p)) {
      if (!d.leftmost_ok(x)) continue;
      word.assign(1, x);
      extend(x.weight);
    }
  }
};

}  // namespace

std::vector<Word> enumerate_cyclic_words(const CurvedCategory& d, int p) {
  if (d.object_count() == 0) return {};
  Enumerator e(d, p);
  e.run();
  return std::move(e.out);
}

int cyclic_degree(const CurvedCategory& d, const Word& w) {
  int deg = d.degree(w.front());
  for (std::size_t k = 1; k < w.size(); ++k) deg += d.degree(w[k]) - 1;
  return deg;
}

void hochschild_terms(const CurvedCategory& d, const Word& w, int p, const TermSink& emit) {
  const int n = static_cast<int>(w.size()) - 1;
  // par[m] = ||w[m]|| mod 2; x_i = w[n - i].
  std::vector<int> par(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) par[m] = d.reduced_parity(w[m]);
  // right[i] = ||x_0|| + ... + ||x_{i-1}||
  std::vector<int> right(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n + 1; ++i) right[static_cast<std::size_t>(i)] = right[static_cast<std::size_t>(i - 1)] ^ par[static_cast<std::size_t>(n - i + 1)];
  const int total = right[static_cast<std::size_t>(n) + 1];
  const int weight = word_weight(w);

  Word next;
  // mu on a block of consecutive letters.
  for (int i = 0; i <= n; ++i) {
    const mpq_class sign = right[static_cast<std::size_t>(i)] ? -1 : 1;
    for (int j = 1; j <= n - i + 1; ++j) {
      const int lo = n - i - j + 1, hi = n - i;
      std::span<const Letter> block(w.data() + lo, static_cast<std::size_t>(j));
      for (const auto& t : d.mu(block)) {
        if (lo == 0 ? !d.leftmost_ok(t.letter) : !d.in_d_plus(t.letter)) continue;
        next.assign(w.begin(), w.begin() + lo);
        next.push_back(t.letter);
        next.insert(next.end(), w.begin() + hi + 1, w.end());
        emit(next, sign * t.coeff, false);
      }
    }
  }
  // Wrap-around: mu(x_{i-1}, ..., x_0, x_n, ..., x_{i+j}) becomes leftmost.
  std::vector<Letter> inputs;
  for (int i = 1; i <= n; ++i) {
    const int s_right = right[static_cast<std::size_t>(i)];
    const int s_left = total ^ s_right;
    for (int j = 0; j <= n - i; ++j) {
      const int u = right[static_cast<std::size_t>(i + j)] ^ s_right;
      const mpq_class sign = ((s_right & s_left) ^ u) ? -1 : 1;
      inputs.assign(w.begin() + (n - i + 1), w.end());
      inputs.insert(inputs.end(), w.begin(), w.begin() + (n - i - j + 1));
      for (const auto& t : d.mu(inputs)) {
        if (!d.leftmost_ok(t.letter)) continue;
        next.assign(1, t.letter);
        next.insert(next.end(), w.begin() + (n - i - j + 1), w.begin() + (n - i + 1));
        emit(next, sign * t.coeff, false);
      }
    }
  }
  // Curvature insertions just right of each x_i.
  if (weight + 1 <= p) {
    for (int i = 0; i <= n; ++i) {
      const int m = n - i;
      next.assign(w.begin(), w.begin() + m + 1);
      next.push_back(d.curvature(d.source(w[static_cast<std::size_t>(m)])));
      next.insert(next.end(), w.begin() + m + 1, w.end());
      emit(next, right[static_cast<std::size_t>(i)] ? -1 : 1, true);
    }
  }
}

HochschildComplex hochschild_complex(const CurvedCategory& d, int p, Field f) {
  std::vector<HochschildComplex::Basis> basis;
  for (auto& w : enumerate_cyclic_words(d, p)) {
    const int deg = cyclic_degree(d, w);
    const int wt = word_weight(w);
    basis.push_back({std::move(w), deg, wt});
  }
  HochschildComplex c(
      f, std::move(basis),
      [&](const Word& w, const HochschildComplex::Emit& emit) { hochschild_terms(d, w, p, emit); },
      [&](const Word& w) { return describe_word(d, w); });
  c.check_square_zero(p);
  return c;
}

BettiRow to_homological(const std::map<int, std::size_t>& cohomological) {
  BettiRow out;
  for (const auto& [k, n] : cohomological)
    if (n) out[-k] = n;
  return out;
}

BettiRow truncated_hochschild_betti(const CurvedCategory& d, int p, Field f) {
  const auto c = hochschild_complex(d, p, f);
  return to_homological(homology_dims(c.truncation(p)));
}

std::map<int, BettiRow> hochschild_betti_table(const CurvedCategory& d, int pmax, Field f) {
  const auto c = hochschild_complex(d, pmax, f);
  std::vector<std::future<BettiRow>> rows;
  for (int p = 0; p <= pmax; ++p)
    rows.push_back(std::async(std::launch::async, [&c, p] { return to_homological(homology_dims(c.truncation(p))); }));
  std::map<int, BettiRow> out;
  for (int p = 0; p <= pmax; ++p) out[p] = rows[static_cast<std::size_t>(p)].get();
  return out;
}

std::size_t induced_rank(const SparseMatrix& f, const SparseMatrix& dk, const SparseMatrix& d_prime) {
  const SparseMatrix zero(f.field(), dk.rows(), d_prime.cols());
  const auto m = SparseMatrix::block(f, d_prime, dk, zero);
  return rank(m) - rank(dk) - rank(d_prime);
}

E1Page e1_page(const CurvedCategory& d, int p, Field f) {
  const auto c = hochschild_complex(d, p, f);
  E1Page page;
  page.max_weight = p;
  std::vector<FiniteChainComplex> pieces;
  for (int w = 0; w <= p; ++w) pieces.push_back(c.graded_piece(w));
  std::vector<std::future<std::map<int, std::size_t>>> homs;
  for (const auto& g : pieces)
    homs.push_back(std::async(std::launch::async, [&g] { return homology_dims(g); }));
  std::vector<std::map<int, std::size_t>> e1(pieces.size());
  for (std::size_t w = 0; w < pieces.size(); ++w) {
    e1[w] = homs[w].get();
    page.e1[static_cast<int>(w)] = to_homological(e1[w]);
  }
  // (w, k) -> rank of the induced map out of cohomological degree k.
  std::map<std::pair<int, int>, std::size_t> out_rank;
  for (int w = 0; w < p; ++w) {
    const auto& g = pieces[static_cast<std::size_t>(w)];
    const auto& h = pieces[static_cast<std::size_t>(w) + 1];
    for (int k : c.degrees(w)) {
      const auto fk = c.raising_map(w, k);
      // Chain-map check: d' f + f d = 0.
      const auto lhs = h.differential(k + 1) * fk;
      const auto rhs = c.raising_map(w, k + 1) * g.differential(k);
      if (!(lhs == -rhs))
        throw ConventionViolation("curvature insertion is not a chain map at weight " + std::to_string(w) +
                                  ", degree " + std::to_string(k));
      const std::size_t r = induced_rank(fk, g.differential(k), h.differential(k));
      if (r) {
        out_rank[{w, k}] = r;
        page.d1_rank[{w, -k}] = r;
      }
    }
  }
  for (int w = 0; w < p; ++w) {
    BettiRow row;
    for (const auto& [k, n] : e1[static_cast<std::size_t>(w)]) {
      std::size_t left = n;
      if (auto it = out_rank.find({w, k}); it != out_rank.end()) left -= it->second;
      if (auto it = out_rank.find({w - 1, k - 1}); it != out_rank.end()) left -= it->second;
      if (left) row[-k] = left;
    }
    page.e2[w] = row;
  }
  return page;
}

}  // namespace curvedhh
