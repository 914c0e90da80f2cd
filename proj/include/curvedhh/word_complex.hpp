#ifndef CURVEDHH_WORD_COMPLEX_HPP
#define CURVEDHH_WORD_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvedhh/chain_complex.hpp"
#include "curvedhh/errors.hpp"

namespace curvedhh {

/*
 * A cochain complex whose basis is a finite set of keys (words), each with a
 * cohomological degree and a t-weight.  The differential is split into a
 * weight-preserving part and a weight-raising part so that truncations,
 * associated graded pieces and the map between adjacent weights can all be
 * cut out of one assembly.
 */
template <class Key, class Hash>
class WordComplex {
 public:
  struct Basis {
    Key key;
    int degree;
    int weight;
  };
  // emit(target, coefficient, raises_weight)
  using Emit = std::function<void(const Key&, const mpq_class&, bool)>;
  using Differential = std::function<void(const Key&, const Emit&)>;
  using Describe = std::function<std::string(const Key&)>;

  WordComplex() = default;

  // Terms hitting keys outside the basis must already have been discarded by
  // `diff`; any that survive are reported as a ConventionViolation.
  WordComplex(Field f, std::vector<Basis> basis, const Differential& diff, Describe describe)
      : field_(f), describe_(std::move(describe)) {
    std::sort(basis.begin(), basis.end(), [](const Basis& x, const Basis& y) {
      if (x.degree != y.degree) return x.degree < y.degree;
      return x.key < y.key;
    });
    for (auto& b : basis) {
      auto& slot = by_degree_[b.degree];
      if (!index_.emplace(b.key, std::make_pair(b.degree, static_cast<std::uint32_t>(slot.size()))).second)
        throw ConventionViolation("duplicate basis word " + describe_(b.key));
      max_weight_ = std::max(max_weight_, b.weight);
      slot.push_back(std::move(b));
    }
    for (const auto& [k, words] : by_degree_) {
      auto& keep = keep_[k];
      auto& raise = raise_[k];
      for (std::uint32_t col = 0; col < words.size(); ++col) {
        const auto& src = words[col];
        diff(src.key, [&](const Key& tgt, const mpq_class& c, bool raises) {
          auto it = index_.find(tgt);
          if (it == index_.end())
            throw ConventionViolation("differential of " + describe_(src.key) + " leaves the basis: " + describe_(tgt));
          if (it->second.first != k + 1)
            throw ConventionViolation("differential of " + describe_(src.key) + " hits " + describe_(tgt) +
                                      " in degree " + std::to_string(it->second.first));
          const auto& t = by_degree_.at(k + 1)[it->second.second];
          if (t.weight != src.weight + (raises ? 1 : 0))
            throw ConventionViolation("differential of " + describe_(src.key) + " changes weight wrongly");
          (raises ? raise : keep).push_back(MatrixEntry{it->second.second, col, Scalar(field_, c)});
        });
      }
    }
  }

  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return index_.empty(); }
  int max_weight() const noexcept { return max_weight_; }
  std::size_t size() const noexcept { return index_.size(); }
  const std::map<int, std::vector<Basis>>& basis() const noexcept { return by_degree_; }
  std::string describe(const Key& k) const { return describe_(k); }

  // Words of weight <= p with the full differential.
  FiniteChainComplex truncation(int p) const {
    return assemble([p](const Basis& b) { return b.weight <= p; }, true);
  }
  // Words of weight exactly w with the weight-preserving differential.
  FiniteChainComplex graded_piece(int w) const {
    return assemble([w](const Basis& b) { return b.weight == w; }, false);
  }
  // Every word, weight-preserving differential only.
  FiniteChainComplex associated_graded() const {
    return assemble([](const Basis&) { return true; }, false);
  }
  // The span of the selected words with the full differential.  Only a
  // subcomplex if closed_under(keep) holds.
  FiniteChainComplex restriction(const std::function<bool(const Basis&)>& keep) const {
    return assemble(keep, true);
  }
  // True when the full differential maps the selected words into their span.
  bool closed_under(const std::function<bool(const Basis&)>& keep) const {
    for (const auto& [k, words] : by_degree_) {
      auto next = by_degree_.find(k + 1);
      if (next == by_degree_.end()) continue;
      for (const auto* part : {&keep_, &raise_}) {
        auto it = part->find(k);
        if (it == part->end()) continue;
        for (const auto& e : it->second)
          if (keep(words[e.col]) && !keep(next->second[e.row])) return false;
      }
    }
    return true;
  }

  // The weight-raising part from (weight w, degree k) to (w + 1, k + 1), in
  // the bases of graded_piece(w) and graded_piece(w + 1).
  SparseMatrix raising_map(int w, int k) const {
    const auto src = select(k, [w](int x) { return x == w; });
    const auto tgt = select(k + 1, [w](int x) { return x == w + 1; });
    auto it = raise_.find(k);
    const std::size_t rows = by_degree_.count(k + 1) ? by_degree_.at(k + 1).size() : 0;
    const std::size_t cols = by_degree_.count(k) ? by_degree_.at(k).size() : 0;
    SparseMatrix full = it == raise_.end() ? SparseMatrix(field_, rows, cols)
                                           : SparseMatrix::from_entries(field_, rows, cols, it->second);
    return full.submatrix(tgt, src);
  }

  // Degrees k with a nonzero chain group at weight w.
  std::vector<int> degrees(int w) const {
    std::vector<int> out;
    for (const auto& [k, words] : by_degree_)
      if (std::any_of(words.begin(), words.end(), [w](const Basis& b) { return b.weight == w; })) out.push_back(k);
    return out;
  }

  // Throws ConventionViolation naming a word whose image under d∘d is
  // nonzero (restricted to weight <= p).
  void check_square_zero(int p) const {
    const auto c = truncation(p);
    if (c.empty()) return;
    for (int k = c.min_degree(); k + 1 < c.max_degree(); ++k) {
      const auto dd = c.differential(k + 1) * c.differential(k);
      if (dd.is_zero()) continue;
      const auto col = dd.entries().front().col;
      const auto cols = select(k, [p](int w) { return w <= p; });
      const auto& word = by_degree_.at(k)[cols[col]].key;
      throw ConventionViolation("d∘d != 0 on " + describe_(word) + " (degree " + std::to_string(k) + ")");
    }
  }

 private:
  std::vector<std::uint32_t> select(int k, const std::function<bool(int)>& keep) const {
    return select_basis(k, [&keep](const Basis& b) { return keep(b.weight); });
  }

  std::vector<std::uint32_t> select_basis(int k, const std::function<bool(const Basis&)>& keep) const {
    std::vector<std::uint32_t> out;
    auto it = by_degree_.find(k);
    if (it == by_degree_.end()) return out;
    for (std::uint32_t i = 0; i < it->second.size(); ++i)
      if (keep(it->second[i])) out.push_back(i);
    return out;
  }

  FiniteChainComplex assemble(const std::function<bool(const Basis&)>& keep, bool with_raise) const {
    std::map<int, std::vector<std::uint32_t>> chosen;
    for (const auto& [k, words] : by_degree_) {
      auto s = select_basis(k, keep);
      if (!s.empty()) chosen[k] = std::move(s);
    }
    if (chosen.empty()) return FiniteChainComplex(field_);
    const int lo = chosen.begin()->first, hi = chosen.rbegin()->first;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> diffs;
    static const std::vector<std::uint32_t> none;
    auto pick = [&](int k) -> const std::vector<std::uint32_t>& {
      auto it = chosen.find(k);
      return it == chosen.end() ? none : it->second;
    };
    for (int k = lo; k <= hi; ++k) dims.push_back(pick(k).size());
    for (int k = lo; k < hi; ++k) {
      const std::size_t rows = by_degree_.count(k + 1) ? by_degree_.at(k + 1).size() : 0;
      const std::size_t cols = by_degree_.count(k) ? by_degree_.at(k).size() : 0;
      std::vector<MatrixEntry> e;
      if (auto it = keep_.find(k); it != keep_.end()) e = it->second;
      if (with_raise)
        if (auto it = raise_.find(k); it != raise_.end()) e.insert(e.end(), it->second.begin(), it->second.end());
      const auto full = SparseMatrix::from_entries(field_, rows, cols, std::move(e));
      diffs.push_back(full.submatrix(pick(k + 1), pick(k)));
    }
    return FiniteChainComplex(field_, lo, std::move(dims), std::move(diffs));
  }

  Field field_ = Field::rationals();
  Describe describe_;
  int max_weight_ = 0;
  std::map<int, std::vector<Basis>> by_degree_;
  std::unordered_map<Key, std::pair<int, std::uint32_t>, Hash> index_;
  std::map<int, std::vector<MatrixEntry>> keep_, raise_;
};

}  // namespace curvedhh

#endif  // CURVEDHH_WORD_COMPLEX_HPP
