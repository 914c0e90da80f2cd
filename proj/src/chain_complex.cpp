#include "curvedhh/chain_complex.hpp"

#include <future>
#include <string>

#include "curvedhh/errors.hpp"

namespace curvedhh {

FiniteChainComplex::FiniteChainComplex(Field f, int min_degree, std::vector<std::size_t> dims,
                                       std::vector<SparseMatrix> differentials)
    : field_(f), min_degree_(min_degree), dims_(std::move(dims)), diffs_(std::move(differentials)) {
  const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
  if (diffs_.size() != expected)
    throw ConfigurationError("complex with " + std::to_string(dims_.size()) + " degrees needs " +
                             std::to_string(expected) + " differentials, got " + std::to_string(diffs_.size()));
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const auto& d = diffs_[i];
    if (!(d.field() == field_)) throw ConfigurationError("differential over the wrong field");
    if (d.cols() != dims_[i] || d.rows() != dims_[i + 1])
      throw ConfigurationError("differential in degree " + std::to_string(min_degree_ + static_cast<int>(i)) +
                               " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                               ", expected " + std::to_string(dims_[i + 1]) + "x" + std::to_string(dims_[i]));
  }
}

std::size_t FiniteChainComplex::dim(int degree) const {
  if (dims_.empty() || degree < min_degree_ || degree > max_degree()) return 0;
  return dims_[static_cast<std::size_t>(degree - min_degree_)];
}

std::size_t FiniteChainComplex::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

SparseMatrix FiniteChainComplex::differential(int degree) const {
  if (!dims_.empty() && degree >= min_degree_ && degree < max_degree())
    return diffs_[static_cast<std::size_t>(degree - min_degree_)];
  return SparseMatrix(field_, dim(degree + 1), dim(degree));
}

void FiniteChainComplex::validate() const {
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (diffs_[i + 1].is_zero() || diffs_[i].is_zero()) continue;
    if (!(diffs_[i + 1] * diffs_[i]).is_zero()) {
      const int k = min_degree_ + static_cast<int>(i);
      throw InvalidComplexError(k, "d∘d != 0 starting in degree " + std::to_string(k));
    }
  }
}

std::map<int, std::size_t> homology_dims(const FiniteChainComplex& c) {
  c.validate();
  std::map<int, std::size_t> out;
  if (c.empty()) return out;
  const int lo = c.min_degree(), hi = c.max_degree();
  // Ranks are independent; compute them concurrently.
  std::vector<std::future<std::size_t>> ranks;
  for (int k = lo; k < hi; ++k)
    ranks.push_back(std::async(std::launch::async, [&c, k] { return rank(c.differential(k)); }));
  std::vector<std::size_t> r;
  for (auto& f : ranks) r.push_back(f.get());
  for (int k = lo; k <= hi; ++k) {
    const std::size_t out_rank = k < hi ? r[static_cast<std::size_t>(k - lo)] : 0;
    const std::size_t in_rank = k > lo ? r[static_cast<std::size_t>(k - 1 - lo)] : 0;
    out[k] = c.dim(k) - out_rank - in_rank;
  }
  return out;
}

long euler_characteristic(const FiniteChainComplex& c) {
  long chi = 0;
  if (c.empty()) return 0;
  for (int k = c.min_degree(); k <= c.max_degree(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(k));
  return chi;
}

long euler_characteristic(const std::map<int, std::size_t>& dims) {
  long chi = 0;
  for (const auto& [k, d] : dims) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  return chi;
}

}  // namespace curvedhh
