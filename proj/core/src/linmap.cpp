#include <sstream>

#include "qcat/rep.hpp"

namespace qcat {

TensorWord::TensorWord(std::initializer_list<int> labels) : TensorWord(std::vector<int>(labels)) {}

TensorWord::TensorWord(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int l : labels_) {
    if (l < 0) throw DomainError("negative irrep label " + std::to_string(l));
    dim_ *= static_cast<std::size_t>(l + 1);
  }
}

std::size_t TensorWord::flat_index(const std::vector<int>& multi) const {
  if (multi.size() != labels_.size()) throw DomainError("flat_index: wrong number of indices");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if (multi[j] < 0 || multi[j] > labels_[j]) throw DomainError("flat_index: index out of range");
    flat = flat * static_cast<std::size_t>(labels_[j] + 1) + static_cast<std::size_t>(multi[j]);
  }
  return flat;
}

std::vector<int> TensorWord::multi_index(std::size_t flat) const {
  std::vector<int> multi(labels_.size());
  for (std::size_t j = labels_.size(); j-- > 0;) {
    const auto d = static_cast<std::size_t>(labels_[j] + 1);
    multi[j] = static_cast<int>(flat % d);
    flat /= d;
  }
  return multi;
}

int TensorWord::weight(std::size_t flat) const {
  int w = 0;
  for (std::size_t j = labels_.size(); j-- > 0;) {
    const auto d = static_cast<std::size_t>(labels_[j] + 1);
    w += labels_[j] - 2 * static_cast<int>(flat % d);
    flat /= d;
  }
  return w;
}

TensorWord TensorWord::concat(const TensorWord& other) const {
  std::vector<int> l = labels_;
  l.insert(l.end(), other.labels_.begin(), other.labels_.end());
  return TensorWord(std::move(l));
}

std::string TensorWord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < labels_.size(); ++j) os << (j ? "," : "") << labels_[j];
  os << ')';
  return os.str();
}

LinMap::LinMap(TensorWord domain, TensorWord codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      entries_(codomain_.dim(), domain_.dim()) {}

LinMap::LinMap(TensorWord domain, TensorWord codomain, QMatrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
  if (entries_.rows() != codomain_.dim() || entries_.cols() != domain_.dim())
    throw DomainError("LinMap: matrix shape does not match words " + domain_.to_string() + " -> " +
                      codomain_.to_string());
}

LinMap LinMap::identity(const TensorWord& word) {
  return LinMap(word, word, QMatrix::identity(word.dim()));
}

LinMap LinMap::permutation(const TensorWord& domain, const std::vector<std::size_t>& perm) {
  const std::size_t k = domain.size();
  if (perm.size() != k) throw DomainError("permutation: wrong length");
  std::vector<int> labels(k);
  std::vector<bool> seen(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    if (perm[j] >= k || seen[perm[j]]) throw DomainError("permutation: not a permutation");
    seen[perm[j]] = true;
    labels[perm[j]] = domain.label(j);
  }
  LinMap p(domain, TensorWord(labels));
  std::vector<int> out(k);
  for (std::size_t c = 0; c < domain.dim(); ++c) {
    const auto in = domain.multi_index(c);
    for (std::size_t j = 0; j < k; ++j) out[perm[j]] = in[j];
    p(p.codomain_.flat_index(out), c) = ScalarQ(1);
  }
  return p;
}

LinMap LinMap::flip(int ell1, int ell2) { return permutation(TensorWord{ell1, ell2}, {1, 0}); }

LinMap LinMap::compose(const LinMap& other) const {
  if (!(domain_ == other.codomain_))
    throw DomainError("compose: codomain " + other.codomain_.to_string() +
                      " does not match domain " + domain_.to_string());
  return LinMap(other.domain_, codomain_, entries_ * other.entries_);
}

LinMap LinMap::tensor(const LinMap& other) const {
  return LinMap(domain_.concat(other.domain_), codomain_.concat(other.codomain_),
                kron(entries_, other.entries_));
}

LinMap& LinMap::operator+=(const LinMap& o) {
  if (!(domain_ == o.domain_ && codomain_ == o.codomain_)) throw DomainError("LinMap +: word mismatch");
  entries_ += o.entries_;
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& o) {
  if (!(domain_ == o.domain_ && codomain_ == o.codomain_)) throw DomainError("LinMap -: word mismatch");
  entries_ -= o.entries_;
  return *this;
}

LinMap operator*(const ScalarQ& s, LinMap a) {
  a.entries_ *= s;
  return a;
}

std::optional<ScalarQ> LinMap::as_scalar() const {
  if (!(domain_ == codomain_)) return std::nullopt;
  const std::size_t n = entries_.rows();
  if (n == 0) return std::nullopt;
  const ScalarQ lambda = entries_(0, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c ? !(entries_(r, c) == lambda) : !entries_(r, c).is_zero()) return std::nullopt;
    }
  return lambda;
}

}  // namespace qcat
