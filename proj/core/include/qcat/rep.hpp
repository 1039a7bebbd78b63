#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/matrix.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

/// Type-I irreducible representation V_ell of Uq(sl2), basis e_0..e_ell,
/// weight of e_i is ell - 2i.
struct Irrep {
  int ell = 0;

  constexpr std::size_t dim() const { return static_cast<std::size_t>(ell) + 1; }
  constexpr int weight(int i) const { return ell - 2 * i; }
  friend constexpr auto operator<=>(const Irrep&, const Irrep&) = default;
};

/// Ordered tensor product V_{l1} (x) ... (x) V_{lk}; the empty word is the
/// one-dimensional unit. Basis (i_1..i_k) is flattened with the leftmost
/// factor most significant.
class TensorWord {
public:
  TensorWord() = default;
  TensorWord(std::initializer_list<int> labels);
  explicit TensorWord(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int label(std::size_t k) const { return labels_[k]; }
  std::size_t dim() const { return dim_; }

  std::size_t flat_index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(std::size_t flat) const;
  /// Total weight sum_j (l_j - 2 i_j) of a flat basis vector.
  int weight(std::size_t flat) const;

  TensorWord concat(const TensorWord& other) const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;
  friend auto operator<=>(const TensorWord& a, const TensorWord& b) { return a.labels_ <=> b.labels_; }

  std::string to_string() const;

private:
  std::vector<int> labels_;
  std::size_t dim_ = 1;
};

/// Linear map between tensor words; entries are codomain-dim x domain-dim.
class LinMap {
public:
  LinMap() = default;
  LinMap(TensorWord domain, TensorWord codomain);
  LinMap(TensorWord domain, TensorWord codomain, QMatrix entries);

  static LinMap identity(const TensorWord& word);
  /// Permutation of tensor factors: factor k of the domain goes to position
  /// perm[k] of the codomain.
  static LinMap permutation(const TensorWord& domain, const std::vector<std::size_t>& perm);
  /// The flip u (x) v -> v (x) u on a two-letter word.
  static LinMap flip(int ell1, int ell2);

  const TensorWord& domain() const { return domain_; }
  const TensorWord& codomain() const { return codomain_; }
  const QMatrix& matrix() const { return entries_; }
  QMatrix& matrix() { return entries_; }

  const ScalarQ& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  ScalarQ& operator()(std::size_t r, std::size_t c) { return entries_(r, c); }

  /// this o other. Throws DomainError on mismatched words.
  LinMap compose(const LinMap& other) const;
  friend LinMap operator*(const LinMap& a, const LinMap& b) { return a.compose(b); }
  /// f (x) g acting on concatenated words.
  LinMap tensor(const LinMap& other) const;

  LinMap& operator+=(const LinMap& o);
  LinMap& operator-=(const LinMap& o);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const ScalarQ& s, LinMap a);

  bool is_zero() const { return entries_.is_zero(); }
  /// Some lambda with this == lambda * id; requires domain == codomain.
  std::optional<ScalarQ> as_scalar() const;

  friend bool operator==(const LinMap&, const LinMap&) = default;

private:
  TensorWord domain_;
  TensorWord codomain_;
  QMatrix entries_;
};

enum class Generator { K, Kinv, E, F };
enum class CoproductSide { Delta, DeltaOp };

inline constexpr Generator kAllGenerators[] = {Generator::K, Generator::Kinv, Generator::E,
                                               Generator::F};

std::string to_string(Generator g);
std::string to_string(CoproductSide side);

/// Image of the basis vector e_i under a generator, as a coordinate vector of
/// length ell + 1. Throws DomainError if i is out of range.
std::vector<ScalarQ> act_generator(Generator gen, Irrep rep, int i);

/// Matrix of a generator on V_ell.
QMatrix generator_matrix(Generator gen, Irrep rep);

/// Applies the iterated coproduct of `gen` to a vector in the tensor word,
/// factor by factor. Throws DomainError on dimension mismatch.
std::vector<ScalarQ> act_tensor(Generator gen, const TensorWord& word, CoproductSide side,
                                const std::vector<ScalarQ>& x);

/// Matrix of the iterated coproduct of `gen` on the tensor word.
QMatrix tensor_generator_matrix(Generator gen, const TensorWord& word, CoproductSide side);

struct RelationCheck {
  std::string relation;
  bool pass = false;
};

/// Checks KK^-1 = K^-1K = 1, KE = q^2 EK, KF = q^-2 FK and
/// EF - FE = (K - K^-1)/(q - q^-1) as exact matrix identities on V_ell.
std::vector<RelationCheck> verify_relations(Irrep rep);
/// Same relations for the coproduct action on a tensor word.
std::vector<RelationCheck> verify_relations(const TensorWord& word, CoproductSide side);

/// Highest-weight vectors: for every weight w occurring in the word, a basis
/// of ker E restricted to the weight-w subspace. Weights with an empty kernel
/// are omitted.
std::map<int, std::vector<std::vector<ScalarQ>>, std::greater<>> highest_weight_vectors(
    const TensorWord& word, CoproductSide side);

}  // namespace qcat
