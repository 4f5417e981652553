#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "explab/freegroup.hpp"

namespace explab {

/// Element of the target group: a single index for finite targets, a
/// coordinate vector for free-abelian targets.
using TargetElement = std::vector<std::int64_t>;

/// Homomorphism F_k -> Q onto a finite group (multiplication table) or a
/// free-abelian group Z^r. Its kernel is the normal subgroup under study.
class QuotientHom {
 public:
  enum class Kind { finite, free_abelian };

  /// Target given by its Cayley table; table[x][y] = x * y.
  static QuotientHom finite(int rank, std::vector<std::vector<int>> table, int identity, std::vector<int> images);
  /// Z/n with generator i mapped to images[i].
  static QuotientHom cyclic(int rank, int modulus, std::vector<int> images);
  static QuotientHom free_abelian(int rank, std::vector<std::vector<std::int64_t>> images);
  /// F_k -> Z^k, generator i -> e_i. Kernel is the commutator subgroup.
  static QuotientHom abelianization(int rank);
  /// Map onto the trivial group; kernel is everything.
  static QuotientHom trivial(int rank);

  /// Parses "trivial", "abelian", "mod2" or "mod:N:i1,i2,...".
  static QuotientHom parse(std::string_view spec, int rank);

  int rank() const { return rank_; }
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  TargetElement image(std::span<const Letter> word) const;
  TargetElement image(const ReducedWord& w) const { return image(w.letters()); }
  bool in_kernel(std::span<const Letter> word) const;
  bool in_kernel(const ReducedWord& w) const { return in_kernel(w.letters()); }

  TargetElement identity() const;
  TargetElement multiply(const TargetElement& x, const TargetElement& y) const;

  /// Order of the target, or 0 for an infinite target.
  std::int64_t target_order() const;

 private:
  QuotientHom() = default;

  int rank_ = 0;
  Kind kind_ = Kind::finite;
  std::string label_;
  // finite target
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<int> finite_images_;
  // free-abelian target
  int abelian_rank_ = 0;
  std::vector<std::vector<std::int64_t>> abelian_images_;
};

}  // namespace explab
