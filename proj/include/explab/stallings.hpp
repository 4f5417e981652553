#pragma once

#include <optional>
#include <vector>

#include "explab/freegroup.hpp"

namespace explab {

/// Folded Stallings graph of a finitely generated subgroup H of F_k.
///
/// Every edge also carries a decoration: an element of the free group on the
/// subgroup generators. Reading an accepted word from the base state and
/// multiplying the decorations along the path rewrites it over h_1, h_2, ...
/// (generator i of the decoration alphabet stands for h_{i+1}). Decorations
/// are kept consistent through folding by shifting vertex potentials, so a
/// conflicting parallel edge means the generators satisfy a relation.
class SubgroupGraph {
 public:
  static constexpr int kNone = -1;

  /// Builds and folds the graph of <generators> inside F_rank. Identity
  /// generators are ignored. Throws InvalidArgument on an empty list.
  static SubgroupGraph build(int rank, const std::vector<ReducedWord>& generators);

  int rank() const { return rank_; }
  int base() const { return 0; }
  std::size_t state_count() const { return target_.size(); }
  std::size_t edge_count() const;
  /// Rank of H as a free group: edges - states + 1.
  int subgroup_rank() const;
  const std::vector<ReducedWord>& generators() const { return generators_; }
  /// False when the generators satisfy a relation (H has smaller rank or
  /// they are not a basis); rewriting is unavailable then.
  bool generators_free() const { return generators_free_; }

  /// Target state of the edge leaving `state` with `letter`, or kNone.
  int step(int state, Letter letter) const { return target_[state][letter.code()]; }

  bool member(std::span<const Letter> word) const;
  bool member(const ReducedWord& w) const { return member(w.letters()); }

  /// Expresses w in H as a reduced word over the subgroup generators.
  /// Returns nullopt if w is not in H. Throws NotFree if the generators are
  /// not a free basis.
  std::optional<ReducedWord> rewrite(const ReducedWord& w) const;

  /// Shortlex-least g' with g'^-1 g in H, i.e. the canonical representative
  /// of the left coset gH.
  ReducedWord coset_canonical_rep(const ReducedWord& g) const;

  /// Length of the shortest path from `state` back to the base state.
  int distance_to_base(int state) const { return dist_[state]; }

 private:
  int rank_ = 0;
  std::vector<ReducedWord> generators_;
  bool generators_free_ = true;
  std::vector<std::vector<int>> target_;        // [state][code]
  std::vector<std::vector<ReducedWord>> deco_;  // [state][code]
  std::vector<int> dist_;
};

/// Pairs (g, h) with |g|, |h| <= bound, g not in H, h != 1 in H and
/// g h g^-1 in H. An empty result refutes nothing beyond the bound.
struct MalnormalWitness {
  ReducedWord g;
  ReducedWord h;
};
std::vector<MalnormalWitness> malnormal_violations(const SubgroupGraph& graph, int bound);

}  // namespace explab
