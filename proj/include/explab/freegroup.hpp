#pragma once

// Exact combinatorics of the free group F_k.
//
// Letters are packed as code = 2 * generator + (inverse ? 1 : 0), so the
// natural integer order of codes is the letter order a < A < b < B < ...
// used for every shortlex comparison in the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace explab {

inline constexpr int kMaxRank = 26;

class Letter {
 public:
  constexpr Letter() = default;
  constexpr static Letter from_code(int code) { return Letter(static_cast<std::uint8_t>(code)); }
  constexpr static Letter make(int generator, int sign) {
    return Letter(static_cast<std::uint8_t>(2 * generator + (sign < 0 ? 1 : 0)));
  }

  constexpr int code() const { return code_; }
  constexpr int generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr Letter inverse() const { return Letter(static_cast<std::uint8_t>(code_ ^ 1)); }
  constexpr bool cancels(Letter other) const { return (code_ ^ 1) == other.code_; }

  char to_char() const;
  static Letter from_char(char c);

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

/// A freely reduced word; the empty word is the identity.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Freely reduces `letters`.
  explicit ReducedWord(std::span<const Letter> letters);
  ReducedWord(std::initializer_list<Letter> letters)
      : ReducedWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  static ReducedWord generator(int index, int sign = +1) { return ReducedWord{Letter::make(index, sign)}; }

  /// Parses "abAB"; "1" and "" are the identity. Throws InvalidArgument.
  static ReducedWord parse(std::string_view text);
  std::string to_string() const;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Largest generator index used plus one (0 for the identity).
  int min_rank() const;

  bool operator==(const ReducedWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortlex order: shorter first, then lexicographic in letter order.
bool shortlex_less(std::span<const Letter> lhs, std::span<const Letter> rhs);
inline bool shortlex_less(const ReducedWord& lhs, const ReducedWord& rhs) {
  return shortlex_less(lhs.letters(), rhs.letters());
}

struct ShortlexLess {
  bool operator()(const ReducedWord& lhs, const ReducedWord& rhs) const { return shortlex_less(lhs, rhs); }
};

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept;
};

ReducedWord concat(const ReducedWord& lhs, const ReducedWord& rhs);
ReducedWord invert(const ReducedWord& w);
/// w^n for any integer n (negative powers use the inverse).
ReducedWord power(const ReducedWord& w, long n);
/// g^-1 h g, freely reduced.
ReducedWord conjugate_by(const ReducedWord& h, const ReducedWord& g);

struct CyclicReduction {
  ReducedWord core;
  ReducedWord conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const ReducedWord& w);

struct PrimitiveRoot {
  ReducedWord root;
  int exponent = 1;
};
/// w = root^exponent with exponent maximal. Throws InvalidArgument for the identity.
PrimitiveRoot primitive_root(const ReducedWord& w);

/// Number of reduced words of length exactly `length` in F_k.
std::uint64_t reduced_word_count(int rank, int length);

/// Calls `fn(span<const Letter>)` for every reduced word of length exactly
/// `length`, in lexicographic order, reusing one buffer.
void for_each_word_of_length(int rank, int length, const std::function<void(std::span<const Letter>)>& fn);

/// Every reduced word of length <= max_length, in shortlex order.
std::vector<ReducedWord> enumerate_words(int rank, int max_length);

/// Shortlex-least element of the right coset <h> g.
///
/// Writing h = c r c^-1 with r cyclically reduced, |h^n g| >= 2|c| + |n||r| - |g|,
/// so the least element h^n g has |n| <= 2|g| / |r|. That bound holds from
/// every element of the coset, which makes the result a coset invariant.
ReducedWord cyclic_coset_rep(const ReducedWord& h, const ReducedWord& g);

}  // namespace explab
