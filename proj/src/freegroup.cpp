#include "explab/freegroup.hpp"

#include <algorithm>
#include <cctype>

#include "explab/errors.hpp"

namespace explab {

char Letter::to_char() const {
  const char base = sign() > 0 ? 'a' : 'A';
  return static_cast<char>(base + generator());
}

Letter Letter::from_char(char c) {
  if (c >= 'a' && c < 'a' + kMaxRank) return Letter::make(c - 'a', +1);
  if (c >= 'A' && c < 'A' + kMaxRank) return Letter::make(c - 'A', -1);
  throw InvalidArgument(std::string("invalid word character '") + c + "'");
}

ReducedWord::ReducedWord(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (!letters_.empty() && letters_.back().cancels(x)) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

ReducedWord ReducedWord::parse(std::string_view text) {
  if (text == "1") return {};
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(Letter::from_char(c));
  return ReducedWord(raw);
}

std::string ReducedWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.to_char());
  return out;
}

int ReducedWord::min_rank() const {
  int r = 0;
  for (Letter x : letters_) r = std::max(r, x.generator() + 1);
  return r;
}

bool shortlex_less(std::span<const Letter> lhs, std::span<const Letter> rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::size_t ReducedWordHash::operator()(const ReducedWord& w) const noexcept {
  // FNV-1a over letter codes
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter x : w.letters()) {
    h ^= static_cast<std::uint64_t>(x.code() + 1);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

ReducedWord concat(const ReducedWord& lhs, const ReducedWord& rhs) {
  auto l = lhs.letters();
  auto r = rhs.letters();
  std::size_t cancel = 0;
  while (cancel < l.size() && cancel < r.size() && l[l.size() - 1 - cancel].cancels(r[cancel])) ++cancel;
  std::vector<Letter> out;
  out.reserve(l.size() + r.size() - 2 * cancel);
  out.insert(out.end(), l.begin(), l.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(cancel), r.end());
  return ReducedWord(out);
}

ReducedWord invert(const ReducedWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return ReducedWord(out);
}

ReducedWord power(const ReducedWord& w, long n) {
  const ReducedWord base = n < 0 ? invert(w) : w;
  ReducedWord out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = concat(out, base);
  return out;
}

ReducedWord conjugate_by(const ReducedWord& h, const ReducedWord& g) { return concat(concat(invert(g), h), g); }

CyclicReduction cyclic_reduce(const ReducedWord& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {ReducedWord(letters.subspan(lo, hi - lo)), ReducedWord(letters.subspan(0, lo))};
}

PrimitiveRoot primitive_root(const ReducedWord& w) {
  if (w.empty()) throw InvalidArgument("primitive_root: identity has no primitive root");
  auto [core, conj] = cyclic_reduce(w);
  auto c = core.letters();
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      ReducedWord root = concat(concat(conj, ReducedWord(c.subspan(0, d))), invert(conj));
      return {std::move(root), static_cast<int>(n / d)};
    }
  }
  return {w, 1};  // unreachable: d = n is always periodic
}

std::uint64_t reduced_word_count(int rank, int length) {
  if (length == 0) return 1;
  std::uint64_t count = 2 * static_cast<std::uint64_t>(rank);
  for (int l = 1; l < length; ++l) count *= 2 * static_cast<std::uint64_t>(rank) - 1;
  return count;
}

void for_each_word_of_length(int rank, int length, const std::function<void(std::span<const Letter>)>& fn) {
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("rank out of range");
  if (length < 0) throw InvalidArgument("negative word length");
  const int codes = 2 * rank;
  std::vector<int> digit(static_cast<std::size_t>(length), 0);
  std::vector<Letter> word(static_cast<std::size_t>(length));
  // Smallest admissible code at position i given the previous letter.
  auto first_valid = [&](std::size_t i, int from) {
    int c = from;
    while (c < codes && i > 0 && (c ^ 1) == digit[i - 1]) ++c;
    return c;
  };
  for (std::size_t i = 0; i < digit.size(); ++i) digit[i] = first_valid(i, 0);
  while (true) {
    for (std::size_t i = 0; i < digit.size(); ++i) word[i] = Letter::from_code(digit[i]);
    fn(word);
    // Odometer increment from the right.
    std::ptrdiff_t pos = length - 1;
    while (pos >= 0) {
      const auto p = static_cast<std::size_t>(pos);
      const int next = first_valid(p, digit[p] + 1);
      if (next < codes) {
        digit[p] = next;
        for (std::size_t j = p + 1; j < digit.size(); ++j) digit[j] = first_valid(j, 0);
        break;
      }
      --pos;
    }
    if (pos < 0) return;
  }
}

std::vector<ReducedWord> enumerate_words(int rank, int max_length) {
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("rank out of range");
  std::vector<ReducedWord> out;
  for (int l = 0; l <= max_length; ++l) {
    for_each_word_of_length(rank, l, [&](std::span<const Letter> w) { out.emplace_back(w); });
  }
  return out;
}

ReducedWord cyclic_coset_rep(const ReducedWord& h, const ReducedWord& g) {
  if (h.empty()) throw InvalidArgument("cyclic_coset_rep: h must be non-trivial");
  const std::size_t core_len = cyclic_reduce(h).core.length();
  const long window = static_cast<long>((2 * g.length()) / core_len) + 1;
  const ReducedWord h_inv = invert(h);
  ReducedWord best = g;
  ReducedWord up = g;
  ReducedWord down = g;
  for (long n = 1; n <= window; ++n) {
    up = concat(h, up);
    down = concat(h_inv, down);
    if (shortlex_less(up, best)) best = up;
    if (shortlex_less(down, best)) best = down;
  }
  return best;
}

}  // namespace explab
