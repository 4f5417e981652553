#include "explab/quotient.hpp"

#include <array>
#include <charconv>

#include "explab/errors.hpp"

namespace explab {

namespace {

constexpr int kMaxAbelianRank = 32;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("homomorphism rank out of range");
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string("invalid integer for ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

QuotientHom QuotientHom::finite(int rank, std::vector<std::vector<int>> table, int identity, std::vector<int> images) {
  check_rank(rank);
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidArgument("finite target needs a non-empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidArgument("multiplication table entry out of range");
    }
  }
  if (identity < 0 || identity >= n) throw InvalidArgument("identity index out of range");
  for (int x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x) throw InvalidArgument("identity element is not neutral");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) throw InvalidArgument("multiplication table is not associative");
      }
    }
  }
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity) inverse[x] = y;
    }
    if (inverse[x] < 0) throw InvalidArgument("element without inverse in multiplication table");
  }
  if (static_cast<int>(images.size()) != rank) throw InvalidArgument("need one image per generator");
  for (int v : images) {
    if (v < 0 || v >= n) throw InvalidArgument("generator image out of range");
  }
  QuotientHom hom;
  hom.rank_ = rank;
  hom.kind_ = Kind::finite;
  hom.table_ = std::move(table);
  hom.inverse_ = std::move(inverse);
  hom.identity_ = identity;
  hom.finite_images_ = std::move(images);
  hom.label_ = "finite(order=" + std::to_string(n) + ")";
  return hom;
}

QuotientHom QuotientHom::cyclic(int rank, int modulus, std::vector<int> images) {
  if (modulus < 1) throw InvalidArgument("cyclic modulus must be positive");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(modulus), std::vector<int>(static_cast<std::size_t>(modulus)));
  for (int x = 0; x < modulus; ++x) {
    for (int y = 0; y < modulus; ++y) table[x][y] = (x + y) % modulus;
  }
  for (int& v : images) v = ((v % modulus) + modulus) % modulus;
  std::string label = "mod:" + std::to_string(modulus) + ":";
  for (std::size_t i = 0; i < images.size(); ++i) label += (i ? "," : "") + std::to_string(images[i]);
  QuotientHom hom = finite(rank, std::move(table), 0, std::move(images));
  hom.label_ = std::move(label);
  return hom;
}

QuotientHom QuotientHom::free_abelian(int rank, std::vector<std::vector<std::int64_t>> images) {
  check_rank(rank);
  if (static_cast<int>(images.size()) != rank) throw InvalidArgument("need one image per generator");
  const std::size_t r = images.front().size();
  if (r == 0 || r > kMaxAbelianRank) throw InvalidArgument("free-abelian target rank out of range");
  for (const auto& v : images) {
    if (v.size() != r) throw InvalidArgument("free-abelian images have inconsistent rank");
  }
  QuotientHom hom;
  hom.rank_ = rank;
  hom.kind_ = Kind::free_abelian;
  hom.abelian_rank_ = static_cast<int>(r);
  hom.abelian_images_ = std::move(images);
  hom.label_ = "free_abelian(rank=" + std::to_string(r) + ")";
  return hom;
}

QuotientHom QuotientHom::abelianization(int rank) {
  std::vector<std::vector<std::int64_t>> images(static_cast<std::size_t>(rank), std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) images[i][i] = 1;
  QuotientHom hom = free_abelian(rank, std::move(images));
  hom.label_ = "abelian";
  return hom;
}

QuotientHom QuotientHom::trivial(int rank) {
  QuotientHom hom = finite(rank, {{0}}, 0, std::vector<int>(static_cast<std::size_t>(rank), 0));
  hom.label_ = "trivial";
  return hom;
}

QuotientHom QuotientHom::parse(std::string_view spec, int rank) {
  if (spec == "trivial") return trivial(rank);
  if (spec == "abelian" || spec == "abelianization") return abelianization(rank);
  if (spec == "mod2") {
    std::vector<int> images(static_cast<std::size_t>(rank), 0);
    images[0] = 1;
    QuotientHom hom = cyclic(rank, 2, std::move(images));
    return hom;
  }
  if (spec.starts_with("mod:")) {
    std::string_view rest = spec.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("expected mod:N:i1,i2,...");
    const int modulus = parse_int(rest.substr(0, colon), "modulus");
    std::vector<int> images;
    std::string_view list = rest.substr(colon + 1);
    while (!list.empty()) {
      const auto comma = list.find(',');
      images.push_back(parse_int(list.substr(0, comma), "generator image"));
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
    return cyclic(rank, modulus, std::move(images));
  }
  throw InvalidArgument("unknown homomorphism spec '" + std::string(spec) + "'");
}

TargetElement QuotientHom::identity() const {
  if (kind_ == Kind::finite) return {identity_};
  return TargetElement(static_cast<std::size_t>(abelian_rank_), 0);
}

TargetElement QuotientHom::multiply(const TargetElement& x, const TargetElement& y) const {
  if (kind_ == Kind::finite) return {table_[static_cast<std::size_t>(x[0])][static_cast<std::size_t>(y[0])]};
  TargetElement out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

TargetElement QuotientHom::image(std::span<const Letter> word) const {
  if (kind_ == Kind::finite) {
    int acc = identity_;
    for (Letter x : word) {
      if (x.generator() >= rank_) throw InvalidArgument("word uses a generator beyond the homomorphism rank");
      const int g = finite_images_[static_cast<std::size_t>(x.generator())];
      acc = table_[static_cast<std::size_t>(acc)][static_cast<std::size_t>(x.sign() > 0 ? g : inverse_[g])];
    }
    return {acc};
  }
  TargetElement acc(static_cast<std::size_t>(abelian_rank_), 0);
  for (Letter x : word) {
    if (x.generator() >= rank_) throw InvalidArgument("word uses a generator beyond the homomorphism rank");
    const auto& img = abelian_images_[static_cast<std::size_t>(x.generator())];
    for (int i = 0; i < abelian_rank_; ++i) acc[i] += x.sign() * img[i];
  }
  return acc;
}

bool QuotientHom::in_kernel(std::span<const Letter> word) const {
  if (kind_ == Kind::finite) return image(word)[0] == identity_;
  // Allocation-free path; this runs once per orbit point in subgroup scans.
  std::array<std::int64_t, kMaxAbelianRank> acc{};
  for (Letter x : word) {
    if (x.generator() >= rank_) throw InvalidArgument("word uses a generator beyond the homomorphism rank");
    const auto& img = abelian_images_[static_cast<std::size_t>(x.generator())];
    for (int i = 0; i < abelian_rank_; ++i) acc[i] += x.sign() * img[i];
  }
  for (int i = 0; i < abelian_rank_; ++i) {
    if (acc[i] != 0) return false;
  }
  return true;
}

std::int64_t QuotientHom::target_order() const {
  return kind_ == Kind::finite ? static_cast<std::int64_t>(table_.size()) : 0;
}

}  // namespace explab
