#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace reductlab {

inline constexpr int kMaxArity = 5;

constexpr std::uint32_t factorial(int k) {
  std::uint32_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

constexpr int pair_count(int k) { return k * (k - 1) / 2; }

// Lexicographic index of the pair (i, j), i < j, among the C(k,2)
// position pairs: (0,1), (0,2), ..., (0,k-1), (1,2), ...
constexpr int pair_index(int k, int i, int j) {
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

// Number of k-types: k! * 2^C(k,2).  1, 4, 48, 1536, 122880 for k = 1..5.
constexpr std::uint32_t type_count(int k) {
  return factorial(k) << pair_count(k);
}

/// Complete quantifier-free description of a k-tuple of distinct points in
/// an ordered graph: the relative order of the entries plus the induced
/// graph on the positions.  Two tuples have equal type iff some
/// order-and-graph automorphism maps one onto the other.
///
/// Canonical integer code: perm_index(ranks) * 2^C(k,2) + adj, a bijection
/// onto 0 .. k!*2^C(k,2) - 1.
struct KType {
  int k = 1;
  std::array<std::uint8_t, kMaxArity> ranks{};  // ranks[i] = order position of entry i; unused slots stay 0
  std::uint16_t adj = 0;                        // bit pair_index(k,i,j) set iff entries i,j adjacent

  bool edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return (adj >> pair_index(k, i, j)) & 1u;
  }
  int rank(int i) const { return ranks[static_cast<std::size_t>(i)]; }

  std::uint32_t code() const;
  static KType decode(int k, std::uint32_t code);

  // "ranks=(r0,..,rk-1);adj=bitstring", adj bits in lexicographic pair order.
  std::string to_string() const;

  friend bool operator==(const KType&, const KType&) = default;
};

// Lexicographic index of the permutation ranks[0..k-1] of {0..k-1}.
std::uint32_t perm_index(const std::uint8_t* ranks, int k);
void perm_from_index(std::uint32_t idx, int k, std::uint8_t* out);

// All k-types exactly once, in increasing canonical code order.
// Throws std::invalid_argument unless 1 <= k <= 5.
std::vector<KType> enumerate_ktypes(int k);

// Type of the rearranged tuple (t[sigma[0]], ..., t[sigma[k-1]]).
KType permute_args(const KType& t, const int* sigma);

void require_arity(int k);

}  // namespace reductlab
