#include "reductlab/ktype.hpp"

#include <stdexcept>

namespace reductlab {

void require_arity(int k) {
  if (k < 1 || k > kMaxArity)
    throw std::invalid_argument("invalid arity " + std::to_string(k) +
                                ": must be in 1.." + std::to_string(kMaxArity));
}

std::uint32_t perm_index(const std::uint8_t* ranks, int k) {
  // Lehmer code with factorial weights.
  std::uint32_t idx = 0;
  for (int i = 0; i < k; ++i) {
    std::uint32_t smaller_after = 0;
    for (int j = i + 1; j < k; ++j)
      if (ranks[j] < ranks[i]) ++smaller_after;
    idx += smaller_after * factorial(k - 1 - i);
  }
  return idx;
}

void perm_from_index(std::uint32_t idx, int k, std::uint8_t* out) {
  std::array<std::uint8_t, kMaxArity> pool{};
  for (int i = 0; i < k; ++i) pool[i] = static_cast<std::uint8_t>(i);
  int remaining = k;
  for (int i = 0; i < k; ++i) {
    std::uint32_t f = factorial(remaining - 1);
    std::uint32_t digit = idx / f;
    idx %= f;
    out[i] = pool[digit];
    for (std::uint32_t m = digit; m + 1 < static_cast<std::uint32_t>(remaining); ++m)
      pool[m] = pool[m + 1];
    --remaining;
  }
}

std::uint32_t KType::code() const {
  return (perm_index(ranks.data(), k) << pair_count(k)) | adj;
}

KType KType::decode(int k, std::uint32_t code) {
  require_arity(k);
  if (code >= type_count(k))
    throw std::out_of_range("type code " + std::to_string(code) +
                            " out of range for arity " + std::to_string(k));
  KType t;
  t.k = k;
  t.adj = static_cast<std::uint16_t>(code & ((1u << pair_count(k)) - 1u));
  perm_from_index(code >> pair_count(k), k, t.ranks.data());
  return t;
}

std::string KType::to_string() const {
  std::string s = "ranks=(";
  for (int i = 0; i < k; ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<int>(ranks[i]));
  }
  s += ");adj=";
  for (int p = 0; p < pair_count(k); ++p) s += ((adj >> p) & 1u) ? '1' : '0';
  return s;
}

std::vector<KType> enumerate_ktypes(int k) {
  require_arity(k);
  std::vector<KType> out;
  out.reserve(type_count(k));
  for (std::uint32_t c = 0; c < type_count(k); ++c) out.push_back(KType::decode(k, c));
  return out;
}

KType permute_args(const KType& t, const int* sigma) {
  KType r;
  r.k = t.k;
  for (int i = 0; i < t.k; ++i) r.ranks[i] = t.ranks[sigma[i]];
  for (int i = 0; i < t.k; ++i)
    for (int j = i + 1; j < t.k; ++j)
      if (t.edge(sigma[i], sigma[j]))
        r.adj = static_cast<std::uint16_t>(r.adj | (1u << pair_index(t.k, i, j)));
  return r;
}

}  // namespace reductlab
