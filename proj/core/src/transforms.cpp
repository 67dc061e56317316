#include "reductlab/transforms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "reductlab/relations.hpp"

namespace reductlab {

char gen_char(Gen g) { return static_cast<char>('a' + static_cast<int>(g)); }

std::optional<Gen> gen_from_char(char c) {
  if (c < 'a' || c > 'k') return std::nullopt;
  return static_cast<Gen>(c - 'a');
}

std::string GenSet::to_string() const {
  std::string s;
  for (int g = 0; g < kGenCount; ++g)
    if ((bits >> g) & 1u) s += static_cast<char>('a' + g);
  return s;
}

GenSet GenSet::parse(const std::string& labels) {
  GenSet s;
  for (char c : labels) {
    auto g = gen_from_char(c);
    if (!g) throw std::invalid_argument("unknown generator label '" + std::string(1, c) + "'");
    s = s.with(*g);
  }
  return s;
}

namespace {

KType with_ranks_mapped(const KType& t, const std::uint8_t* new_rank_of_old) {
  KType r = t;
  for (int i = 0; i < t.k; ++i) r.ranks[i] = new_rank_of_old[t.ranks[i]];
  return r;
}

std::uint16_t adj_mask(int k, const std::function<bool(int, int)>& flip_rank_pair,
                       const KType& t) {
  std::uint16_t mask = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (flip_rank_pair(t.rank(i), t.rank(j)))
        mask = static_cast<std::uint16_t>(mask | (1u << pair_index(k, i, j)));
  return mask;
}

}  // namespace

KType TypeMove::apply_deterministic(const KType& t) const {
  if (grouping) throw std::logic_error("apply_deterministic on a grouping move");
  if (t.k != arity) throw std::invalid_argument("move/type arity mismatch");
  int k = t.k;
  KType r = t;
  std::array<std::uint8_t, kMaxArity> map{};
  switch (label) {
    case Gen::a:
      for (int v = 0; v < k; ++v) map[v] = static_cast<std::uint8_t>(k - 1 - v);
      return with_ranks_mapped(t, map.data());
    case Gen::b:
      for (int v = 0; v < k; ++v) map[v] = static_cast<std::uint8_t>((v - cut + k) % k);
      return with_ranks_mapped(t, map.data());
    case Gen::c:
      r.adj = static_cast<std::uint16_t>(~t.adj & ((1u << pair_count(k)) - 1u));
      return r;
    case Gen::d: {
      std::uint16_t mask = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          bool in_i = (subset >> i) & 1u, in_j = (subset >> j) & 1u;
          if (in_i != in_j) mask = static_cast<std::uint16_t>(mask | (1u << pair_index(k, i, j)));
        }
      r.adj = static_cast<std::uint16_t>(t.adj ^ mask);
      return r;
    }
    case Gen::e:
      for (int v = 0; v < k; ++v) map[v] = static_cast<std::uint8_t>(k - 1 - v);
      r = with_ranks_mapped(t, map.data());
      r.adj = static_cast<std::uint16_t>(~r.adj & ((1u << pair_count(k)) - 1u));
      return r;
    case Gen::f: {
      std::uint16_t mask = adj_mask(
          k, [&](int ri, int rj) { return (ri >= cut) != (rj >= cut); }, t);
      r.adj = static_cast<std::uint16_t>(t.adj ^ mask);
      for (int v = 0; v < k; ++v) map[v] = static_cast<std::uint8_t>((v - cut + k) % k);
      return with_ranks_mapped(r, map.data());
    }
    case Gen::g: {
      std::uint16_t mask = adj_mask(
          k, [&](int ri, int rj) { return ri < cut && rj < cut; }, t);
      r.adj = static_cast<std::uint16_t>(t.adj ^ mask);
      return r;
    }
    case Gen::h: {
      std::uint16_t mask = adj_mask(
          k, [&](int ri, int rj) { return ri >= cut && rj >= cut; }, t);
      r.adj = static_cast<std::uint16_t>(t.adj ^ mask);
      return r;
    }
    default:
      throw std::logic_error("apply_deterministic on grouping label");
  }
}

std::uint32_t grouping_key(Gen label, const KType& t) {
  switch (label) {
    case Gen::i:
      return t.adj;
    case Gen::j:
      return perm_index(t.ranks.data(), t.k);
    case Gen::k: {
      std::uint32_t key = 0;
      for (int i = 0; i < t.k; ++i)
        for (int j = i + 1; j < t.k; ++j)
          if (t_arrow(t, i, j)) key |= 1u << pair_index(t.k, i, j);
      return key;
    }
    default:
      throw std::logic_error("grouping_key on deterministic label");
  }
}

std::vector<TypeMove> generator_moves(Gen label, int k) {
  require_arity(k);
  std::vector<TypeMove> moves;
  switch (label) {
    case Gen::a:
    case Gen::c:
    case Gen::e:
      moves.push_back({label, k, -1, 0, false});
      break;
    case Gen::b:
    case Gen::f:
    case Gen::g:
    case Gen::h:
      for (int cut = 0; cut <= k; ++cut) moves.push_back({label, k, cut, 0, false});
      break;
    case Gen::d:
      for (std::uint32_t s = 0; s < (1u << k); ++s)
        moves.push_back({label, k, -1, static_cast<std::uint8_t>(s), false});
      break;
    case Gen::i:
    case Gen::j:
    case Gen::k:
      moves.push_back({label, k, -1, 0, true});
      break;
  }
  return moves;
}

std::vector<KType> apply_move(const TypeMove& m, const KType& t) {
  if (m.arity != t.k) throw std::invalid_argument("apply_move: arity mismatch");
  if (!m.grouping) return {m.apply_deterministic(t)};
  std::uint32_t key = grouping_key(m.label, t);
  std::vector<KType> cls;
  for (std::uint32_t c = 0; c < type_count(t.k); ++c) {
    KType u = KType::decode(t.k, c);
    if (grouping_key(m.label, u) == key) cls.push_back(u);
  }
  return cls;
}

std::string move_table_json(const TypeMove& m) {
  nlohmann::json j;
  j["label"] = std::string(1, gen_char(m.label));
  j["arity"] = m.arity;
  if (m.label == Gen::b || m.label == Gen::f || m.label == Gen::g || m.label == Gen::h)
    j["param"] = m.cut;
  else if (m.label == Gen::d) {
    std::vector<int> positions;
    for (int p = 0; p < m.arity; ++p)
      if ((m.subset >> p) & 1u) positions.push_back(p);
    j["param"] = positions;
  } else
    j["param"] = nullptr;
  auto pairs = nlohmann::json::array();
  for (std::uint32_t c = 0; c < type_count(m.arity); ++c) {
    KType t = KType::decode(m.arity, c);
    if (m.grouping) {
      for (const KType& u : apply_move(m, t)) pairs.push_back({c, u.code()});
    } else {
      pairs.push_back({c, m.apply_deterministic(t).code()});
    }
  }
  j["map"] = pairs;
  return j.dump();
}

int transform_vertex(Gen label, const TransformParam& p, int n, int v) {
  switch (label) {
    case Gen::a:
    case Gen::e:
      return n - 1 - v;
    case Gen::b:
    case Gen::f:
      return (v - p.cut + n) % n;
    default:
      return v;
  }
}

OrderedGraph concrete_transform(Gen label, const TransformParam& p, const OrderedGraph& g) {
  int n = g.n;
  bool needs_cut = label == Gen::b || label == Gen::f || label == Gen::g || label == Gen::h;
  if (needs_cut && (p.cut < 0 || p.cut > n))
    throw std::out_of_range("concrete_transform: cut out of range");
  std::vector<std::uint8_t> in_set(static_cast<std::size_t>(n), 0);
  if (label == Gen::d) {
    for (int v : p.switch_set) {
      if (v < 0 || v >= n) throw std::out_of_range("concrete_transform: switch vertex out of range");
      in_set[static_cast<std::size_t>(v)] = 1;
    }
  }

  OrderedGraph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool e = g.edge(u, v);
      switch (label) {
        case Gen::a:
          break;
        case Gen::b:
          break;
        case Gen::c:
          e = !e;
          break;
        case Gen::d:
          if (in_set[u] != in_set[v]) e = !e;
          break;
        case Gen::e:
          e = !e;
          break;
        case Gen::f:
          if ((u >= p.cut) != (v >= p.cut)) e = !e;
          break;
        case Gen::g:
          if (u < p.cut && v < p.cut) e = !e;
          break;
        case Gen::h:
          if (u >= p.cut && v >= p.cut) e = !e;
          break;
        default:
          throw std::invalid_argument("concrete_transform: label must be one of a..h");
      }
      out.set_edge(transform_vertex(label, p, n, u), transform_vertex(label, p, n, v), e);
    }
  }
  return out;
}

}  // namespace reductlab
