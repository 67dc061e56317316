#include "reductlab/orbits.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "reductlab/ordered_graph.hpp"

namespace reductlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n) {
    for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;  // keep the least code as root
    else parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Precomputed move tables per arity: image tables for the deterministic
// families, invariant keys for the groupings.
struct ArityTables {
  std::array<std::vector<std::vector<std::uint32_t>>, 8> det;  // a..h
  std::array<std::vector<std::uint32_t>, 3> keys;              // i, j, k
};

ArityTables build_tables(int k) {
  ArityTables tb;
  std::vector<KType> types = enumerate_ktypes(k);
  for (int l = 0; l < 8; ++l) {
    Gen label = static_cast<Gen>(l);
    for (const TypeMove& m : generator_moves(label, k)) {
      std::vector<std::uint32_t> img(types.size());
      for (std::uint32_t c = 0; c < types.size(); ++c)
        img[c] = m.apply_deterministic(types[c]).code();
      tb.det[l].push_back(std::move(img));
    }
  }
  for (int l = 0; l < 3; ++l) {
    Gen label = static_cast<Gen>(static_cast<int>(Gen::i) + l);
    std::vector<std::uint32_t> key(types.size());
    for (std::uint32_t c = 0; c < types.size(); ++c) key[c] = grouping_key(label, types[c]);
    tb.keys[l] = std::move(key);
  }
  return tb;
}

const ArityTables& tables(int k) {
  require_arity(k);
  static const std::array<ArityTables, kMaxArity> all = [] {
    std::array<ArityTables, kMaxArity> a;
    for (int i = 0; i < kMaxArity; ++i) a[i] = build_tables(i + 1);
    return a;
  }();
  return all[k - 1];
}

std::atomic<bool> g_move_table_fault{false};

void apply_label(UnionFind& uf, int k, Gen label) {
  const ArityTables& tb = tables(k);
  std::uint32_t n = type_count(k);
  int l = static_cast<int>(label);
  if (l < 8) {
    bool fault = g_move_table_fault.load(std::memory_order_relaxed) && label == Gen::c;
    for (const auto& img : tb.det[l]) {
      for (std::uint32_t c = 0; c < n; ++c) uf.unite(c, img[c]);
      if (fault) uf.unite(0, (img[0] + 2) % n);
    }
  } else {
    const auto& key = tb.keys[l - 8];
    std::unordered_map<std::uint32_t, std::uint32_t> first;
    first.reserve(256);
    for (std::uint32_t c = 0; c < n; ++c) {
      auto [it, inserted] = first.emplace(key[c], c);
      if (!inserted) uf.unite(it->second, c);
    }
  }
}

OrbitPartition canonicalize(UnionFind& uf, int k) {
  std::uint32_t n = type_count(k);
  OrbitPartition p;
  p.arity = k;
  p.block_of.resize(n);
  std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t r = uf.find(c);
    if (id_of_root[r] == UINT32_MAX) id_of_root[r] = next++;
    p.block_of[c] = id_of_root[r];
  }
  p.classes = next;
  return p;
}

std::uint64_t hash_partition(const OrbitPartition& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(p.arity));
  mix(p.classes);
  for (std::uint32_t b : p.block_of) mix(b);
  return h;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> OrbitPartition::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(classes);
  for (std::uint32_t c = 0; c < block_of.size(); ++c) out[block_of[c]].push_back(c);
  return out;
}

OrbitPartition orbit_partition(GenSet gs, int k) {
  require_arity(k);
  UnionFind uf(type_count(k));
  for (int l = 0; l < kGenCount; ++l)
    if (gs.contains(static_cast<Gen>(l))) apply_label(uf, k, static_cast<Gen>(l));
  return canonicalize(uf, k);
}

bool preserves(const OrbitPartition& p, const Relation& r) {
  if (r.arity != p.arity) throw std::invalid_argument("preserves: arity mismatch");
  std::vector<std::uint32_t> size(p.classes, 0), inside(p.classes, 0);
  for (std::uint32_t c = 0; c < p.block_of.size(); ++c) ++size[p.block_of[c]];
  for (std::uint32_t m : r.members) ++inside[p.block_of[m]];
  for (std::uint32_t b = 0; b < p.classes; ++b)
    if (inside[b] != 0 && inside[b] != size[b]) return false;
  return true;
}

bool preserves(GenSet gs, const Relation& r) { return preserves(orbit_partition(gs, r.arity), r); }

bool preserves_direct(GenSet gs, const Relation& r) {
  std::vector<KType> types = enumerate_ktypes(r.arity);
  for (int l = 0; l < kGenCount; ++l) {
    if (!gs.contains(static_cast<Gen>(l))) continue;
    for (const TypeMove& m : generator_moves(static_cast<Gen>(l), r.arity)) {
      for (std::uint32_t c : r.members)
        for (const KType& img : apply_move(m, types[c]))
          if (!r.contains(img)) return false;
    }
  }
  return true;
}

bool refines(const OrbitPartition& p1, const OrbitPartition& p2) {
  if (p1.arity != p2.arity) throw std::invalid_argument("refines: arity mismatch");
  std::vector<std::uint32_t> image(p1.classes, UINT32_MAX);
  for (std::uint32_t c = 0; c < p1.block_of.size(); ++c) {
    std::uint32_t b = p1.block_of[c];
    if (image[b] == UINT32_MAX) image[b] = p2.block_of[c];
    else if (image[b] != p2.block_of[c]) return false;
  }
  return true;
}

SignatureStore::SignatureStore() : memo_((1u << kGenCount) * 5u) {
  for (auto& a : memo_) a.store(-1, std::memory_order_relaxed);
}

std::int32_t SignatureStore::intern(OrbitPartition&& p) {
  std::uint64_t h = hash_partition(p);
  std::lock_guard<std::mutex> lock(intern_mu_);
  auto [lo, hi] = pool_by_hash_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (pool_[static_cast<std::size_t>(it->second)] == p) return it->second;
  pool_.push_back(std::move(p));
  std::int32_t id = static_cast<std::int32_t>(pool_.size() - 1);
  pool_by_hash_.emplace(h, id);
  return id;
}

std::int32_t SignatureStore::compute(std::uint16_t mask, int k) {
  std::size_t slot = static_cast<std::size_t>(mask) * 5 + static_cast<std::size_t>(k - 1);
  std::int32_t cached = memo_[slot].load(std::memory_order_acquire);
  if (cached >= 0) return cached;

  std::int32_t id;
  if (mask == 0) {
    std::uint32_t n = type_count(k);
    OrbitPartition p;
    p.arity = k;
    p.classes = n;
    p.block_of.resize(n);
    for (std::uint32_t c = 0; c < n; ++c) p.block_of[c] = c;
    id = intern(std::move(p));
  } else {
    int top = 31 - __builtin_clz(static_cast<unsigned>(mask));  // highest set label
    std::uint16_t rest = static_cast<std::uint16_t>(mask & ~(1u << top));
    std::int32_t base = compute(rest, k);
    const OrbitPartition& bp = pool_[static_cast<std::size_t>(base)];
    std::uint32_t n = type_count(k);
    UnionFind uf(n);
    {
      // seed with the base partition
      std::vector<std::uint32_t> first(bp.classes, UINT32_MAX);
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t b = bp.block_of[c];
        if (first[b] == UINT32_MAX) first[b] = c;
        else uf.unite(first[b], c);
      }
    }
    apply_label(uf, k, static_cast<Gen>(top));
    id = intern(canonicalize(uf, k));
  }
  memo_[slot].store(id, std::memory_order_release);
  return id;
}

const OrbitPartition& SignatureStore::partition(GenSet gs, int k) {
  require_arity(k);
  return pool_[static_cast<std::size_t>(compute(gs.bits, k))];
}

Signature SignatureStore::signature(GenSet gs) {
  Signature s;
  for (int k = 1; k <= kMaxArity; ++k) s[k - 1] = compute(gs.bits, k);
  return s;
}

void SignatureStore::precompute_all(int threads) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::vector<std::vector<std::uint16_t>> by_popcount(kGenCount + 1);
  for (std::uint32_t m = 0; m < (1u << kGenCount); ++m)
    by_popcount[static_cast<std::size_t>(__builtin_popcount(m))].push_back(
        static_cast<std::uint16_t>(m));
  for (const auto& level : by_popcount) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= level.size()) return;
        for (int k = 1; k <= kMaxArity; ++k) compute(level[idx], k);
      }
    };
    if (threads == 1 || level.size() <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }
}

namespace {
constexpr char kCacheMagic[8] = {'R', 'L', 'S', 'I', 'G', '0', '0', '1'};
}

bool SignatureStore::load_cache(const std::string& dir) {
  std::ifstream in(std::filesystem::path(dir) / "signatures.bin", std::ios::binary);
  if (!in) return false;
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kCacheMagic, 8) != 0) return false;
  std::uint32_t pool_size = 0;
  in.read(reinterpret_cast<char*>(&pool_size), 4);
  if (!in || pool_size == 0 || pool_size > 1u << 20) return false;
  std::deque<OrbitPartition> pool;
  for (std::uint32_t i = 0; i < pool_size; ++i) {
    OrbitPartition p;
    std::uint32_t arity = 0;
    in.read(reinterpret_cast<char*>(&arity), 4);
    in.read(reinterpret_cast<char*>(&p.classes), 4);
    if (!in || arity < 1 || arity > kMaxArity) return false;
    p.arity = static_cast<int>(arity);
    p.block_of.resize(type_count(p.arity));
    in.read(reinterpret_cast<char*>(p.block_of.data()),
            static_cast<std::streamsize>(p.block_of.size() * 4));
    if (!in) return false;
    pool.push_back(std::move(p));
  }
  std::vector<std::int32_t> ids(memo_.size());
  in.read(reinterpret_cast<char*>(ids.data()), static_cast<std::streamsize>(ids.size() * 4));
  if (!in) return false;
  for (std::int32_t id : ids)
    if (id < -1 || id >= static_cast<std::int32_t>(pool.size())) return false;

  std::lock_guard<std::mutex> lock(intern_mu_);
  pool_ = std::move(pool);
  pool_by_hash_.clear();
  for (std::size_t i = 0; i < pool_.size(); ++i)
    pool_by_hash_.emplace(hash_partition(pool_[i]), static_cast<std::int32_t>(i));
  for (std::size_t i = 0; i < memo_.size(); ++i) memo_[i].store(ids[i], std::memory_order_release);
  return true;
}

bool SignatureStore::save_cache(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(std::filesystem::path(dir) / "signatures.bin",
                    std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(kCacheMagic, 8);
  std::lock_guard<std::mutex> lock(intern_mu_);
  std::uint32_t pool_size = static_cast<std::uint32_t>(pool_.size());
  out.write(reinterpret_cast<const char*>(&pool_size), 4);
  for (const OrbitPartition& p : pool_) {
    std::uint32_t arity = static_cast<std::uint32_t>(p.arity);
    out.write(reinterpret_cast<const char*>(&arity), 4);
    out.write(reinterpret_cast<const char*>(&p.classes), 4);
    out.write(reinterpret_cast<const char*>(p.block_of.data()),
              static_cast<std::streamsize>(p.block_of.size() * 4));
  }
  for (const auto& a : memo_) {
    std::int32_t id = a.load(std::memory_order_acquire);
    out.write(reinterpret_cast<const char*>(&id), 4);
  }
  return static_cast<bool>(out);
}

OrbitPartition oracle_orbits(GenSet gs, int k, int host_n, int depth) {
  require_arity(k);
  if (k > 4) throw std::invalid_argument("oracle_orbits: arity must be <= 4");
  for (int l = 8; l < kGenCount; ++l)
    if (gs.contains(static_cast<Gen>(l)))
      throw std::invalid_argument("oracle_orbits: labels must lie in a..h");
  if (depth < 0) throw std::invalid_argument("oracle_orbits: negative depth");

  OrderedGraph host = build_bit_graph(host_n);
  std::uint32_t n = type_count(k);

  // One embedded representative tuple per type.
  std::vector<std::vector<int>> rep(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    KType t = KType::decode(k, c);
    auto emb = embed_pattern(graph_of_type(t), host);
    if (!emb)
      throw std::runtime_error("oracle_orbits: host too small: type " + t.to_string() +
                               " does not embed into the host of size " + std::to_string(host_n));
    rep[c].resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rep[c][i] = (*emb)[t.ranks[i]];
  }

  // Graph-level one-step transforms for every vertex-level parameterization.
  struct Step {
    Gen label;
    TransformParam param;
    OrderedGraph image;
  };
  std::vector<Step> steps;
  for (int l = 0; l < 8; ++l) {
    Gen label = static_cast<Gen>(l);
    if (!gs.contains(label)) continue;
    std::vector<TransformParam> params;
    if (label == Gen::a || label == Gen::c || label == Gen::e) {
      params.push_back({});
    } else if (label == Gen::d) {
      for (int v = 0; v < host_n; ++v) params.push_back({-1, {v}});
    } else {
      for (int cut = 0; cut <= host_n; ++cut) params.push_back({cut, {}});
    }
    for (TransformParam& p : params)
      steps.push_back({label, p, concrete_transform(label, p, host)});
  }

  UnionFind uf(n);
  std::vector<std::uint8_t> seen(n);
  std::vector<std::uint32_t> frontier, next;
  std::vector<int> mapped(static_cast<std::size_t>(k));
  for (std::uint32_t start = 0; start < n; ++start) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[start] = 1;
    frontier.assign(1, start);
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
      next.clear();
      for (std::uint32_t u : frontier) {
        for (const Step& s : steps) {
          for (int i = 0; i < k; ++i)
            mapped[i] = transform_vertex(s.label, s.param, host_n, rep[u][i]);
          std::uint32_t v = type_of_tuple(s.image, mapped).code();
          uf.unite(u, v);
          if (!seen[v]) {
            seen[v] = 1;
            next.push_back(v);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return canonicalize(uf, k);
}

namespace testing_hooks {
void inject_move_table_fault(bool enabled) {
  g_move_table_fault.store(enabled, std::memory_order_relaxed);
}
bool move_table_fault_enabled() { return g_move_table_fault.load(std::memory_order_relaxed); }
}  // namespace testing_hooks

}  // namespace reductlab
