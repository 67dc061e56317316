#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "reductlab/relations.hpp"
#include "reductlab/transforms.hpp"

namespace reductlab {

/// Partition of the k-type space into orbits of a generated group.
/// Blocks are numbered canonically by first occurrence, so the
/// representation is deterministic and directly comparable.
struct OrbitPartition {
  int arity = 1;
  std::uint32_t classes = 0;
  std::vector<std::uint32_t> block_of;  // canonical block id per type code

  bool same_block(std::uint32_t u, std::uint32_t v) const { return block_of[u] == block_of[v]; }
  std::vector<std::vector<std::uint32_t>> blocks() const;

  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

// Orbit closure: every type starts in its own block; every parameterized
// move of every listed label unites source and images.
OrbitPartition orbit_partition(GenSet gs, int k);

// True iff r is a union of blocks of the partition.
bool preserves(const OrbitPartition& p, const Relation& r);
bool preserves(GenSet gs, const Relation& r);

// Direct one-step check used as an independent equivalence test:
// every move image of every member is again a member.
bool preserves_direct(GenSet gs, const Relation& r);

// p1 refines p2: every block of p1 lies inside a block of p2.
bool refines(const OrbitPartition& p1, const OrbitPartition& p2);

/// Canonical fingerprint of a generated group: interned partition ids for
/// arities 1..5.  Equal signatures <=> the engine identifies the groups.
using Signature = std::array<std::int32_t, 5>;

/// Memoized signature computation over all subsets of the eleven labels.
/// Partitions are computed incrementally (subset minus its highest label)
/// and interned, so equal partitions share storage.  Thread-safe.
class SignatureStore {
 public:
  SignatureStore();

  const OrbitPartition& partition(GenSet gs, int k);
  Signature signature(GenSet gs);
  bool same_signature(GenSet a, GenSet b) { return signature(a) == signature(b); }

  // Computes every subset's signature, parallelized level by level.
  void precompute_all(int threads = 0);

  // Binary signature cache under dir (REDUCTLAB_CACHE); best effort.
  bool load_cache(const std::string& dir);
  bool save_cache(const std::string& dir);

  const OrbitPartition& interned(std::int32_t id) const { return pool_[static_cast<std::size_t>(id)]; }

 private:
  std::int32_t compute(std::uint16_t mask, int k);
  std::int32_t intern(OrbitPartition&& p);

  std::deque<OrbitPartition> pool_;
  std::unordered_multimap<std::uint64_t, std::int32_t> pool_by_hash_;
  std::mutex intern_mu_;
  std::vector<std::atomic<std::int32_t>> memo_;  // (mask * 5 + arity-1) -> pool id
};

// Independent brute-force oracle on a concrete host graph: starts from one
// embedded representative tuple per type, applies graph-level transform
// compositions up to the move budget, and re-reads types of the images.
// Labels must lie in a..h; arity must be <= 4.  Throws "host too small"
// when some representative does not embed.
OrbitPartition oracle_orbits(GenSet gs, int k, int host_n, int depth);

namespace testing_hooks {
// Self-test hook: corrupts one entry of the complement move table during
// closure, so that verification fails naming the broken invariant.
void inject_move_table_fault(bool enabled);
bool move_table_fault_enabled();
}  // namespace testing_hooks

}  // namespace reductlab
