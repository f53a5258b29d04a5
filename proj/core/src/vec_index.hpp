#pragma once

// Internal: index of int vectors keyed by an additive Zobrist hash, with
// exact verification on every probe. Lookup cost is O(1) hash map access
// plus one coefficient comparison; incremental hashes let callers probe
// neighbours (v +- e_j) without rehashing the whole vector.

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace repgrowth::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class VecIndex {
 public:
  explicit VecIndex(int dim) : keys_(dim) {
    std::uint64_t seed = 0x5eedc0de0ddba11ULL;
    for (auto& k : keys_) k = splitmix64(seed);
  }

  std::uint64_t hash_of(const std::vector<int>& v) const {
    std::uint64_t h = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      h += keys_[j] * static_cast<std::uint64_t>(static_cast<std::int64_t>(v[j]));
    return h;
  }

  std::uint64_t key(int j) const { return keys_[j]; }

  // -1 if absent.
  long find(std::uint64_t h, const std::vector<int>& v) const {
    auto it = head_.find(h);
    if (it == head_.end()) return -1;
    for (std::uint32_t i = it->second; i != kNil; i = chain_[i])
      if (rows_[i] == v) return static_cast<long>(i);
    return -1;
  }

  long find(const std::vector<int>& v) const { return find(hash_of(v), v); }

  // Caller must ensure v is absent. Returns the new index.
  std::uint32_t insert(std::uint64_t h, std::vector<int> v) {
    std::uint32_t idx = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(v));
    auto [it, fresh] = head_.try_emplace(h, idx);
    chain_.push_back(fresh ? kNil : it->second);
    it->second = idx;
    return idx;
  }

  std::size_t size() const { return rows_.size(); }
  const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;
  std::vector<std::uint64_t> keys_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::uint32_t> chain_;
  std::unordered_map<std::uint64_t, std::uint32_t> head_;
};

}  // namespace repgrowth::detail
