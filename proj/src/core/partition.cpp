#include "hypertest/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "hypertest/rational.hpp"

namespace hypertest {

u32 VertexPartition::label_of(u32 v) const {
  if (v >= n) fail_invalid("vertex out of range");
  return label_[v];
}

VertexPartition make_vertex_partition(
    u32 n, const std::vector<std::vector<u32>>& parts) {
  if (parts.empty()) fail_invalid("vertex partition needs at least one part");
  VertexPartition p;
  p.n = n;
  p.parts = parts;
  p.label_.assign(n, 0);
  for (u32 i = 0; i < p.parts.size(); ++i) {
    auto& part = p.parts[i];
    std::sort(part.begin(), part.end());
    for (u32 v : part) {
      if (v >= n) fail_invalid("vertex partition contains out-of-range vertex");
      if (p.label_[v] != 0) fail_invalid("vertex partition parts overlap");
      p.label_[v] = i + 1;
    }
  }
  for (u32 v = 0; v < n; ++v)
    if (p.label_[v] == 0) fail_invalid("vertex partition does not cover all vertices");
  return p;
}

VertexPartition equipartition(u32 n, u32 t) {
  if (t == 0 || t > n) fail_invalid("equipartition part count out of range");
  VertexPartition p;
  p.n = n;
  p.label_.assign(n, 0);
  u32 base = n / t, extra = n % t;
  u32 v = 0;
  for (u32 i = 0; i < t; ++i) {
    u32 size = base + (i < extra ? 1 : 0);
    std::vector<u32> part(size);
    for (u32 s = 0; s < size; ++s) {
      part[s] = v;
      p.label_[v++] = i + 1;
    }
    p.parts.push_back(std::move(part));
  }
  return p;
}

std::vector<u32> labels_of(const VertexPartition& p, std::span<const u32> s) {
  std::vector<u32> out;
  out.reserve(s.size());
  for (u32 v : s) out.push_back(p.label_of(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_crossing(const VertexPartition& p, std::span<const u32> s) {
  std::vector<u32> seen;
  seen.reserve(s.size());
  for (u32 v : s) {
    if (v >= p.n) return false;
    seen.push_back(p.label_of(v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

// Element -> class index table; verifies disjointness and sortedness.
std::unordered_map<u64, u32> index_elements(const SetPartition& p) {
  std::unordered_map<u64, u32> where;
  for (u32 i = 0; i < p.size(); ++i) {
    const auto& cls = p[i];
    if (!std::is_sorted(cls.begin(), cls.end()) ||
        std::adjacent_find(cls.begin(), cls.end()) != cls.end())
      fail_invalid("set partition class not sorted distinct");
    for (u64 e : cls)
      if (!where.emplace(e, i).second)
        fail_invalid("set partition classes overlap");
  }
  return where;
}

}  // namespace

u64 set_partition_ground_size(const SetPartition& p) {
  return index_elements(p).size();
}

bool refines(const SetPartition& fine, const SetPartition& coarse) {
  auto fine_where = index_elements(fine);
  auto coarse_where = index_elements(coarse);
  for (const auto& [e, idx] : coarse_where) {
    (void)idx;
    if (!fine_where.count(e)) fail_invalid("refines: ground sets not nested");
  }
  constexpr u32 kOutside = UINT32_MAX;
  for (const auto& cls : fine) {
    u32 target = kOutside;
    bool first = true;
    for (u64 e : cls) {
      auto it = coarse_where.find(e);
      u32 here = it == coarse_where.end() ? kOutside : it->second;
      if (first) {
        target = here;
        first = false;
      } else if (here != target) {
        return false;
      }
    }
  }
  return true;
}

mpq_class nu_refines(const SetPartition& fine, const SetPartition& coarse) {
  auto fine_where = index_elements(fine);
  auto coarse_where = index_elements(coarse);
  for (const auto& [e, idx] : coarse_where) {
    (void)idx;
    if (!fine_where.count(e)) fail_invalid("nu_refines: ground sets not nested");
  }
  u64 ground = fine_where.size();
  if (ground == 0) return 0;
  constexpr u32 kOutside = UINT32_MAX;
  u64 total_miss = 0;
  std::unordered_map<u32, u64> overlap;
  for (const auto& cls : fine) {
    overlap.clear();
    for (u64 e : cls) {
      auto it = coarse_where.find(e);
      ++overlap[it == coarse_where.end() ? kOutside : it->second];
    }
    u64 best = 0;
    for (const auto& [tgt, cnt] : overlap) {
      (void)tgt;
      best = std::max(best, cnt);
    }
    total_miss += cls.size() - best;
  }
  return frac(total_miss, ground);
}

}  // namespace hypertest
