#include "ramsey/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ramsey {

SetPartition SetPartition::from_blocks(int m, std::vector<std::vector<int>> blocks) {
  if (m < 1) throw std::invalid_argument("ground set must be non-empty");
  std::vector<char> seen(m + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("blocks must be non-empty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > m) throw std::invalid_argument("element out of range");
      if (seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " repeated");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= m; ++x)
    if (!seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " missing");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SetPartition{m, std::move(blocks)};
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int m = 0;
  size_t pos = 0;
  auto flush_number = [&](size_t end) {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || p != text.data() + end)
      throw std::invalid_argument("partition parse error at position " + std::to_string(pos));
    cur.push_back(v);
    m = std::max(m, v);
    pos = end + 1;
  };
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == '|') {
      flush_number(i);
      if (i == text.size() || text[i] == '|') {
        blocks.push_back(std::move(cur));
        cur.clear();
      }
    }
  }
  return from_blocks(m, std::move(blocks));
}

std::string SetPartition::format() const {
  std::string out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) out.push_back('|');
    for (size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

int SetPartition::block_of(int x) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), x)) return static_cast<int>(b);
  throw std::out_of_range("element not in ground set");
}

bool SetPartition::is_homogeneous() const {
  for (const auto& b : blocks)
    if (b.size() != blocks.front().size()) return false;
  return true;
}

std::vector<SetPartition> enumerate_partitions(int m, int k, bool homogeneous,
                                               bool* divisibility_warning) {
  if (k < 1 || k > m) throw std::invalid_argument("need 1 <= k <= m");
  if (divisibility_warning) *divisibility_warning = false;
  if (homogeneous && m % k != 0) {
    if (divisibility_warning) *divisibility_warning = true;
    return {};
  }
  const int cap = homogeneous ? m / k : m;
  std::vector<SetPartition> out;
  std::vector<int> assign(m);  // restricted-growth string, 0-based block of element i+1
  std::vector<int> sizes(k, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (m - i < k - used) return;  // cannot open the remaining blocks
    if (i == m) {
      if (used != k) return;
      std::vector<std::vector<int>> blocks(k);
      for (int x = 0; x < m; ++x) blocks[assign[x]].push_back(x + 1);
      out.push_back(SetPartition::from_blocks(m, std::move(blocks)));
      return;
    }
    const int top = std::min(used, k - 1);
    for (int b = 0; b <= top; ++b) {
      if (sizes[b] >= cap) continue;
      assign[i] = b;
      ++sizes[b];
      self(self, i + 1, used + (b == used ? 1 : 0));
      --sizes[b];
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool is_subpartition(const SetPartition& p, const SetPartition& q) {
  if (p.ground != q.ground) throw std::invalid_argument("partitions have different ground sets");
  for (const auto& qb : q.blocks) {
    const int target = p.block_of(qb.front());
    for (int x : qb)
      if (p.block_of(x) != target) return false;
  }
  return true;
}

TreeMap to_rigid_surjection(const SetPartition& p) {
  std::vector<int> img(p.ground);
  for (int x = 1; x <= p.ground; ++x) img[x - 1] = p.block_of(x);
  return TreeMap(path_tree(p.ground), path_tree(p.block_count()), std::move(img));
}

}  // namespace ramsey
