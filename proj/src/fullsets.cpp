#include "ramsey/fullsets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace ramsey::fullsets {

unsigned PartialVector::domain_mask() const {
  unsigned mask = 0;
  for (int i = 0; i < n; ++i)
    if (vals[i] >= 0) mask |= 1u << i;
  return mask;
}

std::string format_pv(const PartialVector& v) {
  std::string out;
  for (int i = 0; i < v.n; ++i) {
    if (v.vals[i] < 0) out += "·";
    else out += std::to_string(v.vals[i]);
  }
  return out;
}

PartialVector parse_pv(std::string_view text, int p) {
  PartialVector v;
  v.p = p;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "·") == 0) {
      v.vals.push_back(-1);
      ++i;  // two-byte character
    } else if (text[i] >= '0' && text[i] <= '9') {
      const int d = text[i] - '0';
      if (d >= p) throw std::invalid_argument("value exceeds modulus at position " + std::to_string(i));
      v.vals.push_back(d);
    } else {
      throw std::invalid_argument("unexpected character at position " + std::to_string(i));
    }
  }
  v.n = static_cast<int>(v.vals.size());
  return v;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<PartialVector> enumerate_space(int n, int l, int p) {
  if (n < 0 || l < 0 || l > n) throw std::invalid_argument("need 0 <= l <= n");
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (n > 20) throw std::invalid_argument("coordinate count too large");
  std::vector<PartialVector> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < n - l) continue;
    std::vector<int> coords;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) coords.push_back(i);
    std::vector<int> vals(coords.size(), 0);
    while (true) {
      PartialVector v;
      v.n = n;
      v.p = p;
      v.vals.assign(n, -1);
      for (size_t i = 0; i < coords.size(); ++i) v.vals[coords[i]] = vals[i];
      out.push_back(std::move(v));
      int pos = static_cast<int>(vals.size()) - 1;
      while (pos >= 0 && vals[pos] == p - 1) vals[pos--] = 0;
      if (pos < 0) break;
      ++vals[pos];
    }
  }
  return out;
}

namespace {

// index lookup keyed by (domain mask, values); shared by is_full and the sweep
struct SpaceIndex {
  std::map<std::pair<unsigned, std::vector<int>>, int> idx;

  explicit SpaceIndex(const std::vector<PartialVector>& space) {
    for (size_t i = 0; i < space.size(); ++i)
      idx.emplace(std::make_pair(space[i].domain_mask(), space[i].vals), static_cast<int>(i));
  }

  // restriction of the total vector w to the coordinates of mask
  int find_restriction(const std::vector<int>& w, unsigned mask) const {
    std::vector<int> vals(w.size(), -1);
    for (size_t i = 0; i < w.size(); ++i)
      if (mask & (1u << i)) vals[i] = w[i];
    const auto it = idx.find(std::make_pair(mask, vals));
    return it == idx.end() ? -1 : it->second;
  }
};

}  // namespace

std::optional<FullnessCertificate> is_full(const std::vector<char>& member, int n, int l, int p) {
  const auto space = enumerate_space(n, l, p);
  if (member.size() != space.size())
    throw std::invalid_argument("membership vector does not match the space size");
  const SpaceIndex index(space);

  std::vector<int> h(n, 0);
  while (true) {
    for (unsigned a = 0; a < (1u << n); ++a) {
      if (std::popcount(a) != n - l) continue;
      FullnessCertificate cert;
      cert.h = h;
      cert.a_mask = a;
      bool all = true;
      for (int r = 0; r < p && all; ++r) {
        std::vector<int> shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = (h[i] + r) % p;
        bool found = false;
        for (unsigned ar = a; ar < (1u << n); ++ar) {
          if ((ar & a) != a) continue;
          const int id = index.find_restriction(shifted, ar);
          if (id >= 0 && member[id]) {
            cert.a_r_masks.push_back(ar);
            found = true;
            break;
          }
        }
        all = found;
      }
      if (all) return cert;
    }
    int pos = n - 1;
    while (pos >= 0 && h[pos] == p - 1) h[pos--] = 0;
    if (pos < 0) break;
    ++h[pos];
  }
  return std::nullopt;
}

bool revalidate_certificate(const FullnessCertificate& cert, const std::vector<char>& member,
                            int n, int l, int p) {
  const auto space = enumerate_space(n, l, p);
  if (member.size() != space.size()) return false;
  const SpaceIndex index(space);
  if (static_cast<int>(cert.h.size()) != n) return false;
  if (std::popcount(cert.a_mask) != n - l) return false;
  if (static_cast<int>(cert.a_r_masks.size()) != p) return false;
  for (int r = 0; r < p; ++r) {
    const unsigned ar = cert.a_r_masks[r];
    if ((ar & cert.a_mask) != cert.a_mask) return false;
    std::vector<int> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = (cert.h[i] + r) % p;
    const int id = index.find_restriction(shifted, ar);
    if (id < 0 || !member[id]) return false;
  }
  return true;
}

namespace {

// all full subsets of one factor space, as membership bitmasks over the
// space, ascending; only usable for small spaces
std::vector<unsigned> all_full_subsets(int n, int l, int p, size_t space_size) {
  if (space_size > 16) throw std::invalid_argument("factor space too large for the product search");
  std::vector<unsigned> out;
  for (unsigned sub = 1; sub < (1u << space_size); ++sub) {
    std::vector<char> member(space_size, 0);
    for (size_t i = 0; i < space_size; ++i) member[i] = (sub >> i) & 1;
    if (is_full(member, n, l, p)) out.push_back(sub);
  }
  return out;
}

}  // namespace

FsCheckResult fs_instance_check(const std::vector<FsFactor>& factors, int colors,
                                long long coloring_cap, bool parallel) {
  if (factors.empty()) throw std::invalid_argument("at least one factor required");
  if (colors < 1) throw std::invalid_argument("colors must be >= 1");
  FsCheckResult out;

  const int k = static_cast<int>(factors.size());
  std::vector<size_t> sizes(k);
  std::vector<std::vector<unsigned>> full_subsets(k);
  size_t total = 1;
  for (int i = 0; i < k; ++i) {
    sizes[i] = enumerate_space(factors[i].n, factors[i].l, factors[i].p).size();
    // precomputed full subsets drive the product search for k >= 2; a single
    // factor only needs fullness of the color class itself (monotonicity)
    if (k > 1)
      full_subsets[i] = all_full_subsets(factors[i].n, factors[i].l, factors[i].p, sizes[i]);
    total *= sizes[i];
  }

  long long coloring_count = 1;
  for (size_t e = 0; e < total; ++e) {
    coloring_count *= colors;
    if (coloring_count > coloring_cap) {
      out.inconclusive = true;
      return out;
    }
  }

  // does some full-set product sit inside one color class?
  auto coloring_admits = [&](const std::vector<int>& coloring) -> bool {
    for (int v = 0; v < colors; ++v) {
      if (k == 1) {
        std::vector<char> in_class(total, 0);
        for (size_t e = 0; e < total; ++e) in_class[e] = coloring[e] == v;
        if (is_full(in_class, factors[0].n, factors[0].l, factors[0].p)) return true;
        continue;
      }
      std::vector<size_t> pick(k, 0);
      auto product_in_class = [&]() {
        auto walk = [&](auto&& w, int i, size_t flat) -> bool {
          if (i == k) return coloring[flat] == v;
          const unsigned sub = full_subsets[i][pick[i]];
          size_t stride = 1;
          for (int j = i + 1; j < k; ++j) stride *= sizes[j];
          for (size_t x = 0; x < sizes[i]; ++x) {
            if (!((sub >> x) & 1)) continue;
            if (!w(w, i + 1, flat + x * stride)) return false;
          }
          return true;
        };
        return walk(walk, 0, 0);
      };
      auto rec = [&](auto&& self, int factor) -> bool {
        if (factor == k) return product_in_class();
        for (size_t c = 0; c < full_subsets[factor].size(); ++c) {
          pick[factor] = c;
          if (self(self, factor + 1)) return true;
        }
        return false;
      };
      if (rec(rec, 0)) return true;
    }
    return false;
  };

  long long least_fail = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (long long code = 0; code < coloring_count; ++code) {
    std::vector<int> coloring(total);
    long long rest = code;
    for (size_t e = total; e-- > 0;) {
      coloring[e] = static_cast<int>(rest % colors);
      rest /= colors;
    }
    if (!coloring_admits(coloring)) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (least_fail < 0 || code < least_fail) least_fail = code;
      }
    }
  }

  out.colorings_checked = coloring_count;
  if (least_fail >= 0) {
    out.counterexample = least_fail;
    out.counterexample_colors.resize(total);
    long long rest = least_fail;
    for (size_t e = total; e-- > 0;) {
      out.counterexample_colors[e] = static_cast<int>(rest % colors);
      rest /= colors;
    }
  } else {
    out.holds = true;
  }
  return out;
}

}  // namespace ramsey::fullsets
