#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey::fullsets {

/// Partial function from [n] = {1..n} to Z/p.  vals[i] is the value at
/// coordinate i+1, or -1 outside the domain.
struct PartialVector {
  int n = 0;
  int p = 2;
  std::vector<int> vals;

  unsigned domain_mask() const;  // bit i-1 set iff coordinate i is defined
  bool operator==(const PartialVector& o) const = default;
};

/// Bit-exact text form: one character per coordinate, the value digit or
/// "·" outside the domain (e.g. "·1" for n = 2).
std::string format_pv(const PartialVector& v);
PartialVector parse_pv(std::string_view text, int p);

bool is_prime(int p);

/// All partial functions with domain size at least n-l, ordered by
/// (domain bitmask ascending, values ascending).  p must be prime.
std::vector<PartialVector> enumerate_space(int n, int l, int p);

/// Witness that a set is full: a total shift h, a base set a of size n-l,
/// and for each residue r a superset a_r of a with (r+h) restricted to a_r
/// in the set.
struct FullnessCertificate {
  std::vector<int> h;
  unsigned a_mask = 0;
  std::vector<unsigned> a_r_masks;  // one per residue
};

/// Search for a fullness certificate over a subset of the (n,l,p) space,
/// given as membership flags aligned with enumerate_space order.  h runs in
/// value order, a in mask order, and each a_r is the smallest workable mask.
std::optional<FullnessCertificate> is_full(const std::vector<char>& member, int n, int l, int p);

/// Direct membership re-check of a certificate.
bool revalidate_certificate(const FullnessCertificate& cert, const std::vector<char>& member,
                            int n, int l, int p);

struct FsFactor {
  int p = 2;
  int l = 0;
  int n = 0;
};

struct FsCheckResult {
  bool holds = false;
  bool inconclusive = false;
  long long colorings_checked = 0;
  long long counterexample = -1;        // least failing coloring integer
  std::vector<int> counterexample_colors;  // per product element, when failing
};

/// For fixed factors, sweep every coloring of the product of the factor
/// spaces and check that some color class contains a product of full sets,
/// one per factor.  Colorings are base-c integers ascending (element 0 most
/// significant).
FsCheckResult fs_instance_check(const std::vector<FsFactor>& factors, int colors,
                                long long coloring_cap = 1 << 20, bool parallel = true);

}  // namespace ramsey::fullsets
