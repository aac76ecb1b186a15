#include "ramsey/tree_map.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ramsey {

TreeMap::TreeMap(OrderedTree src, OrderedTree tgt, std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), image_of(std::move(img)) {
  if (static_cast<int>(image_of.size()) != source.size())
    throw std::invalid_argument("map must assign an image to every source node");
  for (int v : image_of)
    if (v < 0 || v >= target.size())
      throw std::invalid_argument("image index out of range");
}

TreeMap TreeMap::identity(const OrderedTree& t) {
  std::vector<int> img(t.size());
  for (int v = 0; v < t.size(); ++v) img[v] = v;
  return TreeMap(t, t, std::move(img));
}

bool is_morphism(const TreeMap& e) {
  const auto& s = e.source;
  const auto& t = e.target;
  if (e(0) != 0) return false;
  for (int v = 0; v < s.size(); ++v)
    for (int w = v + 1; w < s.size(); ++w) {
      if (e(v) > e(w)) return false;  // lex order is index order
      if (e(s.meet(v, w)) != t.meet(e(v), e(w))) return false;
    }
  return true;
}

bool is_embedding(const TreeMap& e) {
  std::vector<int> img = e.image_of;
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  return is_morphism(e);
}

std::vector<TreeMap> enumerate_embeddings(const OrderedTree& s, const OrderedTree& t) {
  std::vector<TreeMap> out;
  if (s.size() > t.size()) return out;
  std::vector<int> img(s.size(), -1);
  // monotone + injective forces strictly increasing images; root goes to root
  auto rec = [&](auto&& self, int v) -> void {
    if (v == s.size()) {
      out.emplace_back(s, t, img);
      return;
    }
    const int lo = v == 0 ? 0 : img[v - 1] + 1;
    const int hi = t.size() - (s.size() - v);  // leave room for the rest
    for (int w = lo; w <= hi; ++w) {
      if (v == 0 && w != 0) break;
      img[v] = w;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = img[s.meet(u, v)] == t.meet(img[u], w);
      if (ok) self(self, v + 1);
    }
    img[v] = -1;
  };
  rec(rec, 0);
  return out;
}

bool galois_verify(const GaloisPair& p) {
  const auto& f = p.f;
  const auto& e = p.e;
  if (!(f.source == e.target) || !(f.target == e.source)) return false;
  for (int w = 0; w < f.source.size(); ++w)
    if (!f.source.is_ancestor(e(f(w)), w)) return false;
  for (int v = 0; v < e.source.size(); ++v)
    if (f(e(v)) != v) return false;
  return true;
}

std::optional<GaloisPair> rigid_adjoint(const TreeMap& f) {
  const int ns = f.target.size();
  std::vector<int> least_preimage(ns, -1);
  for (int w = 0; w < f.source.size(); ++w)
    if (least_preimage[f(w)] < 0) least_preimage[f(w)] = w;
  for (int v = 0; v < ns; ++v)
    if (least_preimage[v] < 0) return std::nullopt;  // not surjective
  TreeMap e(f.target, f.source, least_preimage);
  if (!is_morphism(e)) return std::nullopt;
  GaloisPair pair{f, std::move(e)};
  if (!galois_verify(pair)) return std::nullopt;
  return pair;
}

bool is_rigid_surjection(const TreeMap& f) { return rigid_adjoint(f).has_value(); }

bool is_sealed(const TreeMap& f) {
  const int last_s = f.target.size() - 1;
  const int last_t = f.source.size() - 1;
  if (f(last_t) != last_s) return false;
  for (int w = 0; w < last_t; ++w)
    if (f(w) == last_s) return false;
  return true;
}

std::vector<TreeMap> enumerate_rigid_surjections(const OrderedTree& t, const OrderedTree& s,
                                                 bool sealed_only) {
  std::vector<TreeMap> out;
  const int nt = t.size(), ns = s.size();
  if (ns > nt) return out;
  std::vector<int> img(nt, -1);
  std::vector<int> least_preimage(ns, -1);

  // Images are assigned in preorder.  The adjoint candidate e(v) is the first
  // preimage of v; monotonicity of e forces new target values to appear in
  // index order, and the connection law forces e(v) to lie below every later
  // preimage of v.
  auto rec = [&](auto&& self, int w, int seen) -> void {
    if (w == nt) {
      if (seen == ns) {
        TreeMap f(t, s, img);
        if (auto pair = rigid_adjoint(f)) {
          if (!sealed_only || is_sealed(f)) out.push_back(std::move(f));
        }
      }
      return;
    }
    if (ns - seen > nt - w) return;  // cannot reach surjectivity
    const int vmax = std::min(seen, ns - 1);
    for (int v = 0; v <= vmax; ++v) {
      if (w == 0 && v != 0) break;  // root maps to root
      if (sealed_only && v == ns - 1 && w != nt - 1) continue;
      if (sealed_only && w == nt - 1 && v != ns - 1) continue;
      if (v == seen) {
        // new value: check the meet condition of the partial adjoint
        least_preimage[v] = w;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          ok = least_preimage[s.meet(u, v)] == t.meet(least_preimage[u], w);
        if (ok) {
          img[w] = v;
          self(self, w + 1, seen + 1);
          img[w] = -1;
        }
        least_preimage[v] = -1;
      } else {
        if (!t.is_ancestor(least_preimage[v], w)) continue;
        img[w] = v;
        self(self, w + 1, seen);
        img[w] = -1;
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<TreeMap> enumerate_rigid_surjections_naive(const OrderedTree& t, const OrderedTree& s,
                                                       bool sealed_only) {
  std::vector<TreeMap> out;
  const int nt = t.size(), ns = s.size();
  std::vector<int> img(nt, 0);
  while (true) {
    TreeMap f(t, s, img);
    if ((!sealed_only || is_sealed(f)) && is_rigid_surjection(f)) out.push_back(f);
    int pos = nt - 1;
    while (pos >= 0 && img[pos] == ns - 1) img[pos--] = 0;
    if (pos < 0) break;
    ++img[pos];
  }
  return out;
}

TreeMap truncate_map(const TreeMap& f, int v) {
  auto pair = rigid_adjoint(f);
  if (!pair) throw std::invalid_argument("truncate_map requires a rigid surjection");
  if (v < 0 || v >= f.target.size()) throw std::out_of_range("image vertex out of range");
  const int ev = pair->e(v);
  std::vector<int> img(f.image_of.begin(), f.image_of.begin() + ev + 1);
  return TreeMap(f.source.initial_segment(ev), f.target.initial_segment(v), std::move(img));
}

TreeMap truncate_map_once(const TreeMap& f) {
  if (f.target.size() == 1) return f;
  return truncate_map(f, f.target.size() - 2);
}

TreeMap compose(const TreeMap& outer, const TreeMap& inner) {
  if (!(inner.target == outer.source))
    throw std::invalid_argument("compose: inner image tree must equal outer domain tree");
  std::vector<int> img(inner.source.size());
  for (int v = 0; v < inner.source.size(); ++v) img[v] = outer(inner(v));
  return TreeMap(inner.source, outer.target, std::move(img));
}

std::string format_map(const TreeMap& m) {
  std::string out = m.source.encode() + " -> " + m.target.encode() + " : ";
  for (size_t i = 0; i < m.image_of.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(m.image_of[i]);
  }
  return out;
}

TreeMap parse_map(std::string_view text) {
  const auto arrow = text.find(" -> ");
  if (arrow == std::string_view::npos) throw std::invalid_argument("map parse error: missing ' -> '");
  const auto colon = text.find(" : ", arrow + 4);
  if (colon == std::string_view::npos) throw std::invalid_argument("map parse error: missing ' : '");
  OrderedTree src = OrderedTree::decode(text.substr(0, arrow));
  OrderedTree tgt = OrderedTree::decode(text.substr(arrow + 4, colon - arrow - 4));
  std::vector<int> img;
  std::string_view list = text.substr(colon + 3);
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t next = list.find(',', pos);
    if (next == std::string_view::npos) next = list.size();
    int value = 0;
    auto [p, ec] = std::from_chars(list.data() + pos, list.data() + next, value);
    if (ec != std::errc() || p != list.data() + next)
      throw std::invalid_argument("map parse error: bad index list");
    img.push_back(value);
    pos = next + 1;
    if (next == list.size()) break;
  }
  return TreeMap(std::move(src), std::move(tgt), std::move(img));
}

}  // namespace ramsey
