#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdgl {

// Rooted binary tree, planar (children ordered).  Stored as a prefix code
// over {'0','1'}: leaf = "0", graft = "1" + left + right.  The code is
// prefix-free, so plain lexicographic comparison of codes realizes the
// recursive order "leaf < graft, grafts compared (left, right)".
class PlanarTree {
 public:
  static PlanarTree leaf() { return PlanarTree("0", 1); }
  static PlanarTree graft(const PlanarTree& l, const PlanarTree& r) {
    return PlanarTree("1" + l.code_ + r.code_, l.leaves_ + r.leaves_);
  }

  bool is_leaf() const { return code_ == "0"; }
  int leaves() const { return leaves_; }
  const std::string& code() const { return code_; }

  PlanarTree left() const {
    auto [l, r] = split();
    return l;
  }
  PlanarTree right() const {
    auto [l, r] = split();
    return r;
  }
  std::pair<PlanarTree, PlanarTree> split() const {
    if (is_leaf()) throw std::logic_error("leaf has no children");
    // find the end of the left child's code after the initial '1'
    int need = 1;
    size_t i = 1;
    while (need > 0) {
      need += (code_[i] == '1') ? 1 : -1;
      ++i;
    }
    std::string lc = code_.substr(1, i - 1), rc = code_.substr(i);
    return {PlanarTree(lc, count_leaves(lc)), PlanarTree(rc, count_leaves(rc))};
  }

  bool operator==(const PlanarTree& o) const { return code_ == o.code_; }
  bool operator<(const PlanarTree& o) const { return code_ < o.code_; }

  // Nested-parentheses serialization: leaf ".", graft "(LR)".
  std::string to_string() const {
    std::string out;
    render(code_, 0, out);
    return out;
  }
  static PlanarTree parse(const std::string& s) {
    size_t pos = 0;
    PlanarTree t = parse_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing tree input");
    return t;
  }

 private:
  PlanarTree(std::string code, int leaves)
      : code_(std::move(code)), leaves_(leaves) {}
  static int count_leaves(const std::string& c) {
    int n = 0;
    for (char ch : c) n += (ch == '0');
    return n;
  }
  static size_t render(const std::string& c, size_t i, std::string& out) {
    if (c[i] == '0') {
      out += '.';
      return i + 1;
    }
    out += '(';
    size_t j = render(c, i + 1, out);
    j = render(c, j, out);
    out += ')';
    return j;
  }
  static PlanarTree parse_at(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("truncated tree string");
    if (s[pos] == '.') {
      ++pos;
      return leaf();
    }
    if (s[pos] != '(') throw std::invalid_argument("bad tree character");
    ++pos;
    PlanarTree l = parse_at(s, pos);
    PlanarTree r = parse_at(s, pos);
    if (pos >= s.size() || s[pos] != ')')
      throw std::invalid_argument("unbalanced tree string");
    ++pos;
    return graft(l, r);
  }

  std::string code_;
  int leaves_;
};

// Canonical representative of the non-planar isomorphism class: children
// sorted at every vertex.  Two planar trees canonicalize equal iff they are
// isomorphic as rooted trees.
inline PlanarTree canonicalize(const PlanarTree& t) {
  if (t.is_leaf()) return t;
  auto [l, r] = t.split();
  PlanarTree cl = canonicalize(l), cr = canonicalize(r);
  if (cr < cl) std::swap(cl, cr);
  return PlanarTree::graft(cl, cr);
}

using Tree = PlanarTree;  // a Tree is a PlanarTree in canonical form

inline bool is_canonical(const PlanarTree& t) {
  return canonicalize(t) == t;
}

// All planar rooted binary trees with k leaves; |result| = Catalan(k-1).
inline std::vector<PlanarTree> enumerate_planar(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_planar: k >= 1");
  static std::map<int, std::vector<PlanarTree>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<PlanarTree> out;
  if (k == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    for (int a = 1; a < k; ++a)
      for (auto& l : enumerate_planar(a))
        for (auto& r : enumerate_planar(k - a))
          out.push_back(PlanarTree::graft(l, r));
  }
  cache.emplace(k, out);
  return out;
}

// Canonical representatives of the isomorphism classes, one per class.
inline std::vector<Tree> enumerate_nonplanar(int k) {
  std::set<PlanarTree> seen;
  for (auto& t : enumerate_planar(k)) seen.insert(canonicalize(t));
  return std::vector<Tree>(seen.begin(), seen.end());
}

// |Aut T| by structural recursion: for T = T'∨T'' with T' ≇ T'' it is
// |Aut T'||Aut T''|; for T = R∨R it is 2|Aut R|^2.
inline long aut_order(const Tree& t) {
  if (t.is_leaf()) return 1;
  auto [l, r] = t.split();
  Tree cl = canonicalize(l), cr = canonicalize(r);
  if (cl == cr) return 2 * aut_order(cl) * aut_order(cl);
  return aut_order(cl) * aut_order(cr);
}

// The set T̄ of all planar embeddings of trees isomorphic to T.
inline std::vector<PlanarTree> planar_embeddings(const Tree& t) {
  if (t.is_leaf()) return {PlanarTree::leaf()};
  auto [l, r] = t.split();
  std::set<PlanarTree> out;
  for (auto& el : planar_embeddings(canonicalize(l)))
    for (auto& er : planar_embeddings(canonicalize(r))) {
      out.insert(PlanarTree::graft(el, er));
      out.insert(PlanarTree::graft(er, el));
    }
  return std::vector<PlanarTree>(out.begin(), out.end());
}

inline long catalan(int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

}  // namespace cdgl
