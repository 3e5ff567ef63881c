#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cdgl/rational.hpp"

namespace cdgl {

// A permutation of {0,...,k-1}; img[i] is the image of slot i.  Acting on a
// tensor word w it produces the word w' with w'[i] = w[img[i]], matching the
// convention x_1 ⊗ ... ⊗ x_k  ↦  x_{σ(1)} ⊗ ... ⊗ x_{σ(k)}.
struct Permutation {
  std::vector<int> img;

  explicit Permutation(std::vector<int> v) : img(std::move(v)) {}
  static Permutation identity(int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }
  int size() const { return (int)img.size(); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  bool operator==(const Permutation& o) const { return img == o.img; }

  Permutation inverse() const {
    std::vector<int> v(img.size());
    for (int i = 0; i < size(); ++i) v[img[i]] = i;
    return Permutation(std::move(v));
  }
  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> v(a.img.size());
    for (int i = 0; i < a.size(); ++i) v[i] = a.img[b.img[i]];
    return Permutation(std::move(v));
  }
  bool valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int x : img) {
      if (x < 0 || x >= size() || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }
};

// Signature (-1)^{#inversions}.
inline int signature(const Permutation& s) {
  int inv = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (s.img[i] > s.img[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

// Koszul sign of reordering x_1 ⊗ ... ⊗ x_k into x_{σ(1)} ⊗ ... ⊗ x_{σ(k)}:
// a factor (-1)^{|x_a||x_b|} for every pair a < b whose relative order flips.
inline int koszul_sign(const Permutation& s, const std::vector<int>& degrees) {
  if ((int)degrees.size() != s.size())
    throw std::invalid_argument("koszul_sign: degree list size mismatch");
  auto inv = s.inverse();
  int sign = 1;
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      if (inv.img[a] > inv.img[b] && (degrees[a] & 1) && (degrees[b] & 1))
        sign = -sign;
  return sign;
}

// Total graded sign ε_σ·ε used throughout: signature times Koszul.
inline int graded_sign(const Permutation& s, const std::vector<int>& degrees) {
  return signature(s) * koszul_sign(s, degrees);
}

// All (i,j)-shuffles: permutations σ of {1..i+j} with σ^{-1} increasing on
// {1..i} and on {i+1..i+j}.  Count is binomial(i+j, i).
inline std::vector<Permutation> shuffles(int i, int j) {
  int k = i + j;
  std::vector<Permutation> out;
  std::vector<int> pick(i);
  // choose the (sorted) positions occupied by the first block
  std::vector<int> comb(i);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<int> invimg(k);
    std::vector<char> used(k, 0);
    for (int a = 0; a < i; ++a) {
      invimg[a] = comb[a];
      used[comb[a]] = 1;
    }
    int pos = 0;
    for (int a = i; a < k; ++a) {
      while (used[pos]) ++pos;
      invimg[a] = pos;
      used[pos] = 1;
    }
    // invimg is σ^{-1}; invert it to get σ
    std::vector<int> img(k);
    for (int a = 0; a < k; ++a) img[invimg[a]] = a;
    out.emplace_back(std::move(img));
    if (i == 0) break;
    // next combination
    int t = i - 1;
    while (t >= 0 && comb[t] == k - i + t) --t;
    if (t < 0) break;
    ++comb[t];
    for (int u = t + 1; u < i; ++u) comb[u] = comb[u - 1] + 1;
  }
  return out;
}

// Shuffles in S(i,j) fixing the first slot: σ(1) = 1.  Used by the Taylor
// recursion of the transferred infinity quasi-isomorphism.
inline std::vector<Permutation> shuffles_fixing_first(int i, int j) {
  if (i < 1) throw std::invalid_argument("shuffles_fixing_first: i >= 1");
  std::vector<Permutation> out;
  for (auto& s : shuffles(i, j))
    if (s.img[0] == 0) out.push_back(s);
  return out;
}

// All permutations of {0..k-1}.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace cdgl
