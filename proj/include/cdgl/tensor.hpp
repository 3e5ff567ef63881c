#pragma once

#include <map>
#include <vector>

#include "cdgl/graded.hpp"
#include "cdgl/permutations.hpp"

namespace cdgl {

// A pure tensor word: sequence of basis indices into one graded space.  The
// empty word is the unit of the tensor algebra.
using Word = std::vector<int>;

inline int word_degree(const GradedSpace& sp, const Word& w) {
  int d = 0;
  for (int i : w) d += sp.degree(i);
  return d;
}

inline std::vector<int> word_degrees(const GradedSpace& sp, const Word& w) {
  std::vector<int> d;
  d.reserve(w.size());
  for (int i : w) d.push_back(sp.degree(i));
  return d;
}

// Sparse rational combination of tensor words over one base space.  Words of
// different lengths may coexist (elements of the tensor algebra).  std::map
// keeps deterministic lexicographic iteration order.
struct TensorVec {
  SpacePtr base;
  std::map<Word, Scalar> terms;

  explicit TensorVec(SpacePtr b) : base(std::move(b)) {}
  static TensorVec zero(SpacePtr b) { return TensorVec(std::move(b)); }
  static TensorVec unit(SpacePtr b) {
    TensorVec t(std::move(b));
    t.terms[{}] = 1;
    return t;
  }
  static TensorVec single(SpacePtr b, Word w, Scalar c = 1) {
    TensorVec t(std::move(b));
    if (!is_zero(c)) t.terms[std::move(w)] = std::move(c);
    return t;
  }

  bool is_zero_vec() const { return terms.empty(); }
  void add_term(const Word& w, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  TensorVec& operator+=(const TensorVec& o) {
    for (auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  TensorVec& operator-=(const TensorVec& o) {
    for (auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  TensorVec& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      terms.clear();
      return *this;
    }
    for (auto& [w, c] : terms) c *= s;
    return *this;
  }
  friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
  friend TensorVec operator*(const Scalar& s, TensorVec a) { return a *= s; }
  bool operator==(const TensorVec& o) const { return terms == o.terms; }

  // Concatenation product of the tensor algebra (no signs: elements, not
  // operators).  Optional word-length cap for completed computations.
  friend TensorVec concat_product(const TensorVec& a, const TensorVec& b,
                                  int maxlen = -1) {
    TensorVec r(a.base);
    for (auto& [wa, ca] : a.terms)
      for (auto& [wb, cb] : b.terms) {
        if (maxlen >= 0 && (int)(wa.size() + wb.size()) > maxlen) continue;
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }

  TensorVec truncated(int maxlen) const {
    TensorVec r(base);
    for (auto& [w, c] : terms)
      if ((int)w.size() <= maxlen) r.terms.emplace(w, c);
    return r;
  }

  // Component of fixed word length.
  TensorVec length_part(int len) const {
    TensorVec r(base);
    for (auto& [w, c] : terms)
      if ((int)w.size() == len) r.terms.emplace(w, c);
    return r;
  }
  int max_length() const {
    int m = 0;
    for (auto& [w, c] : terms) m = std::max(m, (int)w.size());
    return m;
  }
};

// Action of a permutation on a word, with Koszul sign:
// x_1⊗...⊗x_k ↦ ε(σ;x) x_{σ(1)}⊗...⊗x_{σ(k)}.
inline std::pair<Word, int> permute_word(const GradedSpace& sp,
                                         const Permutation& s, const Word& w) {
  Word out(w.size());
  for (int i = 0; i < s.size(); ++i) out[i] = w[s.img[i]];
  return {out, koszul_sign(s, word_degrees(sp, w))};
}

// A formal signed sum of permutations (coefficients are the paper-level
// scalars; the Koszul sign of each rearrangement is added when acting).
struct PermSum {
  std::vector<std::pair<Permutation, Scalar>> terms;

  TensorVec apply(const TensorVec& v) const {
    TensorVec r(v.base);
    for (auto& [w, c] : v.terms)
      for (auto& [s, coef] : terms) {
        auto [pw, sign] = permute_word(*v.base, s, w);
        r.add_term(pw, c * coef * sign);
      }
    return r;
  }
};

// Symmetrization S_k = Σ_{σ∈S_k} ε_σ ε σ.
inline PermSum symmetrizer(int k) {
  PermSum ps;
  for (auto& s : all_permutations(k)) {
    Scalar c = signature(s);
    ps.terms.emplace_back(s, c);
  }
  return ps;
}

// Shuffle sum ν_k with configurable upper bound: Σ_{i=1}^{upper} Σ_{S(i,k-i)}.
// The C∞ conditions use proper shuffles, upper = k-1.
inline PermSum shuffle_sum_nu(int k, int upper) {
  if (upper < 1 || upper > k) throw std::invalid_argument("shuffle_sum_nu bound");
  PermSum ps;
  for (int i = 1; i <= upper; ++i)
    for (auto& s : shuffles(i, k - i)) {
      Scalar c = signature(s);
      ps.terms.emplace_back(s, c);
    }
  return ps;
}

// Unshuffle sum τ: same index set, acting through σ^{-1}.
inline PermSum unshuffle_sum_tau(int k, int upper) {
  PermSum ps = shuffle_sum_nu(k, upper);
  for (auto& [s, c] : ps.terms) s = s.inverse();
  return ps;
}

}  // namespace cdgl
