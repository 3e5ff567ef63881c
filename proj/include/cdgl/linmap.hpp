#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgl/tensor.hpp"

namespace cdgl {

// A tensor power of a graded base space.  Arity 0 is the ground field.
struct TensorSpace {
  SpacePtr base;
  int arity = 1;

  int word_deg(const Word& w) const { return word_degree(*base, w); }
  bool compatible(const TensorSpace& o) const {
    return arity == o.arity && base->same_basis(*o.base);
  }
  // Enumerate all basis words of this power.
  std::vector<Word> words() const {
    std::vector<Word> out;
    Word cur(arity, 0);
    if (arity == 0) {
      out.push_back({});
      return out;
    }
    int n = base->dim();
    if (n == 0) return out;
    while (true) {
      out.push_back(cur);
      int i = arity - 1;
      while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
    return out;
  }
};

// Degree-homogeneous sparse linear map between tensor powers.  Stored
// column-wise: image of each source basis word.  Every nonzero entry (w, v)
// satisfies deg(w) = deg(v) + degree.
struct GradedLinearMap {
  TensorSpace src, dst;
  int degree = 0;
  std::map<Word, std::map<Word, Scalar>> cols;

  GradedLinearMap(TensorSpace s, TensorSpace d, int deg)
      : src(std::move(s)), dst(std::move(d)), degree(deg) {}

  static GradedLinearMap zero(TensorSpace s, TensorSpace d, int deg) {
    return GradedLinearMap(std::move(s), std::move(d), deg);
  }
  static GradedLinearMap identity(const TensorSpace& sp) {
    GradedLinearMap m(sp, sp, 0);
    for (auto& w : sp.words()) m.cols[w][w] = 1;
    return m;
  }

  void set_entry(const Word& dstw, const Word& srcw, const Scalar& c) {
    if (is_zero(c)) return;
    if (dst.word_deg(dstw) != src.word_deg(srcw) + degree)
      throw std::invalid_argument("GradedLinearMap: entry violates degree");
    auto& col = cols[srcw];
    auto [it, fresh] = col.emplace(dstw, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) col.erase(it);
    }
    if (col.empty()) cols.erase(srcw);
  }

  bool is_zero_map() const {
    for (auto& [w, col] : cols)
      if (!col.empty()) return false;
    return true;
  }

  // Image of a source basis word as a TensorVec over dst.base (length dst.arity).
  TensorVec apply_word(const Word& w) const {
    TensorVec r(dst.base);
    auto it = cols.find(w);
    if (it != cols.end())
      for (auto& [dw, c] : it->second) r.terms.emplace(dw, c);
    return r;
  }

  TensorVec apply(const TensorVec& v) const {
    TensorVec r(dst.base);
    for (auto& [w, c] : v.terms) {
      auto it = cols.find(w);
      if (it == cols.end()) continue;
      for (auto& [dw, e] : it->second) r.add_term(dw, c * e);
    }
    return r;
  }

  GradedLinearMap& operator+=(const GradedLinearMap& o) {
    for (auto& [w, col] : o.cols)
      for (auto& [dw, c] : col) set_entry(dw, w, c);
    return *this;
  }
  GradedLinearMap& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      cols.clear();
      return *this;
    }
    for (auto& [w, col] : cols)
      for (auto& [dw, c] : col) c *= s;
    return *this;
  }
  friend GradedLinearMap operator+(GradedLinearMap a, const GradedLinearMap& b) {
    return a += b;
  }
  friend GradedLinearMap operator*(const Scalar& s, GradedLinearMap a) {
    return a *= s;
  }
  friend GradedLinearMap operator-(GradedLinearMap a, const GradedLinearMap& b) {
    GradedLinearMap nb = b;
    nb *= Scalar(-1);
    return a += nb;
  }
  bool operator==(const GradedLinearMap& o) const {
    if (degree != o.degree) return false;
    GradedLinearMap d = *this - o;
    return d.is_zero_map();
  }
};

// g ∘ f.
inline GradedLinearMap compose(const GradedLinearMap& g,
                               const GradedLinearMap& f) {
  GradedLinearMap r(f.src, g.dst, f.degree + g.degree);
  for (auto& [w, col] : f.cols) {
    std::map<Word, Scalar> acc;
    for (auto& [mw, c] : col) {
      auto it = g.cols.find(mw);
      if (it == g.cols.end()) continue;
      for (auto& [dw, e] : it->second) {
        auto [jt, fresh] = acc.emplace(dw, c * e);
        if (!fresh) jt->second += c * e;
      }
    }
    for (auto& [dw, c] : acc)
      if (!is_zero(c)) r.cols[w][dw] = c;
  }
  return r;
}

// f ⊗ g with the Koszul rule (f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y).
inline GradedLinearMap tensor(const GradedLinearMap& f,
                              const GradedLinearMap& g) {
  TensorSpace s{f.src.base, f.src.arity + g.src.arity};
  TensorSpace d{f.dst.base, f.dst.arity + g.dst.arity};
  GradedLinearMap r(s, d, f.degree + g.degree);
  for (auto& [wf, colf] : f.cols) {
    int sign = ((g.degree & 1) && (f.src.word_deg(wf) & 1)) ? -1 : 1;
    for (auto& [wg, colg] : g.cols) {
      Word w = wf;
      w.insert(w.end(), wg.begin(), wg.end());
      auto& col = r.cols[w];
      for (auto& [dwf, cf] : colf)
        for (auto& [dwg, cg] : colg) {
          Word dw = dwf;
          dw.insert(dw.end(), dwg.begin(), dwg.end());
          Scalar c = cf * cg * sign;
          auto [it, fresh] = col.emplace(std::move(dw), c);
          if (!fresh) it->second += c;
        }
      if (col.empty()) r.cols.erase(w);
    }
  }
  return r;
}

inline GradedLinearMap tensor_power(const GradedLinearMap& f, int k) {
  if (k == 0) {
    TensorSpace s{f.src.base, 0}, d{f.dst.base, 0};
    GradedLinearMap r(s, d, 0);
    r.cols[{}][{}] = 1;
    return r;
  }
  GradedLinearMap r = f;
  for (int i = 1; i < k; ++i) r = tensor(r, f);
  return r;
}

// Signed-permutation sum as a map on a tensor power (Koszul signs included
// through the action; coefficients are the stored scalars).
inline GradedLinearMap perm_sum_map(const PermSum& ps, const TensorSpace& sp) {
  GradedLinearMap r(sp, sp, 0);
  for (auto& w : sp.words()) {
    TensorVec v = TensorVec::single(sp.base, w);
    TensorVec img = ps.apply(v);
    for (auto& [dw, c] : img.terms) r.set_entry(dw, w, c);
  }
  return r;
}

// Canonical degree ±1 isomorphism V → suspend(V, shift) for shift = ±1.
inline GradedLinearMap suspension_iso(const SpacePtr& v, int shift) {
  SpacePtr sv = suspend(v, shift);
  GradedLinearMap m({v, 1}, {sv, 1}, shift);
  for (int i = 0; i < v->dim(); ++i) m.cols[{i}][{i}] = 1;
  return m;
}

// Block swap V^{⊗a} ⊗ V^{⊗b} → V^{⊗b} ⊗ V^{⊗a} with Koszul sign.
inline GradedLinearMap block_swap(const SpacePtr& base, int a, int b) {
  TensorSpace sp{base, a + b};
  GradedLinearMap r(sp, sp, 0);
  for (auto& w : sp.words()) {
    Word out(w.begin() + a, w.end());
    out.insert(out.end(), w.begin(), w.begin() + a);
    int da = 0, db = 0;
    for (int i = 0; i < a; ++i) da += base->degree(w[i]);
    for (int i = a; i < a + b; ++i) db += base->degree(w[i]);
    int sign = ((da & 1) && (db & 1)) ? -1 : 1;
    r.set_entry(out, w, sign);
  }
  return r;
}

}  // namespace cdgl
