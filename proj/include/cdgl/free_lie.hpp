#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdgl/tensor.hpp"

namespace cdgl {

struct NotALiePolynomial : std::runtime_error {
  int word_length;
  explicit NotALiePolynomial(int len)
      : std::runtime_error("tensor component of word length " +
                           std::to_string(len) + " is not a Lie polynomial"),
        word_length(len) {}
};

// Basis element of the free graded Lie algebra in the super-Lyndon basis:
// the standard bracketing b_w of a Lyndon word w, or [b_w, b_w] for w with
// b_w of odd degree.
struct LieKey {
  Word w;
  bool squared = false;

  int length() const { return (int)w.size() * (squared ? 2 : 1); }
  bool operator<(const LieKey& o) const {
    if (length() != o.length()) return length() < o.length();
    if (w != o.w) return w < o.w;
    return squared < o.squared;
  }
  bool operator==(const LieKey& o) const {
    return w == o.w && squared == o.squared;
  }
};

inline bool is_lyndon(const Word& w) {
  // w is Lyndon iff it is strictly smaller than each of its proper suffixes
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    Word suf(w.begin() + i, w.end());
    if (!(w < suf)) return false;
  }
  return true;
}

// Standard factorization of a Lyndon word of length >= 2: w = uv with v the
// lexicographically smallest proper suffix; both factors are Lyndon.
inline std::pair<Word, Word> lyndon_factorize(const Word& w) {
  size_t best = 1;
  Word bestsuf(w.begin() + 1, w.end());
  for (size_t i = 2; i < w.size(); ++i) {
    Word suf(w.begin() + i, w.end());
    if (suf < bestsuf) {
      bestsuf = suf;
      best = i;
    }
  }
  return {Word(w.begin(), w.begin() + best), bestsuf};
}

// Graded commutator of homogeneous tensor elements: [a,b] = ab - (-1)^{|a||b|} ba.
inline TensorVec graded_commutator(const TensorVec& a, int dega,
                                   const TensorVec& b, int degb,
                                   int maxlen = -1) {
  TensorVec r = concat_product(a, b, maxlen);
  TensorVec ba = concat_product(b, a, maxlen);
  int sign = ((dega & 1) && (degb & 1)) ? 1 : -1;  // minus (-1)^{|a||b|}
  r += sign * ba;
  return r;
}

// Expansion of a super-Lyndon basis element into the tensor algebra.
inline TensorVec lie_expand(const SpacePtr& gens, const LieKey& k) {
  if (!k.squared && k.w.size() == 1)
    return TensorVec::single(gens, k.w);
  Word u, v;
  if (k.squared) {
    u = k.w;
    v = k.w;
  } else {
    std::tie(u, v) = lyndon_factorize(k.w);
  }
  TensorVec a = lie_expand(gens, LieKey{u, false});
  TensorVec b = lie_expand(gens, LieKey{v, false});
  return graded_commutator(a, word_degree(*gens, u), b, word_degree(*gens, v));
}

// Element of the completed free graded Lie algebra, truncated at bracket
// length `trunc`, in the super-Lyndon basis.
struct LieSeries {
  SpacePtr gens;
  int trunc;
  std::map<LieKey, Scalar> terms;

  LieSeries(SpacePtr g, int n) : gens(std::move(g)), trunc(n) {}
  static LieSeries zero(SpacePtr g, int n) { return LieSeries(std::move(g), n); }
  static LieSeries generator(const SpacePtr& g, int idx, int n) {
    LieSeries s(g, n);
    s.terms[LieKey{{idx}, false}] = 1;
    return s;
  }

  bool is_zero_series() const { return terms.empty(); }
  void add_term(const LieKey& k, const Scalar& c) {
    if (is_zero(c) || k.length() > trunc) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  LieSeries& operator+=(const LieSeries& o) {
    for (auto& [k, c] : o.terms) add_term(k, c);
    return *this;
  }
  LieSeries& operator-=(const LieSeries& o) {
    for (auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
  }
  LieSeries& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      terms.clear();
      return *this;
    }
    for (auto& [k, c] : terms) c *= s;
    return *this;
  }
  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
  friend LieSeries operator*(const Scalar& s, LieSeries a) { return a *= s; }
  bool operator==(const LieSeries& o) const { return terms == o.terms; }

  bool is_homogeneous(int* deg_out = nullptr) const {
    bool first = true;
    int deg = 0;
    for (auto& [k, c] : terms) {
      int d = word_degree(*gens, k.w) * (k.squared ? 2 : 1);
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        return false;
      }
    }
    if (deg_out) *deg_out = deg;
    return true;
  }
  // Degree of a homogeneous series (throws if mixed).
  int degree() const {
    int d;
    if (terms.empty()) return 0;
    if (!is_homogeneous(&d)) throw std::logic_error("mixed-degree Lie series");
    return d;
  }
};

inline TensorVec lie_to_tensor(const LieSeries& x) {
  TensorVec r(x.gens);
  for (auto& [k, c] : x.terms) {
    TensorVec e = lie_expand(x.gens, k);
    e *= c;
    r += e;
  }
  return r;
}

// Converts a Lie tensor into the super-Lyndon basis by triangular
// elimination on the lexicographically least word of each stratum.  Throws
// NotALiePolynomial if the element is not Lie.
inline LieSeries tensor_to_lie(const TensorVec& t, int trunc) {
  LieSeries out(t.base, trunc);
  for (int len = 1; len <= trunc; ++len) {
    TensorVec rem = t.length_part(len);
    while (!rem.terms.empty()) {
      const Word& w = rem.terms.begin()->first;
      const Scalar& cw = rem.terms.begin()->second;
      LieKey key;
      Scalar lead;
      if (is_lyndon(w)) {
        key = LieKey{w, false};
        lead = 1;
      } else if (len % 2 == 0) {
        Word half(w.begin(), w.begin() + len / 2);
        Word rest(w.begin() + len / 2, w.end());
        if (half == rest && is_lyndon(half) &&
            (word_degree(*t.base, half) & 1)) {
          key = LieKey{half, true};
          lead = 2;
        } else {
          throw NotALiePolynomial(len);
        }
      } else {
        throw NotALiePolynomial(len);
      }
      Scalar c = cw / lead;
      TensorVec e = lie_expand(t.base, key);
      e *= c;
      rem -= e;
      if (rem.terms.count(w)) throw NotALiePolynomial(len);
      out.add_term(key, c);
    }
  }
  return out;
}

// Left-bracketing Dynkin map on a fixed-length tensor component:
// x_1 x_2 ... x_k ↦ [...[[x_1,x_2],x_3]...,x_k] expanded in T(V).
inline TensorVec dynkin_left_bracket(const TensorVec& t, int len) {
  TensorVec r(t.base);
  for (auto& [w, c] : t.terms) {
    if ((int)w.size() != len) continue;
    TensorVec cur = TensorVec::single(t.base, {w[0]});
    int curdeg = t.base->degree(w[0]);
    for (int i = 1; i < len; ++i) {
      TensorVec xi = TensorVec::single(t.base, {w[i]});
      int di = t.base->degree(w[i]);
      cur = graded_commutator(cur, curdeg, xi, di);
      curdeg += di;
    }
    cur *= c;
    r += cur;
  }
  return r;
}

// Graded Dynkin-Specht-Wever test: a length-k component is Lie iff the
// left-bracketing map multiplies it by k (characteristic zero).
inline bool dynkin_is_lie(const TensorVec& t, int* bad_length = nullptr) {
  for (int len = 1; len <= t.max_length(); ++len) {
    TensorVec part = t.length_part(len);
    if (part.terms.empty()) continue;
    TensorVec d = dynkin_left_bracket(part, len);
    TensorVec scaled = part;
    scaled *= Scalar((long)len);
    if (!(d == scaled)) {
      if (bad_length) *bad_length = len;
      return false;
    }
  }
  return true;
}

// Membership test + conversion to the Lyndon basis.  Precondition: no
// length-0 component.
inline LieSeries dynkin_project(const TensorVec& t, int trunc) {
  if (t.terms.count(Word{}))
    throw std::invalid_argument("dynkin_project: constant term present");
  int bad = 0;
  TensorVec tt = t.truncated(trunc);
  if (!dynkin_is_lie(tt, &bad)) throw NotALiePolynomial(bad);
  return tensor_to_lie(tt, trunc);
}

inline LieSeries lie_bracket(const LieSeries& x, const LieSeries& y) {
  if (!x.gens->same_basis(*y.gens) || x.trunc != y.trunc)
    throw std::invalid_argument("lie_bracket: mismatched spaces/truncations");
  TensorVec r(x.gens);
  for (auto& [kx, cx] : x.terms) {
    int dx = word_degree(*x.gens, kx.w) * (kx.squared ? 2 : 1);
    TensorVec ex = lie_expand(x.gens, kx);
    for (auto& [ky, cy] : y.terms) {
      if (kx.length() + ky.length() > x.trunc) continue;
      int dy = word_degree(*y.gens, ky.w) * (ky.squared ? 2 : 1);
      TensorVec ey = lie_expand(y.gens, ky);
      TensorVec c = graded_commutator(ex, dx, ey, dy, x.trunc);
      c *= cx * cy;
      r += c;
    }
  }
  return tensor_to_lie(r, x.trunc);
}

// Applies a graded derivation determined by its values on generators.
// `images[i]` is the value on generator i (degree |gen_i| + deg_shift).
inline LieSeries derivation_apply(const std::vector<LieSeries>& images,
                                  int deg_shift, const LieSeries& x) {
  TensorVec tx = lie_to_tensor(x);
  TensorVec out(x.gens);
  for (auto& [w, c] : tx.terms) {
    int prefix_deg = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int sign = ((deg_shift & 1) && (prefix_deg & 1)) ? -1 : 1;
      // prefix ⊗ image(w[i]) ⊗ suffix
      TensorVec img = lie_to_tensor(images[w[i]]);
      for (auto& [iw, ic] : img.terms) {
        if ((int)(w.size() - 1 + iw.size()) > x.trunc) continue;
        Word nw(w.begin(), w.begin() + i);
        nw.insert(nw.end(), iw.begin(), iw.end());
        nw.insert(nw.end(), w.begin() + i + 1, w.end());
        out.add_term(nw, c * ic * sign);
      }
      prefix_deg += x.gens->degree(w[i]);
    }
  }
  return tensor_to_lie(out, x.trunc);
}

// Substitutes generators by Lie series in a (possibly different) target
// algebra: the unique Lie morphism extension, computed through the tensor
// algebra.  images[i] may be zero.
inline LieSeries morphism_apply(const std::vector<LieSeries>& images,
                                const SpacePtr& target_gens, int target_trunc,
                                const LieSeries& x) {
  TensorVec tx = lie_to_tensor(x);
  TensorVec out(target_gens);
  for (auto& [w, c] : tx.terms) {
    TensorVec acc = TensorVec::unit(target_gens);
    acc *= c;
    for (int gi : w) {
      if (acc.terms.empty()) break;
      acc = concat_product(acc, lie_to_tensor(images[gi]), target_trunc);
    }
    out += acc;
  }
  return tensor_to_lie(out, target_trunc);
}

// exp of a tensor-algebra element with no constant term, truncated.
inline TensorVec tensor_exp(const TensorVec& x, int trunc) {
  TensorVec r = TensorVec::unit(x.base);
  TensorVec pow = TensorVec::unit(x.base);
  Scalar fact = 1;
  for (int j = 1; j <= trunc; ++j) {
    pow = concat_product(pow, x, trunc);
    fact *= (long)j;
    TensorVec term = pow;
    term *= Scalar(1) / fact;
    r += term;
    if (pow.terms.empty()) break;
  }
  return r;
}

// log of 1 + u for u with no constant term, truncated.
inline TensorVec tensor_log1p(const TensorVec& u, int trunc) {
  TensorVec r(u.base);
  TensorVec pow = TensorVec::unit(u.base);
  for (int j = 1; j <= trunc; ++j) {
    pow = concat_product(pow, u, trunc);
    if (pow.terms.empty()) break;
    TensorVec term = pow;
    term *= Scalar((j & 1) ? 1 : -1, (long)j);
    r += term;
  }
  return r;
}

// Baker-Campbell-Hausdorff product up to bracket length N, computed by
// exp/log in the truncated tensor algebra followed by the Dynkin projection.
inline LieSeries bch(const LieSeries& x, const LieSeries& y, int N) {
  if (!x.terms.empty() && x.degree() != 0)
    throw std::invalid_argument("bch: x must have degree 0");
  if (!y.terms.empty() && y.degree() != 0)
    throw std::invalid_argument("bch: y must have degree 0");
  TensorVec ex = tensor_exp(lie_to_tensor(x).truncated(N), N);
  TensorVec ey = tensor_exp(lie_to_tensor(y).truncated(N), N);
  TensorVec prod = concat_product(ex, ey, N);
  prod.add_term({}, -1);
  TensorVec lg = tensor_log1p(prod, N);
  return dynkin_project(lg, N);
}

inline std::string bracket_string(const SpacePtr& gens, const LieKey& k) {
  if (k.squared) {
    LieKey base{k.w, false};
    std::string s = bracket_string(gens, base);
    return "[" + s + "," + s + "]";
  }
  if (k.w.size() == 1) return gens->label(k.w[0]);
  auto [u, v] = lyndon_factorize(k.w);
  return "[" + bracket_string(gens, LieKey{u, false}) + "," +
         bracket_string(gens, LieKey{v, false}) + "]";
}

}  // namespace cdgl
