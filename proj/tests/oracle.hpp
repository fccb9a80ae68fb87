// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Reference implementations used only by the tests. They share no code with
// the library: slow, table-driven, written for obviousness.

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

using Poly = std::vector<int>;  // coefficients mod p, constant term first

inline int mod(long long a, int p) {
  const long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

/// Remainder of f by monic g over GF(p), schoolbook long division.
inline Poly remainder(Poly f, const Poly& g, int p) {
  const int dg = degree(g);
  for (int d = degree(f); d >= dg; d = degree(f)) {
    const int c = f[d];
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = mod(f[d - dg + i] - static_cast<long long>(c) * g[i], p);
  }
  return f;
}

/// Irreducible iff no monic polynomial of degree 1..deg/2 divides it.
inline bool irreducible_by_divisor_scan(const Poly& f, int p) {
  const int n = degree(f);
  for (int d = 1; d <= n / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      int rest = idx;
      for (int i = 0; i < d; ++i, rest /= p) g[i] = rest % p;
      g[d] = 1;
      if (degree(remainder(f, g, p)) < 0) return false;
    }
  }
  return true;
}

/// First monic irreducible of degree k with (c_0, ..., c_{k-1}) read as a
/// base-p numeral, c_0 most significant. Degree 1 uses t.
inline Poly first_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    int rest = idx;
    for (int i = k - 1; i >= 0; --i, rest /= p) f[i] = rest % p;
    f[k] = 1;
    if (f[0] != 0 && irreducible_by_divisor_scan(f, p)) return f;
  }
  throw std::logic_error("no irreducible");
}

/// GF(p^k) as element indices 0..p^k-1 (base-p digits c_0 most significant)
/// with full addition and multiplication tables.
class Field {
 public:
  Field(int p, int k) : p_(p), k_(k), modulus_(first_irreducible(p, k)) {
    size_ = 1;
    for (int i = 0; i < k; ++i) size_ *= p;
    add_.assign(static_cast<std::size_t>(size_) * size_, 0);
    mul_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) {
        const Poly pa = digits(a), pb = digits(b);
        Poly sum(k, 0);
        Poly prod(2 * k, 0);
        for (int i = 0; i < k; ++i) {
          sum[i] = mod(pa[i] + pb[i], p);
          for (int j = 0; j < k; ++j) prod[i + j] = mod(prod[i + j] + pa[i] * pb[j], p);
        }
        add_[a * size_ + b] = index(sum);
        Poly r = k == 1 ? Poly{prod[0]} : remainder(prod, modulus_, p);
        r.resize(k, 0);
        mul_[a * size_ + b] = index(r);
      }
    }
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int size() const { return size_; }
  const Poly& modulus() const { return modulus_; }

  Poly digits(int idx) const {
    Poly out(k_, 0);
    for (int i = k_ - 1; i >= 0; --i, idx /= p_) out[i] = idx % p_;
    return out;
  }
  int index(const Poly& c) const {
    int idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * p_ + c[i];
    return idx;
  }

  int from_integer(long long n) const {
    Poly c(k_, 0);
    c[0] = mod(n, p_);
    return index(c);
  }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int pow(int a, long long n) const {
    int out = from_integer(1);
    for (long long i = 0; i < n; ++i) out = mul(out, a);
    return out;
  }

 private:
  int p_, k_, size_;
  Poly modulus_;
  std::vector<int> add_, mul_;
};

using Term = std::tuple<int, int, long long>;  // x exponent, y exponent, integer coefficient

/// Number of (x, y) with sum c x^i y^j = 0, evaluating every term at every pair.
inline long long brute_force_affine(const Field& F, const std::vector<Term>& terms) {
  const int n = F.size();
  int max_e = 0;
  for (auto [i, j, c] : terms) max_e = std::max({max_e, i, j});
  std::vector<std::vector<int>> pw(n, std::vector<int>(max_e + 1));
  for (int a = 0; a < n; ++a) {
    pw[a][0] = F.from_integer(1);
    for (int e = 1; e <= max_e; ++e) pw[a][e] = F.mul(pw[a][e - 1], a);
  }
  std::vector<int> coeff;
  for (auto [i, j, c] : terms) coeff.push_back(F.from_integer(c));
  long long count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int acc = 0;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto [i, j, c] = terms[t];
        acc = F.add(acc, F.mul(coeff[t], F.mul(pw[x][i], pw[y][j])));
      }
      if (acc == 0) ++count;
    }
  }
  return count;
}

inline long long count_roots_of(const Field& F, long long exponent, long long target) {
  const int rhs = F.from_integer(target);
  long long count = 0;
  for (int u = 0; u < F.size(); ++u) {
    if (F.pow(u, exponent) == rhs) ++count;
  }
  return count;
}

/// Curve equations transcribed independently of the library.
inline std::vector<Term> hermitian(int q) { return {{0, q, 1}, {0, 1, 1}, {q + 1, 0, -1}}; }
inline std::vector<Term> artin_schreier(int q, int m) { return {{0, q, 1}, {0, 1, 1}, {m, 0, -1}}; }
inline std::vector<Term> even_trace(int q) {
  std::vector<Term> t{{q + 1, 0, -1}};
  for (int e = q / 2; e >= 1; e /= 2) t.push_back({0, e, 1});
  return t;
}
inline std::vector<Term> fermat_half(int q) {
  const int n = (q + 1) / 2;
  return {{n, 0, 1}, {0, n, 1}, {0, 0, 1}};
}
inline std::vector<Term> r32i(int q) {
  const int n = (q + 1) / 3;
  return {{n, 0, 1}, {2 * n, 0, 1}, {0, q + 1, 1}};
}
inline std::vector<Term> r32ii(int q) {
  const int a = (q - 1) / 3;
  return {{0, q, 1}, {2 * a, 1, 1}, {a, 0, -1}};
}
/// The sign pattern as printed in the source: y^q - y x^{2a} + x^a.
inline std::vector<Term> r32ii_as_printed(int q) {
  const int a = (q - 1) / 3;
  return {{0, q, 1}, {2 * a, 1, -1}, {a, 0, 1}};
}
/// y^q + y + (x^{q/3} + ... + x)^2 expanded term by term (q a power of 3).
inline std::vector<Term> r32iii(int q) {
  std::vector<Term> t{{0, q, 1}, {0, 1, 1}};
  for (int a = q / 3; a >= 1; a /= 3) {
    for (int b = q / 3; b >= 1; b /= 3) t.push_back({a + b, 0, 1});
  }
  return t;
}

/// Members of the semigroup generated by gens, below limit, by closure.
inline std::set<long long> semigroup_members(const std::vector<long long>& gens, long long limit) {
  std::set<long long> reached{0};
  std::vector<long long> frontier{0};
  while (!frontier.empty()) {
    std::vector<long long> next;
    for (long long s : frontier) {
      for (long long g : gens) {
        if (s + g < limit && reached.insert(s + g).second) next.push_back(s + g);
      }
    }
    frontier.swap(next);
  }
  return reached;
}

inline std::vector<long long> semigroup_gaps(const std::vector<long long>& gens) {
  long long limit = 1;
  for (long long g : gens) limit *= g;
  limit = std::max<long long>(limit, 2) + 1;
  const auto members = semigroup_members(gens, limit);
  std::vector<long long> gaps;
  for (long long n = 0; n < limit; ++n) {
    if (!members.count(n)) gaps.push_back(n);
  }
  return gaps;
}

inline bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  while (q % p == 0) q /= p, ++k;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return q == 1;
}

inline std::vector<int> prime_powers_up_to(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

}  // namespace oracle
