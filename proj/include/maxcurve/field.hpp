// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^k).
 *
 * A field is GF(p)[t]/(f) where f is the canonical modulus: the
 * lexicographically smallest monic irreducible of degree k, comparing
 * coefficient sequences (c_0, ..., c_{k-1}) with c_0 most significant.
 * Two contexts built for the same (p, k) are therefore identical, and so are
 * the element representations they produce.
 *
 * Elements are fixed-length residue vectors in the basis 1, t, ..., t^{k-1}.
 * For k = 1 the modulus is t itself, so elements are plain residues.
 *
 * Supported range: p < 2^31 and p^k <= 2^62.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "maxcurve/common.hpp"

namespace maxcurve {

inline constexpr Int kMaxFieldSize = Int{1} << 62;
inline constexpr Int kMaxCharacteristic = Int{1} << 31;

/// q = p^k with p prime.
struct PrimePower {
  Int p = 2;
  int k = 1;
  Int q = 2;

  static PrimePower make(Int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (p >= kMaxCharacteristic) throw std::overflow_error("characteristic too large");
    if (k < 1) throw std::invalid_argument("exponent must be >= 1");
    Int q = 1;
    for (int i = 0; i < k; ++i) {
      if (q > kMaxFieldSize / p) {
        throw std::overflow_error(std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^62");
      }
      q *= p;
    }
    return PrimePower{p, k, q};
  }

  static std::optional<PrimePower> try_from_value(Int q) {
    if (q < 2 || q > kMaxFieldSize) return std::nullopt;
    Int p = 0;
    for (Int d = 2; d <= q / d; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = q;
    int k = 0;
    Int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1 || p >= kMaxCharacteristic) return std::nullopt;
    return PrimePower{p, k, q};
  }

  static PrimePower from_value(Int q) {
    auto pp = try_from_value(q);
    if (!pp) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return *pp;
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Residue vector (c_0, ..., c_{k-1}) representing c_0 + c_1 t + ... .
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement& a, const FieldElement& b) { return a.coeffs_ <=> b.coeffs_; }

 private:
  friend class FieldCtx;
  std::vector<std::uint32_t> coeffs_;
};

namespace detail {

// Dense polynomials over GF(p), constant term first, no trailing zeros
// (the zero polynomial is empty).
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

inline PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  }
  trim(a);
  return a;
}

inline PrimePoly poly_rem(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_rem(std::move(prod), m, p);
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(f, t^{p^i} - t) = 1 for i <= k/2.
inline bool is_irreducible(const PrimePoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  PrimePoly t{0, 1};
  PrimePoly power = t;  // t^{p^i} mod f
  for (std::size_t i = 1; i <= k / 2; ++i) {
    PrimePoly acc{1};
    PrimePoly base = power;
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1U) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1U;
    }
    power = acc;
    PrimePoly g = poly_gcd(f, poly_sub(power, t, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Immutable description of GF(p^k); all arithmetic goes through it.
class FieldCtx {
 public:
  /// Builds GF(p^k) with the canonical modulus.
  static FieldCtx make(Int p, int k) {
    const PrimePower order = PrimePower::make(p, k);
    FieldCtx ctx;
    ctx.order_ = order;
    ctx.modulus_ = canonical_modulus(static_cast<std::uint64_t>(p), k);
    return ctx;
  }

  Int characteristic() const noexcept { return order_.p; }
  int degree() const noexcept { return order_.k; }
  Int size() const noexcept { return order_.q; }
  const PrimePower& order() const noexcept { return order_; }

  /// Monic modulus, k + 1 coefficients, constant term first.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FieldElement zero() const { return FieldElement(std::vector<std::uint32_t>(order_.k, 0)); }
  FieldElement one() const { return from_integer(1); }

  /// Residue class of t. Equal to zero when k = 1.
  FieldElement generator() const {
    if (order_.k == 1) return zero();
    FieldElement e = zero();
    e.coeffs_[1] = 1;
    return e;
  }

  /// Image of an integer in the prime subfield.
  FieldElement from_integer(Int n) const {
    FieldElement e = zero();
    e.coeffs_[0] = static_cast<std::uint32_t>(mod(n, order_.p));
    return e;
  }

  /// Validating constructor from a residue vector.
  FieldElement element(std::vector<std::uint32_t> coeffs) const {
    FieldElement e(std::move(coeffs));
    if (!contains(e)) throw std::invalid_argument("residue vector is not an element of this field");
    return e;
  }

  bool contains(const FieldElement& a) const noexcept {
    if (a.size() != static_cast<std::size_t>(order_.k)) return false;
    return std::all_of(a.coeffs_.begin(), a.coeffs_.end(),
                       [this](std::uint32_t c) { return Int{c} < order_.p; });
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    const std::uint64_t p = prime();
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      out.coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{out.coeffs_[i]} + b.coeffs_[i]) % p);
    }
    return out;
  }

  FieldElement neg(const FieldElement& a) const {
    FieldElement out = a;
    const std::uint64_t p = prime();
    for (auto& c : out.coeffs_) c = static_cast<std::uint32_t>((p - c) % p);
    return out;
  }

  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    const std::uint64_t p = prime();
    const std::size_t k = static_cast<std::size_t>(order_.k);
    if (k == 1) {
      return FieldElement(std::vector<std::uint32_t>{
          static_cast<std::uint32_t>(std::uint64_t{a.coeffs_[0]} * b.coeffs_[0] % p)});
    }
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
      }
    }
    for (std::size_t i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
      for (std::size_t j = 0; j < k; ++j) {
        prod[i - k + j] = (prod[i - k + j] + (p - c) * modulus_[j]) % p;
      }
    }
    std::vector<std::uint32_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElement(std::move(out));
  }

  FieldElement pow(const FieldElement& a, std::uint64_t n) const {
    FieldElement result = one();
    FieldElement base = a;
    while (n > 0) {
      if (n & 1U) result = mul(result, base);
      n >>= 1U;
      if (n > 0) base = mul(base, base);
    }
    return result;
  }

  FieldElement inv(const FieldElement& a) const {
    if (a.is_zero()) throw MathError("inverse of zero");
    return pow(a, static_cast<std::uint64_t>(order_.q - 2));
  }

  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

  /// a^{p^j}.
  FieldElement frobenius(const FieldElement& a, Int iterations) const {
    if (iterations < 0) throw std::invalid_argument("negative Frobenius iteration count");
    FieldElement out = a;
    for (Int i = 0; i < iterations % order_.k; ++i) out = pow(out, prime());
    return out;
  }

  /// Position in enumeration order (lexicographic on (c_0, ..., c_{k-1})).
  Int index_of(const FieldElement& a) const noexcept {
    Int idx = 0;
    for (std::uint32_t c : a.coeffs_) idx = idx * order_.p + c;
    return idx;
  }

  FieldElement element_at(Int index) const {
    if (index < 0 || index >= order_.q) throw std::out_of_range("element index out of range");
    std::vector<std::uint32_t> coeffs(order_.k);
    for (int i = order_.k - 1; i >= 0; --i) {
      coeffs[i] = static_cast<std::uint32_t>(index % order_.p);
      index /= order_.p;
    }
    return FieldElement(std::move(coeffs));
  }

  template <class Fn>
  void for_each_element(Fn&& fn) const {
    for (Int i = 0; i < order_.q; ++i) fn(element_at(i));
  }

  /// All elements in enumeration order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(order_.q));
    for_each_element([&](const FieldElement& e) { out.push_back(e); });
    return out;
  }

  /// Prime-field elements print as integers, others as polynomials in t.
  std::string to_string(const FieldElement& a) const {
    if (order_.k == 1) return std::to_string(a.coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = order_.k - 1; i >= 0; --i) {
      const std::uint32_t c = a.coeffs_[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.order_ == b.order_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx() = default;

  std::uint64_t prime() const noexcept { return static_cast<std::uint64_t>(order_.p); }

  static std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, int k) {
    if (k == 1) return {0, 1};
    // Candidate index enumerates (c_0, ..., c_{k-1}) with c_0 most significant.
    const Int count = PrimePower::make(static_cast<Int>(p), k).q;
    for (Int idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> f(k + 1, 0);
      Int rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        f[i] = static_cast<std::uint32_t>(rest % static_cast<Int>(p));
        rest /= static_cast<Int>(p);
      }
      f[k] = 1;
      if (f[0] == 0) continue;
      if (detail::is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  PrimePower order_;
  std::vector<std::uint32_t> modulus_;
};

/// Fixed embedding GF(p^a) -> GF(p^b), a | b, sending t to the first root
/// (in enumeration order) of the small field's modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldCtx sub, FieldCtx sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_.characteristic() != sup_.characteristic()) {
      throw std::invalid_argument("embedding between fields of different characteristic");
    }
    if (sup_.degree() % sub_.degree() != 0) {
      throw std::invalid_argument("subfield degree does not divide superfield degree");
    }
    const auto mod = sub_.modulus();
    std::optional<FieldElement> root;
    for (Int i = 0; i < sup_.size() && !root; ++i) {
      FieldElement x = sup_.element_at(i);
      FieldElement acc = sup_.zero();
      for (std::size_t j = mod.size(); j-- > 0;) {
        acc = sup_.add(sup_.mul(acc, x), sup_.from_integer(mod[j]));
      }
      if (acc.is_zero()) root = std::move(x);
    }
    if (!root) throw std::logic_error("subfield modulus has no root in superfield");
    root_ = *root;
    basis_images_.push_back(sup_.one());
    for (int i = 1; i < sub_.degree(); ++i) basis_images_.push_back(sup_.mul(basis_images_.back(), root_));
  }

  const FieldCtx& sub() const noexcept { return sub_; }
  const FieldCtx& sup() const noexcept { return sup_; }
  const FieldElement& root() const noexcept { return root_; }

  FieldElement operator()(const FieldElement& a) const {
    if (!sub_.contains(a)) throw std::invalid_argument("element does not belong to the subfield");
    FieldElement out = sup_.zero();
    for (int i = 0; i < sub_.degree(); ++i) {
      if (a[i] != 0) out = sup_.add(out, sup_.mul(sup_.from_integer(a[i]), basis_images_[i]));
    }
    return out;
  }

  /// Element of the subfield mapping to b, if any. Scans the subfield.
  std::optional<FieldElement> preimage(const FieldElement& b) const {
    for (Int i = 0; i < sub_.size(); ++i) {
      FieldElement a = sub_.element_at(i);
      if ((*this)(a) == b) return a;
    }
    return std::nullopt;
  }

 private:
  FieldCtx sub_;
  FieldCtx sup_;
  FieldElement root_;
  std::vector<FieldElement> basis_images_;
};

/// Shared, lazily built embedding for (sub, sup). Concurrent lookups of an
/// existing entry take a shared lock only.
inline std::shared_ptr<const FieldEmbedding> embedding(const FieldCtx& sub, const FieldCtx& sup) {
  if (sub.characteristic() != sup.characteristic()) {
    throw std::invalid_argument("embedding between fields of different characteristic");
  }
  if (sup.degree() % sub.degree() != 0) {
    throw std::invalid_argument("subfield degree does not divide superfield degree");
  }
  using Key = std::tuple<Int, int, int>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const FieldEmbedding>> cache;
  const Key key{sub.characteristic(), sub.degree(), sup.degree()};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const FieldEmbedding>(sub, sup);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return it->second;
}

inline FieldElement embed(const FieldCtx& sub, const FieldCtx& sup, const FieldElement& a) {
  return (*embedding(sub, sup))(a);
}

namespace detail {

inline Int relative_degree(const FieldCtx& big, const FieldCtx& small) {
  if (big.characteristic() != small.characteristic() || big.degree() % small.degree() != 0) {
    throw std::invalid_argument("small field does not embed in big field");
  }
  return big.degree() / small.degree();
}

}  // namespace detail

/// Sum of the conjugates a^{Q^i}, Q = |small|. Lands in the image of small.
inline FieldElement relative_trace(const FieldCtx& big, const FieldCtx& small, const FieldElement& a) {
  const Int n = detail::relative_degree(big, small);
  FieldElement sum = big.zero();
  FieldElement conj = a;
  for (Int i = 0; i < n; ++i) {
    sum = big.add(sum, conj);
    conj = big.pow(conj, static_cast<std::uint64_t>(small.size()));
  }
  return sum;
}

/// Product of the conjugates a^{Q^i}, Q = |small|.
inline FieldElement relative_norm(const FieldCtx& big, const FieldCtx& small, const FieldElement& a) {
  const Int n = detail::relative_degree(big, small);
  FieldElement prod = big.one();
  FieldElement conj = a;
  for (Int i = 0; i < n; ++i) {
    prod = big.mul(prod, conj);
    conj = big.pow(conj, static_cast<std::uint64_t>(small.size()));
  }
  return prod;
}

}  // namespace maxcurve
