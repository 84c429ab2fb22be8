// Copyright 2026 The qgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file grassmann.hpp
 * @brief Complex Grassmann algebra on the four generators (ζ, ζ*, ξ, ξ*).
 *
 * An element is stored as 16 complex coefficients, one per subset of the
 * generator set. Bit k of the subset mask selects generator k, and every
 * monomial is kept in ascending generator order ζ < ζ* < ξ < ξ*, so two
 * elements are equal iff their coefficient arrays are equal.
 *
 * Conventions fixed by the calibration tests (tests/test_calibration.cpp):
 *   - Berezin integral: ∫dg g = 1, ∫dg 1 = 0, with g commuted to the left
 *     before it is stripped.
 *   - Pair measure d²ζ: ∫dζ is applied first, then ∫dζ*, so that
 *     ∫d²ζ ζζ* = +1.
 *   - Pair delta: δ²(η) = η·adjoint(η).
 */
#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>

#include "qgc/errors.hpp"

namespace qgc {

using Complex = std::complex<double>;

enum class Generator : std::uint8_t { zeta = 0, zeta_conj = 1, xi = 2, xi_conj = 3 };

/// Generator pairs (g, g*) available to characteristic functions.
enum class GeneratorPair : std::uint8_t { zeta, xi };

inline constexpr std::size_t kGenerators = 4;
inline constexpr std::size_t kMonomials = 16;

/// Subset of generators; bit k set iff generator k is present.
using Mask = std::uint8_t;

constexpr Mask mask_of(Generator g) { return static_cast<Mask>(1u << static_cast<unsigned>(g)); }

constexpr Generator conjugate(Generator g) {
  switch (g) {
    case Generator::zeta: return Generator::zeta_conj;
    case Generator::zeta_conj: return Generator::zeta;
    case Generator::xi: return Generator::xi_conj;
    case Generator::xi_conj: return Generator::xi;
  }
  return g;
}

constexpr Generator first_of(GeneratorPair pair) {
  return pair == GeneratorPair::zeta ? Generator::zeta : Generator::xi;
}

constexpr Mask pair_mask(GeneratorPair pair) {
  return static_cast<Mask>(mask_of(first_of(pair)) | mask_of(conjugate(first_of(pair))));
}

namespace detail {

// Sign of the permutation sorting the concatenation a·b, for disjoint a, b:
// (-1)^(number of pairs i in a, j in b with i > j).
constexpr int reorder_sign(Mask a, Mask b) {
  int inversions = 0;
  for (unsigned j = 0; j < kGenerators; ++j) {
    if ((b >> j) & 1u) inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

constexpr std::array<std::array<signed char, kMonomials>, kMonomials> make_product_signs() {
  std::array<std::array<signed char, kMonomials>, kMonomials> table{};
  for (unsigned a = 0; a < kMonomials; ++a) {
    for (unsigned b = 0; b < kMonomials; ++b) {
      table[a][b] = (a & b) ? 0 : static_cast<signed char>(reorder_sign(static_cast<Mask>(a), static_cast<Mask>(b)));
    }
  }
  return table;
}

inline constexpr auto kProductSigns = make_product_signs();

// Monomials ordered by degree, then lexicographically in generator order.
constexpr std::array<Mask, kMonomials> make_display_order() {
  std::array<Mask, kMonomials> order{};
  std::size_t n = 0;
  for (unsigned degree = 0; degree <= kGenerators; ++degree) {
    // Lexicographic order of ascending generator sequences of fixed length
    // equals descending order of the reversed-bit mask.
    std::array<Mask, kMonomials> bucket{};
    std::size_t m = 0;
    for (unsigned mask = 0; mask < kMonomials; ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) == degree) bucket[m++] = static_cast<Mask>(mask);
    }
    auto key = [](Mask x) {
      unsigned r = 0;
      for (unsigned k = 0; k < kGenerators; ++k) r |= ((x >> k) & 1u) << (kGenerators - 1 - k);
      return r;
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (key(bucket[j]) > key(bucket[i])) {
          Mask t = bucket[i];
          bucket[i] = bucket[j];
          bucket[j] = t;
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) order[n++] = bucket[i];
  }
  return order;
}

inline constexpr auto kDisplayOrder = make_display_order();

}  // namespace detail

/// Element of the Grassmann algebra generated by ζ, ζ*, ξ, ξ*.
class GrassmannElement {
 public:
  using Coefficients = std::array<Complex, kMonomials>;

  GrassmannElement() = default;
  explicit GrassmannElement(const Coefficients& c) : c_(c) {}

  static GrassmannElement scalar(Complex value) { return monomial(0, value); }

  static GrassmannElement generator(Generator g, Complex value = 1.0) {
    return monomial(mask_of(g), value);
  }

  static GrassmannElement monomial(Mask mask, Complex value = 1.0) {
    GrassmannElement x;
    x.c_[mask] = value;
    return x;
  }

  const Complex& operator[](Mask mask) const { return c_[mask]; }
  Complex& operator[](Mask mask) { return c_[mask]; }
  const Coefficients& coefficients() const { return c_; }

  Complex scalar_part() const { return c_[0]; }

  GrassmannElement even_part() const { return filtered([](Mask m) { return std::popcount(m) % 2 == 0; }); }
  GrassmannElement odd_part() const { return filtered([](Mask m) { return std::popcount(m) % 2 == 1; }); }

  /// Largest |coefficient| over monomials selected by `keep`.
  template <class Pred>
  double max_abs_where(Pred keep) const {
    double m = 0.0;
    for (unsigned k = 0; k < kMonomials; ++k) {
      if (keep(static_cast<Mask>(k))) m = std::max(m, std::abs(c_[k]));
    }
    return m;
  }

  double max_abs() const {
    return max_abs_where([](Mask) { return true; });
  }

  /// True if no monomial touching any generator of `mask` has a nonzero coefficient.
  bool free_of(Mask mask) const {
    for (unsigned k = 0; k < kMonomials; ++k) {
      if ((k & mask) && c_[k] != Complex{}) return false;
    }
    return true;
  }

  bool is_zero() const { return max_abs() == 0.0; }

  GrassmannElement& operator+=(const GrassmannElement& o) {
    for (unsigned k = 0; k < kMonomials; ++k) c_[k] += o.c_[k];
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    for (unsigned k = 0; k < kMonomials; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  GrassmannElement& operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  GrassmannElement& operator*=(const GrassmannElement& o);

  friend GrassmannElement operator+(GrassmannElement x, const GrassmannElement& y) { return x += y; }
  friend GrassmannElement operator-(GrassmannElement x, const GrassmannElement& y) { return x -= y; }
  friend GrassmannElement operator-(GrassmannElement x) { return x *= -1.0; }
  friend GrassmannElement operator*(GrassmannElement x, Complex s) { return x *= s; }
  friend GrassmannElement operator*(Complex s, GrassmannElement x) { return x *= s; }
  friend GrassmannElement operator+(GrassmannElement x, Complex s) {
    x.c_[0] += s;
    return x;
  }
  friend GrassmannElement operator+(Complex s, GrassmannElement x) { return x + s; }
  friend GrassmannElement operator-(GrassmannElement x, Complex s) { return x + (-s); }
  friend GrassmannElement operator-(Complex s, GrassmannElement x) { return (-x) + s; }
  friend GrassmannElement operator*(const GrassmannElement& x, const GrassmannElement& y);

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  template <class Pred>
  GrassmannElement filtered(Pred keep) const {
    GrassmannElement r;
    for (unsigned k = 0; k < kMonomials; ++k) {
      if (keep(static_cast<Mask>(k))) r.c_[k] = c_[k];
    }
    return r;
  }

  Coefficients c_{};
};

/// Graded product in canonical form.
inline GrassmannElement multiply(const GrassmannElement& x, const GrassmannElement& y) {
  GrassmannElement r;
  for (unsigned a = 0; a < kMonomials; ++a) {
    const Complex xa = x[static_cast<Mask>(a)];
    if (xa == Complex{}) continue;
    for (unsigned b = 0; b < kMonomials; ++b) {
      const int s = detail::kProductSigns[a][b];
      if (s == 0) continue;
      const Complex yb = y[static_cast<Mask>(b)];
      if (yb == Complex{}) continue;
      r[static_cast<Mask>(a | b)] += static_cast<double>(s) * xa * yb;
    }
  }
  return r;
}

inline GrassmannElement operator*(const GrassmannElement& x, const GrassmannElement& y) { return multiply(x, y); }

inline GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& o) { return *this = multiply(*this, o); }

/// Largest coefficient-wise distance.
inline double max_abs_diff(const GrassmannElement& x, const GrassmannElement& y) { return (x - y).max_abs(); }

inline bool approx_equal(const GrassmannElement& x, const GrassmannElement& y, double tol) {
  return max_abs_diff(x, y) <= tol;
}

/// Even part minus odd part; the sign picked up when commuting past an odd factor.
inline GrassmannElement parity_involution(const GrassmannElement& x) { return x.even_part() - x.odd_part(); }

/// Algebra homomorphism sending generator k to images[k], applied monomial by
/// monomial in ascending order. Images must be odd for the map to respect
/// anticommutation.
inline GrassmannElement substitute(const GrassmannElement& x, const std::array<GrassmannElement, kGenerators>& images) {
  GrassmannElement r;
  for (unsigned m = 0; m < kMonomials; ++m) {
    const Complex c = x[static_cast<Mask>(m)];
    if (c == Complex{}) continue;
    GrassmannElement term = GrassmannElement::scalar(c);
    for (unsigned k = 0; k < kGenerators; ++k) {
      if ((m >> k) & 1u) term = term * images[k];
    }
    r += term;
  }
  return r;
}

/// Conjugate-linear anti-automorphism: conjugates coefficients, swaps each
/// generator with its partner and reverses factor order within monomials.
inline GrassmannElement adjoint(const GrassmannElement& x) {
  GrassmannElement r;
  for (unsigned m = 0; m < kMonomials; ++m) {
    const Complex c = x[static_cast<Mask>(m)];
    if (c == Complex{}) continue;
    GrassmannElement term = GrassmannElement::scalar(std::conj(c));
    for (int k = static_cast<int>(kGenerators) - 1; k >= 0; --k) {
      if ((m >> k) & 1u) term = term * GrassmannElement::generator(conjugate(static_cast<Generator>(k)));
    }
    r += term;
  }
  return r;
}

/// Single-generator Berezin integral ∫dv x.
inline GrassmannElement berezin_integrate(const GrassmannElement& x, Generator v) {
  const Mask vm = mask_of(v);
  GrassmannElement r;
  for (unsigned m = 0; m < kMonomials; ++m) {
    if (!(m & vm)) continue;
    const Complex c = x[static_cast<Mask>(m)];
    // Commute v past the generators that precede it in the monomial.
    const int preceding = std::popcount(m & (vm - 1u));
    r[static_cast<Mask>(m & ~vm)] += (preceding % 2 == 0) ? c : -c;
  }
  return r;
}

/// Order in which the two single-generator integrals of d²ζ are applied.
enum class PairMeasure { zeta_first, zeta_conj_first };

inline constexpr PairMeasure kPairMeasure = PairMeasure::zeta_first;

/// ∫d²ζ x over the (ζ, ζ*) pair.
inline GrassmannElement integrate_pair(const GrassmannElement& x, PairMeasure order = kPairMeasure) {
  if (order == PairMeasure::zeta_first) {
    return berezin_integrate(berezin_integrate(x, Generator::zeta), Generator::zeta_conj);
  }
  return berezin_integrate(berezin_integrate(x, Generator::zeta_conj), Generator::zeta);
}

inline constexpr int kDeltaSign = +1;

/// Grassmann delta δ²(η) = sign·η·adjoint(η) for odd linear η.
inline GrassmannElement delta_pair(const GrassmannElement& argument, int sign = kDeltaSign) {
  for (unsigned m = 0; m < kMonomials; ++m) {
    if (std::popcount(m) != 1 && argument[static_cast<Mask>(m)] != Complex{}) {
      throw InvalidDeltaArgumentError("delta_pair: argument must be a linear combination of generators");
    }
  }
  return static_cast<double>(sign) * (argument * adjoint(argument));
}

/// exp(x) = e^{x0} Σ_k n^k/k! with n = x − x0; the series stops at k = 4 by nilpotency.
inline GrassmannElement exp(const GrassmannElement& x) {
  const Complex x0 = x.scalar_part();
  GrassmannElement nil = x - x0;
  GrassmannElement term = GrassmannElement::scalar(1.0);
  GrassmannElement sum = term;
  for (int k = 1; k <= static_cast<int>(kGenerators); ++k) {
    term = term * nil * (1.0 / k);
    sum += term;
  }
  return std::exp(x0) * sum;
}

// ---------------------------------------------------------------------------
// Pretty printing
//
// Terms appear by degree, then lexicographically in generator order. Each
// term is `coefficient·monomial`; a unit coefficient is omitted, a real
// negative coefficient is written with " - " and a complex one as
// "(re±imi)". Parts with magnitude below kPrintFloor are dropped. Reals use
// the shortest "%.12g" form. Example: "1 + (0.3-0.1i)·ξ + 0.5·ξξ*".
// ---------------------------------------------------------------------------

inline constexpr double kPrintFloor = 1e-14;

inline std::string generator_symbol(Generator g) {
  switch (g) {
    case Generator::zeta: return "ζ";
    case Generator::zeta_conj: return "ζ*";
    case Generator::xi: return "ξ";
    case Generator::xi_conj: return "ξ*";
  }
  return "?";
}

inline std::string monomial_label(Mask mask) {
  if (mask == 0) return "1";
  std::string s;
  for (unsigned k = 0; k < kGenerators; ++k) {
    if ((mask >> k) & 1u) s += generator_symbol(static_cast<Generator>(k));
  }
  return s;
}

inline std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_string(const GrassmannElement& x) {
  std::string out;
  for (Mask m : detail::kDisplayOrder) {
    Complex c = x[m];
    double re = std::abs(c.real()) < kPrintFloor ? 0.0 : c.real();
    double im = std::abs(c.imag()) < kPrintFloor ? 0.0 : c.imag();
    if (re == 0.0 && im == 0.0) continue;

    bool negative = false;
    std::string coeff;
    if (im == 0.0) {
      negative = re < 0.0;
      double mag = std::abs(re);
      if (!(mag == 1.0 && m != 0)) coeff = format_real(mag);
    } else {
      coeff = "(" + format_real(re) + (im < 0.0 ? "-" : "+") + format_real(std::abs(im)) + "i)";
    }

    std::string term = coeff;
    if (m != 0) term += coeff.empty() ? monomial_label(m) : "·" + monomial_label(m);

    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const GrassmannElement& x) { return os << to_string(x); }

}  // namespace qgc
