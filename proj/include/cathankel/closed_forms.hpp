#pragma once

// Closed-form predictions for shifted Hankel determinants. Nothing here
// evaluates a determinant of the spec being predicted; the only bridge into
// the hankel module is p_t_via_det, used for cross-validation.

#include <cstddef>
#include <string>
#include <vector>

#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"
#include "cathankel/hankel.hpp"
#include "cathankel/sequences.hpp"

namespace cathankel {

/// p_m(n) = prod_{1<=i<=j<=m-1} (2n+i+j)/(i+j), the forward Catalan Hankel
/// determinant D_m(n). Defined for any integer n; the product is evaluated
/// over the rationals and must come out integral.
inline ExactInt p_poly(long m, long n) {
  if (m < 0) throw Error("p_poly requires m >= 0");
  Rational acc = 1;
  for (long i = 1; i <= m - 1; ++i)
    for (long j = i; j <= m - 1; ++j) acc *= Rational(2 * n + i + j, i + j);
  acc.canonicalize();
  if (!is_integer(acc))
    throw NonIntegerResult("p_" + std::to_string(m) + "(" + std::to_string(n) + ") = " + acc.get_str() +
                           " is not an integer");
  return acc.get_num();
}

/// p_{m+1}(-n) == (-1)^binom(m+1,2) p_{m+1}(n-m-1), for n >= m+1.
inline bool reflection_check(long m, long n) {
  if (m < 1 || n < m + 1) throw Error("reflection_check requires m >= 1 and n >= m+1");
  return p_poly(m + 1, -n) == sign_binom2(m + 1) * p_poly(m + 1, n - m - 1);
}

/// p_m(t,n) as the forward-shift Hankel determinant of the Narayana
/// polynomials.
inline Poly p_t_via_det(long m, std::size_t n) {
  static const Sequence narayana(SeqFamily::narayana_c());
  return det(narayana, m, n).value;
}

/// p_m(t,n) from the condensation recursion
///   p_m(t,n) p_{m+2}(t,n-2) = p_m(t,n-1) p_{m+2}(t,n-1) - p_{m+1}(t,n-1)^2
/// seeded with p_r(t,0) = 1 and p_r(t,1) = C_r(t). Column c of the table is
/// filled for rows 0 .. m + 2(n-c).
inline Poly p_t_via_recursion(long m, std::size_t n) {
  if (m < 0) throw Error("p_t_via_recursion requires m >= 0");
  if (n == 0) return Poly(1);
  const Sequence narayana(SeqFamily::narayana_c());
  if (n == 1) return narayana.term(m);

  const auto rows_at = [&](std::size_t c) { return static_cast<std::size_t>(m) + 2 * (n - c) + 1; };
  std::vector<std::vector<Poly>> table(n + 1);
  table[0].assign(rows_at(0), Poly(1));
  table[1].resize(rows_at(1));
  for (std::size_t r = 0; r < table[1].size(); ++r) table[1][r] = narayana.term(static_cast<long>(r));

  for (std::size_t c = 2; c <= n; ++c) {
    table[c].resize(rows_at(c));
    for (std::size_t r = 0; r < table[c].size(); ++r) {
      const Poly& divisor = table[c - 2][r + 2];
      if (divisor.is_zero())
        throw ZeroDivisorEncountered("p_" + std::to_string(r + 2) + "(t," + std::to_string(c - 2) + ") vanishes");
      Poly num = table[c - 1][r] * table[c - 1][r + 2] - table[c - 1][r + 1] * table[c - 1][r + 1];
      table[c][r] = poly_exact_div(num, divisor);
    }
  }
  return table[n][static_cast<std::size_t>(m)];
}

struct Prediction {
  HankelSpec spec;
  Poly value;
  std::string source;
};

/// Closed-form value of D_{-m}(n) for a supported family, m >= 1:
///   n = 0        -> 1
///   1 <= n <= m  -> 0
///   n >= m+1     -> family formula below, with s = (-1)^binom(m+1,2), r = n-m-1
///     catalan, m-numbers   s p_{m+1}(r)
///     central-binomial     s 2^r p_{m+1}(r)
///     narayana-c           s t^r p_{m+1}(t, r)
///     narayana-b           s (2t)^r p_{m+1}(t, r)
inline Prediction predict_backward(const SeqFamily& family, long m, std::size_t n) {
  if (m < 1) throw Error("predict_backward requires m >= 1");
  const char* source = nullptr;
  switch (family.kind) {
    case FamilyKind::Catalan: source = "theorem-1"; break;
    case FamilyKind::MNumbers: source = "theorem-6"; break;
    case FamilyKind::CentralBinomial: source = "theorem-7"; break;
    case FamilyKind::NarayanaC: source = "theorem-8"; break;
    case FamilyKind::NarayanaB: source = "theorem-9"; break;
    case FamilyKind::ConvCatalan:
      throw UnsupportedFamily("no backward-shift theorem for " + family.name());
  }
  Prediction p{{family, -m, n}, Poly(), source};
  const long ln = static_cast<long>(n);
  if (n == 0) {
    p.value = Poly(1);
    return p;
  }
  if (ln <= m) return p;

  const long r = ln - m - 1;
  const int s = sign_binom2(m + 1);
  switch (family.kind) {
    case FamilyKind::Catalan:
    case FamilyKind::MNumbers:
      p.value = Poly(ExactInt(s * p_poly(m + 1, r)));
      break;
    case FamilyKind::CentralBinomial: {
      ExactInt two_r;
      mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
      p.value = Poly(ExactInt(s * two_r * p_poly(m + 1, r)));
      break;
    }
    case FamilyKind::NarayanaC:
      p.value = Poly::monomial(static_cast<std::size_t>(r), s) * p_t_via_recursion(m + 1, static_cast<std::size_t>(r));
      break;
    case FamilyKind::NarayanaB: {
      ExactInt two_r;
      mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
      p.value = Poly::monomial(static_cast<std::size_t>(r), s * two_r) *
                p_t_via_recursion(m + 1, static_cast<std::size_t>(r));
      break;
    }
    case FamilyKind::ConvCatalan:
      break;
  }
  return p;
}

}  // namespace cathankel
