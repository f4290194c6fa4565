#pragma once

// Shifted Hankel matrices (a_{m+i+j}) with zero-extended sequences, and
// three independent exact determinant engines:
//
//   cofactor      Laplace expansion, the brute-force oracle (n <= 8)
//   bareiss       fraction-free elimination with row pivoting
//   condensation  Dodgson condensation; unavailable when an interior
//                 connected minor vanishes
//
// Engines are written once over a ring R (ExactInt or Poly). Polynomial
// matrices whose entries are all constants are evaluated over ExactInt.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"
#include "cathankel/sequences.hpp"

namespace cathankel {

struct HankelSpec {
  SeqFamily family;
  long shift = 0;
  std::size_t size = 0;
};

template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::size_t n, std::vector<R> rowmajor) : n_(n), a_(std::move(rowmajor)) {
    if (a_.size() != n * n) throw Error("matrix data does not match dimension");
  }

  std::size_t dim() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void swap_rows(std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(r, j), (*this)(s, j));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<R> a_;
};

using PolyMatrix = Matrix<Poly>;
using IntMatrix = Matrix<ExactInt>;

enum class Engine { Cofactor, Bareiss, Condensation };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Cofactor: return "cofactor";
    case Engine::Bareiss: return "bareiss";
    case Engine::Condensation: return "condensation";
  }
  return "?";
}

struct DetResult {
  Poly value;
  Engine engine = Engine::Bareiss;
  HankelSpec spec;
};

inline constexpr std::size_t kCofactorMaxDim = 8;

namespace ring {

inline bool is_zero(const ExactInt& x) { return x == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

inline ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NonExactDivision("non-exact integer division: " + a.get_str() + " / " + b.get_str());
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Poly exact_div(const Poly& a, const Poly& b) { return poly_exact_div(a, b); }

}  // namespace ring

// ---------------------------------------------------------------------------
// Building
// ---------------------------------------------------------------------------

/// n x n matrix with entry (i,j) = a_{shift+i+j}, using the given memoized
/// sequence.
inline PolyMatrix build(const Sequence& seq, long shift, std::size_t size) {
  PolyMatrix m(size);
  std::vector<Poly> anti(size == 0 ? 0 : 2 * size - 1);
  for (std::size_t d = 0; d < anti.size(); ++d) anti[d] = seq.term(shift + static_cast<long>(d));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = anti[i + j];
  return m;
}

inline PolyMatrix build(const HankelSpec& spec) { return build(Sequence(spec.family), spec.shift, spec.size); }

/// Entries all constant polynomials.
inline bool is_integral(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

inline IntMatrix to_int_matrix(const PolyMatrix& m) {
  IntMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).constant();
  return r;
}

// ---------------------------------------------------------------------------
// Engines over a generic ring
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
R cofactor_rec(const Matrix<R>& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return R(1);
  R acc(0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const R& entry = m(row, cols[c]);
    if (ring::is_zero(entry)) continue;
    std::size_t col = cols[c];
    cols.erase(cols.begin() + static_cast<long>(c));
    R minor = cofactor_rec(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<long>(c), col);
    if (c % 2 == 0)
      acc += entry * minor;
    else
      acc -= entry * minor;
  }
  return acc;
}

}  // namespace detail

template <class R>
R det_cofactor_generic(const Matrix<R>& m) {
  if (m.dim() > kCofactorMaxDim)
    throw DimensionTooLarge("cofactor expansion limited to dimension " + std::to_string(kCofactorMaxDim) + ", got " +
                            std::to_string(m.dim()));
  std::vector<std::size_t> cols(m.dim());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return detail::cofactor_rec(m, 0, cols);
}

/// Fraction-free elimination. A zero pivot is replaced by a lower row with
/// a nonzero entry in the pivot column; no such row means det = 0.
template <class R>
R det_bareiss_generic(Matrix<R> m) {
  const std::size_t n = m.dim();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && ring::is_zero(m(p, k))) ++p;
      if (p == n) return R(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = ring::exact_div(num, prev);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? R(-d) : d;
}

/// Dodgson condensation over connected minors. Returns nullopt when an
/// interior minor needed as a divisor is zero.
template <class R>
std::optional<R> det_condensation_generic(const Matrix<R>& m) {
  const std::size_t n = m.dim();
  if (n == 0) return R(1);
  // minors of size s-2 (dimension n-s+3) and s-1 (dimension n-s+2)
  Matrix<R> older(n + 1, std::vector<R>((n + 1) * (n + 1), R(1)));
  Matrix<R> old = m;
  for (std::size_t s = 2; s <= n; ++s) {
    const std::size_t dim = n - s + 1;
    Matrix<R> cur(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const R& div = older(i + 1, j + 1);
        if (ring::is_zero(div)) return std::nullopt;
        R num = old(i, j) * old(i + 1, j + 1) - old(i, j + 1) * old(i + 1, j);
        cur(i, j) = ring::exact_div(num, div);
      }
    }
    older = std::move(old);
    old = std::move(cur);
  }
  return old(0, 0);
}

// ---------------------------------------------------------------------------
// Poly-facing engines
// ---------------------------------------------------------------------------

/// Selects whether an engine may drop to ExactInt arithmetic for
/// constant matrices.
enum class RingPath { Auto, PolyOnly };

inline Poly det_cofactor(const PolyMatrix& m, RingPath path = RingPath::Auto) {
  if (path == RingPath::Auto && is_integral(m)) return Poly(det_cofactor_generic(to_int_matrix(m)));
  return det_cofactor_generic(m);
}

inline Poly det_bareiss(const PolyMatrix& m, RingPath path = RingPath::Auto) {
  if (path == RingPath::Auto && is_integral(m)) return Poly(det_bareiss_generic(to_int_matrix(m)));
  return det_bareiss_generic(m);
}

inline std::optional<Poly> det_condensation(const PolyMatrix& m, RingPath path = RingPath::Auto) {
  if (path == RingPath::Auto && is_integral(m)) {
    auto d = det_condensation_generic(to_int_matrix(m));
    if (!d) return std::nullopt;
    return Poly(*d);
  }
  return det_condensation_generic(m);
}

/// Determinant by a chosen engine. Condensation may be unavailable, in
/// which case nullopt is returned.
inline std::optional<Poly> det_with(const PolyMatrix& m, Engine e) {
  switch (e) {
    case Engine::Cofactor: return det_cofactor(m);
    case Engine::Bareiss: return det_bareiss(m);
    case Engine::Condensation: return det_condensation(m);
  }
  return std::nullopt;
}

/// Condensation when available, Bareiss otherwise.
inline DetResult det(const Sequence& seq, long shift, std::size_t size) {
  HankelSpec spec{seq.family(), shift, size};
  PolyMatrix m = build(seq, shift, size);
  if (auto v = det_condensation(m)) return {std::move(*v), Engine::Condensation, spec};
  return {det_bareiss(m), Engine::Bareiss, spec};
}

inline DetResult det(const HankelSpec& spec) { return det(Sequence(spec.family), spec.shift, spec.size); }

/// Runs every applicable engine (cofactor only up to dimension 8) and
/// throws EngineDisagreement unless all agree. The reported engine is the
/// one det() would have chosen.
inline DetResult cross_check(const HankelSpec& spec) {
  PolyMatrix m = build(spec);
  std::vector<std::pair<Engine, Poly>> got;
  got.emplace_back(Engine::Bareiss, det_bareiss(m));
  auto cond = det_condensation(m);
  if (cond) got.emplace_back(Engine::Condensation, *cond);
  if (m.dim() <= kCofactorMaxDim) got.emplace_back(Engine::Cofactor, det_cofactor(m));

  for (const auto& [e, v] : got) {
    if (v != got.front().second) {
      std::vector<std::string> outs;
      for (const auto& [e2, v2] : got) outs.push_back(std::string(engine_name(e2)) + "=" + v2.to_string());
      throw EngineDisagreement(std::move(outs));
    }
  }
  return {got.front().second, cond ? Engine::Condensation : Engine::Bareiss, spec};
}

/// Forms (a(i+j-n)) * (b(n-j-k)) for 0 <= i,j,k <= n and checks that it is
/// the lower-triangular Toeplitz matrix (c(i-k)) of c = a*b.
inline PolyMatrix lemma3_product(const Series& a, const Series& b, std::size_t n) {
  const long ln = static_cast<long>(n);
  const std::size_t dim = n + 1;
  const Series c = a * b;
  if (c.order() < dim) throw Error("series order too small for the requested product size");

  PolyMatrix left(dim), right(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      left(i, j) = a.coeff(static_cast<long>(i + j) - ln);
      right(i, j) = b.coeff(ln - static_cast<long>(i + j));
    }

  PolyMatrix prod(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      Poly acc;
      for (std::size_t j = 0; j < dim; ++j) acc += left(i, j) * right(j, k);
      prod(i, k) = std::move(acc);
    }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      Poly expected = c.coeff(static_cast<long>(i) - static_cast<long>(k));
      if (prod(i, k) != expected)
        throw IdentityViolation("triangular product identity fails at (" + std::to_string(i) + "," +
                                std::to_string(k) + "): " + prod(i, k).to_string() + " != " + expected.to_string());
    }
  return prod;
}

}  // namespace cathankel
