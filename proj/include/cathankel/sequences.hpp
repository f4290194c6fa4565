#pragma once

// The Catalan-related sequence families, extended by zero to negative
// indices. Every family has term(0) = 1.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"

namespace cathankel {

enum class FamilyKind {
  Catalan,          // C_n
  CentralBinomial,  // binom(2n, n)
  MNumbers,         // M_b(n) = sum_k (binom(n+k,k) - binom(n+k,k-1)) b^(n-k)
  NarayanaC,        // C_n(t)
  NarayanaB,        // B_n(t) = sum_k binom(n,k)^2 t^k
  ConvCatalan,      // C_{k,n}, coefficients of C(x)^k
};

/// Descriptor of one sequence family. `b` is used by MNumbers only and `k`
/// by ConvCatalan only.
struct SeqFamily {
  FamilyKind kind = FamilyKind::Catalan;
  ExactInt b = 0;
  unsigned k = 1;

  static SeqFamily catalan() { return {FamilyKind::Catalan}; }
  static SeqFamily central_binomial() { return {FamilyKind::CentralBinomial}; }
  static SeqFamily m_numbers(ExactInt b) { return {FamilyKind::MNumbers, std::move(b)}; }
  static SeqFamily narayana_c() { return {FamilyKind::NarayanaC}; }
  static SeqFamily narayana_b() { return {FamilyKind::NarayanaB}; }
  static SeqFamily conv_catalan(unsigned k) {
    if (k == 0) throw Error("convolution power k must be positive");
    return {FamilyKind::ConvCatalan, 0, k};
  }

  /// Terms depend on t.
  bool is_polynomial() const { return kind == FamilyKind::NarayanaC || kind == FamilyKind::NarayanaB; }

  /// Short name matching the CLI grammar, e.g. "m-numbers(b=2)", "conv(k=3)".
  std::string name() const {
    switch (kind) {
      case FamilyKind::Catalan: return "catalan";
      case FamilyKind::CentralBinomial: return "central-binomial";
      case FamilyKind::MNumbers: return "m-numbers(b=" + b.get_str() + ")";
      case FamilyKind::NarayanaC: return "narayana-c";
      case FamilyKind::NarayanaB: return "narayana-b";
      case FamilyKind::ConvCatalan: return "conv(k=" + std::to_string(k) + ")";
    }
    return "?";
  }

  friend bool operator==(const SeqFamily& x, const SeqFamily& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == FamilyKind::MNumbers) return x.b == y.b;
    if (x.kind == FamilyKind::ConvCatalan) return x.k == y.k;
    return true;
  }
};

namespace detail {

inline ExactInt exact_div(const ExactInt& a, const ExactInt& b, const char* what) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NonExactDivision(std::string("non-exact division in ") + what + ": " + a.get_str() + " / " + b.get_str());
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline ExactInt m_number(const ExactInt& b, long n) {
  ExactInt acc = 0;
  ExactInt bp = 1;  // b^(n-k), accumulated from k = n downwards
  for (long k = n; k >= 0; --k) {
    acc += (binomial(n + k, k) - binomial(n + k, k - 1)) * bp;
    bp *= b;
  }
  return acc;
}

inline Poly narayana_c(long n) {
  std::vector<ExactInt> cs(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    cs[static_cast<std::size_t>(k)] = exact_div(binomial(n - 1, k) * binomial(n, k), k + 1, "Narayana coefficient");
  return Poly(std::move(cs));
}

inline Poly narayana_b(long n) {
  std::vector<ExactInt> cs(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    ExactInt c = binomial(n, k);
    cs[static_cast<std::size_t>(k)] = c * c;
  }
  return Poly(std::move(cs));
}

inline ExactInt conv_catalan(unsigned k, long n) {
  const long top = 2 * n + static_cast<long>(k);
  return exact_div(binomial(top, n) * k, top, "convolution Catalan closed form");
}

}  // namespace detail

/// A family together with an append-only memo of its nonnegative-index
/// terms. Copies share the memo; access is serialized by a mutex so
/// concurrent callers see identical values.
class Sequence {
 public:
  explicit Sequence(SeqFamily family) : family_(std::move(family)), memo_(std::make_shared<Memo>()) {}

  const SeqFamily& family() const { return family_; }

  Poly term(long n) const {
    if (n < 0) return {};
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto& v = memo_->terms;
    while (static_cast<long>(v.size()) <= n) v.push_back(compute(static_cast<long>(v.size()), v));
    return v[static_cast<std::size_t>(n)];
  }

  /// Series whose coefficient n is term(n) for 0 <= n < order.
  Series generating_series(std::size_t order = kDefaultSeriesOrder) const {
    std::vector<Poly> cs;
    cs.reserve(order);
    for (std::size_t n = 0; n < order; ++n) cs.push_back(term(static_cast<long>(n)));
    return Series(std::move(cs), order);
  }

 private:
  struct Memo {
    std::mutex mu;
    std::vector<Poly> terms;
  };

  Poly compute(long n, const std::vector<Poly>& prev) const {
    switch (family_.kind) {
      case FamilyKind::Catalan: {
        if (n == 0) return Poly(1);
        // C_n = C_{n-1} * 2(2n-1) / (n+1)
        ExactInt c = prev.back().constant() * (2 * (2 * n - 1));
        return Poly(detail::exact_div(c, n + 1, "Catalan recurrence"));
      }
      case FamilyKind::CentralBinomial:
        return Poly(binomial(2 * n, n));
      case FamilyKind::MNumbers:
        return Poly(detail::m_number(family_.b, n));
      case FamilyKind::NarayanaC:
        return detail::narayana_c(n);
      case FamilyKind::NarayanaB:
        return detail::narayana_b(n);
      case FamilyKind::ConvCatalan:
        return Poly(detail::conv_catalan(family_.k, n));
    }
    return {};
  }

  SeqFamily family_;
  std::shared_ptr<Memo> memo_;
};

inline Poly term(const SeqFamily& f, long n) { return Sequence(f).term(n); }

inline Series generating_series(const SeqFamily& f, std::size_t order = kDefaultSeriesOrder) {
  return Sequence(f).generating_series(order);
}

}  // namespace cathankel
