#include <gtest/gtest.h>

#include "cathankel/closed_forms.hpp"
#include "oracle.hpp"

using namespace cathankel;

namespace {

Poly tpow(std::size_t e) { return Poly::monomial(e); }

/// 1 + t + ... + t^n
Poly geometric(std::size_t n) {
  Poly p;
  for (std::size_t i = 0; i <= n; ++i) p += tpow(i);
  return p;
}

}  // namespace

TEST(PPoly, Examples) {
  EXPECT_EQ(p_poly(2, 4), 5);
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(p_poly(0, n), 1);
    EXPECT_EQ(p_poly(1, n), 1);
  }
  EXPECT_EQ(p_poly(4, 1), 14);
  EXPECT_EQ(p_poly(2, -4), -3);
  EXPECT_THROW(p_poly(-1, 0), Error);
}

TEST(PPoly, LowOrderFactoredForms) {
  for (long n = -10; n <= 20; ++n) {
    EXPECT_EQ(p_poly(2, n), n + 1);
    Rational p3 = Rational((1 + n) * (2 + n) * (3 + 2 * n), 6);
    Rational p4 = Rational((1 + n) * (2 + n) * (2 + n) * (3 + n) * (3 + 2 * n) * (5 + 2 * n), 180);
    p3.canonicalize();
    p4.canonicalize();
    EXPECT_EQ(Rational(p_poly(3, n)), p3) << n;
    EXPECT_EQ(Rational(p_poly(4, n)), p4) << n;
  }
}

TEST(PPoly, FirstColumnIsCatalan) {
  for (long m = 0; m <= 12; ++m) EXPECT_EQ(Poly(p_poly(m, 1)), oracle::catalan(m)) << m;
}

TEST(PPoly, SatisfiesCondensationRecursion) {
  for (long m = 0; m <= 8; ++m)
    for (long n = 1; n <= 8; ++n)
      EXPECT_EQ(p_poly(m, n - 1) * p_poly(m + 2, n - 1) - p_poly(m + 1, n - 1) * p_poly(m + 1, n - 1),
                p_poly(m, n) * p_poly(m + 2, n - 2))
          << "m=" << m << " n=" << n;
}

TEST(Reflection, Examples) {
  EXPECT_TRUE(reflection_check(1, 4));
  EXPECT_EQ(p_poly(3, -4), -5);
  EXPECT_EQ(p_poly(3, 1), 5);
  EXPECT_TRUE(reflection_check(2, 4));
  // p_4(-4) by direct product: (-3)(-5/3)(-1)(-1)(-3/5)(-1/3) = 1
  Rational direct = Rational(-3) * Rational(-5, 3) * Rational(-1) * Rational(-1) * Rational(-3, 5) * Rational(-1, 3);
  EXPECT_EQ(Rational(p_poly(4, -4)), direct);
  EXPECT_EQ(p_poly(4, 0), 1);
  EXPECT_TRUE(reflection_check(3, 4));
}

TEST(Reflection, HoldsOnGrid) {
  for (long m = 1; m <= 7; ++m)
    for (long n = m + 1; n <= 30; ++n) EXPECT_TRUE(reflection_check(m, n)) << m << "," << n;
  EXPECT_THROW(reflection_check(3, 3), Error);
}

TEST(PT, ViaDeterminant) {
  EXPECT_EQ(p_t_via_det(2, 2), (Poly{0, 1, 1, 1}));
  for (long m = 0; m <= 6; ++m) EXPECT_EQ(p_t_via_det(m, 0), Poly(1));
  EXPECT_EQ(p_t_via_det(3, 2), (Poly{0, 1, 3, 6, 3, 1}));
  EXPECT_EQ(p_t_via_det(3, 3), (tpow(3) * Poly{1, 3, 6, 10, 6, 3, 1}));
  EXPECT_EQ(p_t_via_det(4, 2), (Poly{0, 1, 6, 21, 28, 21, 6, 1}));
  // t^10 (1+t)(1-t+t^2)(1+t+t^2)
  EXPECT_EQ(p_t_via_det(2, 5), (tpow(10) * Poly{1, 1} * Poly{1, -1, 1} * Poly{1, 1, 1}));
}

TEST(PT, ViaRecursion) {
  EXPECT_EQ(p_t_via_recursion(1, 3), tpow(3));
  EXPECT_EQ(p_t_via_recursion(2, 3), (Poly{0, 0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(p_t_via_recursion(4, 1), (Poly{1, 6, 6, 1}));
  EXPECT_EQ(p_t_via_recursion(0, 0), Poly(1));
}

TEST(PT, KnownClosedFormsForLowShifts) {
  for (std::size_t n = 0; n <= 8; ++n) {
    Poly lead = tpow(n * (n - (n > 0 ? 1 : 0)) / 2);
    EXPECT_EQ(p_t_via_recursion(0, n), lead) << n;
    EXPECT_EQ(p_t_via_recursion(1, n), lead) << n;
    EXPECT_EQ(p_t_via_recursion(2, n), lead * geometric(n)) << n;
  }
}

TEST(PT, RecursionMatchesDeterminantAndReducesAtOne) {
  for (long m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 6; ++n) {
      Poly via_det = p_t_via_det(m, n);
      EXPECT_EQ(p_t_via_recursion(m, n), via_det) << "m=" << m << " n=" << n;
      EXPECT_EQ(via_det.eval(1), p_poly(m, static_cast<long>(n))) << "m=" << m << " n=" << n;
    }
}

TEST(PredictBackward, Examples) {
  EXPECT_EQ(predict_backward(SeqFamily::catalan(), 3, 12).value, Poly(21945));
  for (const auto& f : {SeqFamily::catalan(), SeqFamily::central_binomial(), SeqFamily::m_numbers(2),
                        SeqFamily::narayana_c(), SeqFamily::narayana_b()}) {
    EXPECT_TRUE(predict_backward(f, 2, 2).value.is_zero()) << f.name();
    EXPECT_EQ(predict_backward(f, 2, 0).value, Poly(1)) << f.name();
  }
  EXPECT_EQ(predict_backward(SeqFamily::narayana_b(), 1, 3).value, (Poly{0, -2, -2}));
  EXPECT_EQ(predict_backward(SeqFamily::catalan(), 1, 4).source, "theorem-1");
}

TEST(PredictBackward, CentralBinomialAgainstBruteForce) {
  Poly brute = oracle::leibniz_hankel([](long i) { return oracle::central_binomial(i); }, -1, 4);
  EXPECT_EQ(brute, Poly(-12));
  EXPECT_EQ(predict_backward(SeqFamily::central_binomial(), 1, 4).value, brute);
}

TEST(PredictBackward, ListedTPolynomialValues) {
  const auto nc = SeqFamily::narayana_c();
  const auto nb = SeqFamily::narayana_b();
  EXPECT_EQ(predict_backward(nc, 1, 3).value, (Poly{0, -1, -1}));
  EXPECT_EQ(predict_backward(nc, 1, 5).value, (-tpow(6) * Poly{1, 1} * Poly{1, 0, 1}));
  EXPECT_EQ(predict_backward(nc, 2, 4).value, (-tpow(1) * Poly{1, 3, 1}));
  EXPECT_EQ(predict_backward(nc, 3, 5).value, (Poly{0, 1, 6, 6, 1}));
  EXPECT_EQ(predict_backward(nc, 3, 6).value, (Poly{0, 0, 0, 1, 6, 21, 28, 21, 6, 1}));
  EXPECT_EQ(predict_backward(nb, 1, 4).value, Poly(-4) * tpow(3) * geometric(2));
  EXPECT_EQ(predict_backward(nb, 3, 5).value, (Poly{0, 2} * Poly{1, 1} * Poly{1, 5, 1}));
}

TEST(PredictBackward, SignedFormEqualsReflectedForm) {
  for (long m = 1; m <= 5; ++m)
    for (std::size_t n = static_cast<std::size_t>(m) + 1; n <= 20; ++n)
      EXPECT_EQ(predict_backward(SeqFamily::catalan(), m, n).value,
                Poly(p_poly(m + 1, -static_cast<long>(n))))
          << m << "," << n;
}

TEST(PredictBackward, NarayanaAtOneMatchesCatalan) {
  for (long m = 1; m <= 3; ++m)
    for (std::size_t n = 0; n <= 10; ++n)
      EXPECT_EQ(predict_backward(SeqFamily::narayana_c(), m, n).value.eval(1),
                predict_backward(SeqFamily::catalan(), m, n).value.constant());
}

TEST(PredictBackward, Errors) {
  EXPECT_THROW(predict_backward(SeqFamily::conv_catalan(3), 1, 4), UnsupportedFamily);
  EXPECT_THROW(predict_backward(SeqFamily::catalan(), 0, 4), Error);
}
