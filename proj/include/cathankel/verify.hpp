#pragma once

// Grid verification of the backward-shift theorems and range checks of the
// convolution-power conjectures. Expected values come from closed forms or
// from determinants of a *different* spec; actual values come from the
// determinant of the spec named in the cell.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "cathankel/closed_forms.hpp"
#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"
#include "cathankel/hankel.hpp"
#include "cathankel/sequences.hpp"

namespace cathankel {

enum class ClaimId { T1, T6, T7, T8, T9, C10, C11, C12, Modular };

inline const char* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::T1: return "t1";
    case ClaimId::T6: return "t6";
    case ClaimId::T7: return "t7";
    case ClaimId::T8: return "t8";
    case ClaimId::T9: return "t9";
    case ClaimId::C10: return "c10";
    case ClaimId::C11: return "c11";
    case ClaimId::C12: return "c12";
    case ClaimId::Modular: return "modular";
  }
  return "?";
}

inline std::optional<ClaimId> parse_claim(const std::string& s) {
  for (ClaimId id : {ClaimId::T1, ClaimId::T6, ClaimId::T7, ClaimId::T8, ClaimId::T9, ClaimId::C10, ClaimId::C11,
                     ClaimId::C12, ClaimId::Modular})
    if (s == claim_name(id)) return id;
  return std::nullopt;
}

inline bool is_theorem(ClaimId id) {
  return id == ClaimId::T1 || id == ClaimId::T6 || id == ClaimId::T7 || id == ClaimId::T8 || id == ClaimId::T9;
}

struct GridRange {
  long m_min = 1;
  long m_max = 5;
  long n_max = 25;
  std::vector<unsigned> k_list;
  std::vector<ExactInt> b_list;

  friend bool operator==(const GridRange&, const GridRange&) = default;
};

/// Default grid for a claim: theorems m <= 5, n <= 25 (m <= 3, n <= 10 for
/// the t-polynomial families); conjectures k <= 4, m <= 3, n <= 15;
/// modular patterns k = 3..7 up to argument 21.
inline GridRange default_range(ClaimId id) {
  GridRange r;
  switch (id) {
    case ClaimId::T1:
    case ClaimId::T7:
      break;
    case ClaimId::T6:
      r.b_list = {-2, -1, 0, 1, 2, 3};
      break;
    case ClaimId::T8:
    case ClaimId::T9:
      r.m_max = 3;
      r.n_max = 10;
      break;
    case ClaimId::C10:
    case ClaimId::C11:
    case ClaimId::C12:
      r.m_min = 0;
      r.m_max = 3;
      r.n_max = 15;
      r.k_list = {1, 2, 3, 4};
      break;
    case ClaimId::Modular:
      r.m_min = 0;
      r.m_max = 0;
      r.n_max = 21;
      r.k_list = {3, 4, 5, 6, 7};
      break;
  }
  return r;
}

struct Cell {
  std::optional<unsigned> k;
  std::optional<ExactInt> b;
  /// Distinguishes sub-claims sharing (k, m, n), e.g. "even"/"odd".
  std::optional<std::string> variant;
  long m = 0;
  long n = 0;
  Poly expected;
  Poly actual;
  bool pass = false;
  /// Set for cells outside the claim's stated range (flagged, not failed).
  std::optional<std::string> note;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Report {
  std::string claim_id;
  std::string kind;  // "theorem" or "conjecture"
  std::string statement;
  GridRange range;
  std::vector<Cell> cells;
  bool all_pass = true;
  std::vector<Cell> counterexamples;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline std::string join_k(const std::vector<unsigned>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return "{" + s + "}";
}

inline std::string join_b(const std::vector<ExactInt>& bs) {
  std::string s;
  for (std::size_t i = 0; i < bs.size(); ++i) s += (i ? "," : "") + bs[i].get_str();
  return "{" + s + "}";
}

/// Sorts cells by (k, b, m, n, variant) and fills the summary fields.
inline void finalize(Report& r) {
  auto key = [](const Cell& c) {
    return std::make_tuple(c.k.value_or(0), c.b.has_value(), c.b.value_or(0), c.m, c.n, c.variant.value_or(""));
  };
  std::stable_sort(r.cells.begin(), r.cells.end(), [&](const Cell& x, const Cell& y) { return key(x) < key(y); });
  r.counterexamples.clear();
  for (const auto& c : r.cells)
    if (!c.pass) r.counterexamples.push_back(c);
  r.all_pass = r.counterexamples.empty();
}

/// Memoized sequences keyed by family name, local to one verification run.
class SequenceCache {
 public:
  const Sequence& get(const SeqFamily& f) {
    auto it = seqs_.find(f.name());
    if (it == seqs_.end()) it = seqs_.emplace(f.name(), Sequence(f)).first;
    return it->second;
  }
  Poly det(const SeqFamily& f, long shift, long size) {
    return cathankel::det(get(f), shift, static_cast<std::size_t>(size)).value;
  }

 private:
  std::map<std::string, Sequence> seqs_;
};

inline Cell make_cell(long m, long n, Poly expected, Poly actual) {
  Cell c;
  c.m = m;
  c.n = n;
  c.pass = expected == actual;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  return c;
}

inline Poly signed_int(int sign, ExactInt v) { return Poly(ExactInt(sign * v)); }

inline ExactInt pow_int(long base, unsigned long e) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorems
// ---------------------------------------------------------------------------

/// Compares D_{-m}(n) against the closed form for every (b, m, n) in range.
/// For T1 and T6 a cell also requires the unsigned-argument form
/// p_{m+1}(-n) to agree with the signed form.
inline Report verify_theorem(ClaimId id, const GridRange& range) {
  if (!is_theorem(id)) throw Error(std::string(claim_name(id)) + " is not a theorem claim");
  Report r;
  r.claim_id = claim_name(id);
  r.kind = "theorem";
  r.range = range;
  const long m_lo = std::max(1L, range.m_min);

  std::vector<SeqFamily> families;
  switch (id) {
    case ClaimId::T1: families = {SeqFamily::catalan()}; break;
    case ClaimId::T6:
      for (const auto& b : range.b_list) families.push_back(SeqFamily::m_numbers(b));
      break;
    case ClaimId::T7: families = {SeqFamily::central_binomial()}; break;
    case ClaimId::T8: families = {SeqFamily::narayana_c()}; break;
    case ClaimId::T9: families = {SeqFamily::narayana_b()}; break;
    default: break;
  }

  std::ostringstream st;
  st << "Instance check of " << r.claim_id << " for m in [" << m_lo << ", " << range.m_max << "], n in [0, "
     << range.n_max << "]";
  if (id == ClaimId::T6) st << ", b in " << detail::join_b(range.b_list);
  r.statement = st.str();

  detail::SequenceCache cache;
  for (const auto& fam : families) {
    for (long m = m_lo; m <= range.m_max; ++m) {
      for (long n = 0; n <= range.n_max; ++n) {
        Prediction pred = predict_backward(fam, m, static_cast<std::size_t>(n));
        Poly actual = cache.det(fam, -m, n);
        Cell c = detail::make_cell(m, n, pred.value, std::move(actual));
        if (id == ClaimId::T6) c.b = fam.b;
        if (id == ClaimId::T1 || id == ClaimId::T6) {
          Poly reflected(p_poly(m + 1, -n));
          if (reflected != c.expected) {
            c.pass = false;
            c.note = "p_{m+1}(-n) = " + reflected.to_string() + " disagrees with the signed form";
          }
        }
        r.cells.push_back(std::move(c));
      }
    }
  }
  detail::finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Conjectures
// ---------------------------------------------------------------------------

inline std::string conjecture_statement(const std::string& what, const GridRange& range, long m_lo, long m_hi) {
  std::ostringstream st;
  st << "Range check only, not a proof: " << what << " checked for k in " << detail::join_k(range.k_list);
  if (m_lo <= m_hi) st << ", m in [" << m_lo << ", " << m_hi << "]";
  st << ", determinant size n in [0, " << range.n_max << "]";
  return st.str();
}

/// Both cases of the backward/forward reflection conjecture for convolution
/// powers:
///   even: D_{2k,1-k-m}(n) = (-1)^binom(m+k,2) D_{2k,1-k+m}(n-m-k),  n >= m+k
///   odd:  D_{2k-1,2-k-m}(n) = (-1)^binom(m+k-1,2) D_{2k-1,m+1-k}(n-m-k+1),  n >= m+k-1
/// and zero for 0 < n below the threshold. n = 0 below the threshold is
/// outside the stated ranges; those cells compare against 1 and are flagged.
inline Report verify_conjecture10(const GridRange& range) {
  Report r;
  r.claim_id = "c10";
  r.kind = "conjecture";
  r.range = range;
  const long m_lo = std::max(0L, range.m_min);
  r.statement = conjecture_statement("backward/forward reflection of convolution-power Hankel determinants", range,
                                     m_lo, range.m_max);

  detail::SequenceCache cache;
  for (unsigned k : range.k_list) {
    const long lk = static_cast<long>(k);
    for (long m = m_lo; m <= range.m_max; ++m) {
      struct Case {
        const char* name;
        SeqFamily fam;
        long shift, fwd_shift, threshold;
      };
      const Case cases[] = {
          {"even", SeqFamily::conv_catalan(2 * k), 1 - lk - m, 1 - lk + m, m + lk},
          {"odd", SeqFamily::conv_catalan(2 * k - 1), 2 - lk - m, m + 1 - lk, m + lk - 1},
      };
      for (const auto& cs : cases) {
        for (long n = 0; n <= range.n_max; ++n) {
          Poly expected;
          std::optional<std::string> note;
          if (n >= cs.threshold) {
            expected = sign_binom2(cs.threshold) * cache.det(cs.fam, cs.fwd_shift, n - cs.threshold);
          } else if (n == 0) {
            expected = Poly(1);
            note = "outside stated range: n = 0 uses the empty-determinant convention";
          }
          Cell c = detail::make_cell(m, n, std::move(expected), cache.det(cs.fam, cs.shift, n));
          c.k = k;
          c.variant = cs.name;
          c.note = note;
          r.cells.push_back(std::move(c));
        }
      }
    }
  }
  detail::finalize(r);
  return r;
}

/// The m = 0 specialization:
///   D_{2k,1-k}(n) = (-1)^(binom(k,2) q) if n = kq, else 0
///   D_{2k-1,2-k}(n) = (-1)^((k-1)q) if n = (2k-1)q,
///                     (-1)^((k-1)q + binom(k-1,2)) if n = (2k-1)q + k-1, else 0
inline Report verify_conjecture11(const GridRange& range) {
  Report r;
  r.claim_id = "c11";
  r.kind = "conjecture";
  r.range = range;
  r.statement = conjecture_statement("m = 0 values of convolution-power Hankel determinants", range, 0, -1);

  detail::SequenceCache cache;
  for (unsigned k : range.k_list) {
    const long lk = static_cast<long>(k);
    const long binom_k = lk * (lk - 1) / 2;
    const long binom_k1 = (lk - 1) * (lk - 2) / 2;
    const SeqFamily even = SeqFamily::conv_catalan(2 * k);
    const SeqFamily odd = SeqFamily::conv_catalan(2 * k - 1);
    for (long n = 0; n <= range.n_max; ++n) {
      Poly e_even = (n % lk == 0) ? Poly(sign_pow(binom_k * (n / lk))) : Poly();
      Cell ce = detail::make_cell(0, n, std::move(e_even), cache.det(even, 1 - lk, n));
      ce.k = k;
      ce.variant = "even";
      r.cells.push_back(std::move(ce));

      const long period = 2 * lk - 1;
      const long q = n / period, rem = n % period;
      Poly e_odd;
      if (rem == 0)
        e_odd = Poly(sign_pow((lk - 1) * q));
      else if (rem == lk - 1)
        e_odd = Poly(sign_pow((lk - 1) * q + binom_k1));
      Cell co = detail::make_cell(0, n, std::move(e_odd), cache.det(odd, 2 - lk, n));
      co.k = k;
      co.variant = "odd";
      r.cells.push_back(std::move(co));
    }
  }
  detail::finalize(r);
  return r;
}

/// For 0 <= m <= k:
///   D_{2k,m+1-k}(kq) = (-1)^(binom(k,2) q) (q+1)^m
///   D_{2k-1,m+2-k}((2k-1)q+k-1) = (-1)^(binom(k-1,2)+(k-1)q) (2k-1)^m (q+1)^m
/// Cell n is the determinant size. When k = 1 is requested, extra
/// "k1-reduction" cells compare D_{m+1}(n) of the plain Catalan numbers
/// with (n+1)^m for m <= 1.
inline Report verify_conjecture12(const GridRange& range) {
  Report r;
  r.claim_id = "c12";
  r.kind = "conjecture";
  r.range = range;
  const long m_lo = std::max(0L, range.m_min);
  r.statement = conjecture_statement("periodic polynomial values of convolution-power Hankel determinants (m <= k)",
                                     range, m_lo, range.m_max);

  detail::SequenceCache cache;
  for (unsigned k : range.k_list) {
    const long lk = static_cast<long>(k);
    const long binom_k = lk * (lk - 1) / 2;
    const long binom_k1 = (lk - 1) * (lk - 2) / 2;
    const SeqFamily even = SeqFamily::conv_catalan(2 * k);
    const SeqFamily odd = SeqFamily::conv_catalan(2 * k - 1);
    for (long m = m_lo; m <= std::min(lk, range.m_max); ++m) {
      const auto um = static_cast<unsigned long>(m);
      for (long q = 0; lk * q <= range.n_max; ++q) {
        const long size = lk * q;
        ExactInt v = detail::pow_int(q + 1, um);
        Cell c = detail::make_cell(m, size, detail::signed_int(sign_pow(binom_k * q), v),
                                   cache.det(even, m + 1 - lk, size));
        c.k = k;
        c.variant = "even";
        r.cells.push_back(std::move(c));
      }
      for (long q = 0; (2 * lk - 1) * q + lk - 1 <= range.n_max; ++q) {
        const long size = (2 * lk - 1) * q + lk - 1;
        ExactInt v = detail::pow_int(2 * lk - 1, um) * detail::pow_int(q + 1, um);
        Cell c = detail::make_cell(m, size, detail::signed_int(sign_pow(binom_k1 + (lk - 1) * q), v),
                                   cache.det(odd, m + 2 - lk, size));
        c.k = k;
        c.variant = "odd";
        r.cells.push_back(std::move(c));
      }
      if (k == 1 && m <= 1) {
        for (long n = 0; n <= range.n_max; ++n) {
          Cell c = detail::make_cell(m, n, Poly(detail::pow_int(n + 1, um)),
                                     cache.det(SeqFamily::catalan(), m + 1, n));
          c.k = k;
          c.variant = "k1-reduction";
          c.note = "consistency: D_" + std::to_string(m + 1) + "(n) = (n+1)^" + std::to_string(m) +
                   " on the plain Catalan grid";
          r.cells.push_back(std::move(c));
        }
      }
    }
  }
  detail::finalize(r);
  return r;
}

/// Conjectured value of D_{k,0}(n) from the residue-class lists, for
/// 3 <= k <= 7. Rational constants are applied over Rational and the result
/// must be integral.
inline ExactInt modular_pattern_value(unsigned k, long n) {
  auto sgn = [](long e) { return Rational(sign_pow(e)); };
  Rational v;
  switch (k) {
    case 3: {
      const long q = n / 3, r = n % 3;
      v = (r == 2) ? Rational(0) : sgn(q);
      break;
    }
    case 4: {
      const long q = n / 2;
      v = sgn(q) * (q + 1);
      break;
    }
    case 5: {
      const long q = n / 5, r = n % 5;
      const Rational c[] = {1, 1, Rational(-5 * (q + 1)), 0, Rational(5 * (q + 1))};
      v = c[r];
      break;
    }
    case 6: {
      const long q = n / 3, r = n % 3;
      if (r < 2)
        v = sgn(q) * Rational((q + 1) * (q + 1));
      else
        v = sgn(q + 1) * Rational(3, 2) * Rational((1 + q) * (2 + q) * (3 + 2 * q));
      break;
    }
    case 7: {
      const long q = n / 7, r = n % 7;
      switch (r) {
        case 0:
        case 1: v = sgn(q); break;
        case 2: v = sgn(q) * Rational(7, 6) * Rational((1 + q) * (-12 + 49 * q + 98 * q * q)); break;
        case 3: v = sgn(q + 1) * Rational(49 * (q + 1) * (q + 1)); break;
        case 4: v = 0; break;
        case 5: v = sgn(q) * Rational(49 * (q + 1) * (q + 1)); break;
        default: v = sgn(q) * Rational(7, 6) * Rational((1 + q) * (282 + 343 * q + 98 * q * q)); break;
      }
      break;
    }
    default:
      throw Error("modular patterns are listed only for 3 <= k <= 7, got k = " + std::to_string(k));
  }
  v.canonicalize();
  if (!is_integer(v))
    throw NonIntegerResult("modular pattern value for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                           " is not an integer: " + v.get_str());
  return v.get_num();
}

/// Checks D_{k,0}(n) against the residue-class formulas for every k in the
/// range's k_list (each within 3..7) and 0 <= n <= n_max.
inline Report verify_modular_patterns(const GridRange& range) {
  Report r;
  r.claim_id = "modular";
  r.kind = "conjecture";
  r.range = range;
  r.statement = conjecture_statement("residue-class patterns of D_{k,0}(n)", range, 0, -1);
  detail::SequenceCache cache;
  for (unsigned k : range.k_list) {
    if (k < 3 || k > 7) throw Error("modular patterns require 3 <= k <= 7, got k = " + std::to_string(k));
    const SeqFamily fam = SeqFamily::conv_catalan(k);
    for (long n = 0; n <= range.n_max; ++n) {
      Cell c = detail::make_cell(0, n, Poly(modular_pattern_value(k, n)), cache.det(fam, 0, n));
      c.k = k;
      r.cells.push_back(std::move(c));
    }
  }
  detail::finalize(r);
  return r;
}

inline Report verify_modular_patterns(unsigned k, long n_max) {
  GridRange g = default_range(ClaimId::Modular);
  g.k_list = {k};
  g.n_max = n_max;
  return verify_modular_patterns(g);
}

inline Report verify(ClaimId id, const GridRange& range) {
  switch (id) {
    case ClaimId::C10: return verify_conjecture10(range);
    case ClaimId::C11: return verify_conjecture11(range);
    case ClaimId::C12: return verify_conjecture12(range);
    case ClaimId::Modular: return verify_modular_patterns(range);
    default: return verify_theorem(id, range);
  }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const GridRange& g) {
  nlohmann::ordered_json j;
  j["m_min"] = g.m_min;
  j["m_max"] = g.m_max;
  j["n_max"] = g.n_max;
  j["k_list"] = g.k_list;
  auto bs = nlohmann::ordered_json::array();
  for (const auto& b : g.b_list) bs.push_back(b.get_str());
  j["b_list"] = bs;
  return j;
}

inline nlohmann::ordered_json to_json(const Cell& c) {
  nlohmann::ordered_json params;
  if (c.k) params["k"] = *c.k;
  if (c.b) params["b"] = c.b->get_str();
  if (c.variant) params["case"] = *c.variant;
  params["m"] = c.m;
  params["n"] = c.n;
  nlohmann::ordered_json j;
  j["params"] = params;
  j["expected"] = c.expected.to_string();
  j["actual"] = c.actual.to_string();
  j["pass"] = c.pass;
  if (c.note) j["note"] = *c.note;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["kind"] = r.kind;
  j["statement"] = r.statement;
  j["range"] = to_json(r.range);
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  j["cells"] = cells;
  j["all_pass"] = r.all_pass;
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
  j["counterexamples"] = cex;
  return j;
}

inline std::string serialize(const Report& r, int indent = 2) { return to_json(r).dump(indent); }

inline GridRange grid_from_json(const nlohmann::json& j) {
  GridRange g;
  g.m_min = j.at("m_min").get<long>();
  g.m_max = j.at("m_max").get<long>();
  g.n_max = j.at("n_max").get<long>();
  g.k_list = j.at("k_list").get<std::vector<unsigned>>();
  for (const auto& b : j.at("b_list")) g.b_list.emplace_back(b.get<std::string>());
  return g;
}

inline Cell cell_from_json(const nlohmann::json& j) {
  Cell c;
  const auto& p = j.at("params");
  if (p.contains("k")) c.k = p.at("k").get<unsigned>();
  if (p.contains("b")) c.b = ExactInt(p.at("b").get<std::string>());
  if (p.contains("case")) c.variant = p.at("case").get<std::string>();
  c.m = p.at("m").get<long>();
  c.n = p.at("n").get<long>();
  c.expected = Poly::parse(j.at("expected").get<std::string>());
  c.actual = Poly::parse(j.at("actual").get<std::string>());
  c.pass = j.at("pass").get<bool>();
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

inline Report parse_report(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.statement = j.at("statement").get<std::string>();
    r.range = grid_from_json(j.at("range"));
    for (const auto& c : j.at("cells")) r.cells.push_back(cell_from_json(c));
    r.all_pass = j.at("all_pass").get<bool>();
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(cell_from_json(c));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON does not match the schema: ") + e.what());
  }
}

}  // namespace cathankel
