#pragma once

// Command-line front end: gen, det, table and verify subcommands.
// run_cli() is the whole program minus process plumbing, so tests can drive
// it with argument vectors and string streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cathankel/closed_forms.hpp"
#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"
#include "cathankel/hankel.hpp"
#include "cathankel/sequences.hpp"
#include "cathankel/verify.hpp"

namespace cathankel::cli {

enum ExitCode : int {
  kOk = 0,
  kEngineError = 1,
  kUsage = 2,
  kTheoremFailure = 3,
  kConjectureCounterexample = 4,
};

enum class Format { Text, Json, Csv };

struct FamilyFlags {
  std::string name = "catalan";
  long b = 0;
  long k = 1;
  bool b_given = false;
  bool k_given = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SeqFamily resolve_family(const FamilyFlags& f) {
  if (f.name == "catalan") return SeqFamily::catalan();
  if (f.name == "central-binomial") return SeqFamily::central_binomial();
  if (f.name == "m-numbers") {
    if (!f.b_given) throw UsageError("--family m-numbers requires --b <int>");
    return SeqFamily::m_numbers(f.b);
  }
  if (f.name == "narayana-c") return SeqFamily::narayana_c();
  if (f.name == "narayana-b") return SeqFamily::narayana_b();
  if (f.name == "conv") {
    if (!f.k_given || f.k < 1) throw UsageError("--family conv requires --k <positive int>");
    return SeqFamily::conv_catalan(static_cast<unsigned>(f.k));
  }
  throw UsageError("unknown family '" + f.name + "'");
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

inline int run_gen(const SeqFamily& fam, long from, long to, Format fmt, std::ostream& out) {
  if (from > to) throw UsageError("--from must not exceed --to");
  const Sequence seq(fam);
  switch (fmt) {
    case Format::Text:
      for (long n = from; n <= to; ++n) out << (n == from ? "" : " ") << seq.term(n);
      out << '\n';
      break;
    case Format::Csv:
      out << "n,value\n";
      for (long n = from; n <= to; ++n) out << n << ',' << seq.term(n) << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["family"] = fam.name();
      j["from"] = from;
      j["to"] = to;
      auto terms = nlohmann::ordered_json::array();
      for (long n = from; n <= to; ++n) terms.push_back(seq.term(n).to_string());
      j["terms"] = terms;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

/// engine: "auto", "cofactor", "bareiss", "condensation" or "cross-check".
inline int run_det(const SeqFamily& fam, long shift, long size, const std::string& engine, Format fmt,
                   std::ostream& out, std::ostream& err) {
  if (size < 0) throw UsageError("--size must be non-negative");
  const HankelSpec spec{fam, shift, static_cast<std::size_t>(size)};
  DetResult res;
  try {
    if (engine == "auto") {
      res = det(spec);
    } else if (engine == "cross-check") {
      res = cross_check(spec);
    } else {
      Engine e;
      if (engine == "cofactor")
        e = Engine::Cofactor;
      else if (engine == "bareiss")
        e = Engine::Bareiss;
      else if (engine == "condensation")
        e = Engine::Condensation;
      else
        throw UsageError("unknown engine '" + engine + "'");
      auto v = det_with(build(spec), e);
      if (!v) {
        err << "error: condensation unavailable for this matrix (a zero interior minor blocks exact division)\n";
        return kEngineError;
      }
      res = {std::move(*v), e, spec};
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  }

  switch (fmt) {
    case Format::Text:
      out << res.value << '\n'
          << "engine: " << engine_name(res.engine) << '\n'
          << "spec: family=" << fam.name() << " shift=" << shift << " size=" << size << '\n';
      break;
    case Format::Csv:
      out << "family,shift,size,engine,value\n"
          << fam.name() << ',' << shift << ',' << size << ',' << engine_name(res.engine) << ',' << res.value << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["family"] = fam.name();
      j["shift"] = shift;
      j["size"] = size;
      j["engine"] = engine_name(res.engine);
      j["value"] = res.value.to_string();
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

/// Grid of D_m(n) for m in [shift_min, shift_max], n in [0, n_max]. A
/// negative n_max means an empty n range: only the header is emitted.
inline int run_table(const SeqFamily& fam, long shift_min, long shift_max, long n_max, Format fmt,
                     std::ostream& out, std::ostream& err) {
  if (shift_min > shift_max) throw UsageError("--shift must not exceed --shift-max");
  const Sequence seq(fam);
  std::vector<std::vector<Poly>> rows;
  try {
    if (n_max >= 0) {
      for (long m = shift_min; m <= shift_max; ++m) {
        std::vector<Poly> row;
        for (long n = 0; n <= n_max; ++n) row.push_back(det(seq, m, static_cast<std::size_t>(n)).value);
        rows.push_back(std::move(row));
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  }

  switch (fmt) {
    case Format::Csv:
      out << "m\\n";
      for (long n = 0; n <= n_max; ++n) out << ',' << n;
      out << '\n';
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out << shift_min + static_cast<long>(r);
        for (const auto& v : rows[r]) out << ',' << v;
        out << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "m=" << shift_min + static_cast<long>(r) << ':';
        for (const auto& v : rows[r]) out << ' ' << v;
        out << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["family"] = fam.name();
      j["shift_min"] = shift_min;
      j["shift_max"] = shift_max;
      j["n_max"] = n_max;
      auto jr = nlohmann::ordered_json::array();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        nlohmann::ordered_json row;
        row["m"] = shift_min + static_cast<long>(r);
        auto vals = nlohmann::ordered_json::array();
        for (const auto& v : rows[r]) vals.push_back(v.to_string());
        row["values"] = vals;
        jr.push_back(row);
      }
      j["rows"] = jr;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline void write_report(const Report& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json:
      out << serialize(r) << '\n';
      break;
    case Format::Csv:
      out << "claim_id,k,b,case,m,n,expected,actual,pass\n";
      for (const auto& c : r.cells) {
        out << r.claim_id << ',' << (c.k ? std::to_string(*c.k) : "") << ',' << (c.b ? c.b->get_str() : "") << ','
            << c.variant.value_or("") << ',' << c.m << ',' << c.n << ',' << c.expected << ',' << c.actual << ','
            << (c.pass ? "true" : "false") << '\n';
      }
      break;
    case Format::Text: {
      std::size_t flagged = 0;
      for (const auto& c : r.cells)
        if (c.note) ++flagged;
      out << r.claim_id << " (" << r.kind << "): " << (r.all_pass ? "PASS" : "FAIL") << '\n'
          << r.statement << '\n'
          << "cells: " << r.cells.size() << ", counterexamples: " << r.counterexamples.size()
          << ", flagged: " << flagged << '\n';
      for (const auto& c : r.counterexamples) {
        out << "  counterexample:";
        if (c.k) out << " k=" << *c.k;
        if (c.b) out << " b=" << *c.b;
        if (c.variant) out << " case=" << *c.variant;
        out << " m=" << c.m << " n=" << c.n << " expected=" << c.expected << " actual=" << c.actual << '\n';
      }
      break;
    }
  }
}

/// 0 when every cell passes; otherwise 3 for a theorem (a bug) and 4 for a
/// conjecture (a counterexample worth reporting).
inline int verify_exit_code(ClaimId id, const Report& r) {
  if (r.all_pass) return kOk;
  return is_theorem(id) ? kTheoremFailure : kConjectureCounterexample;
}

inline int run_verify(ClaimId id, const GridRange& range, Format fmt, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    r = verify(id, range);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_theorem(id) ? kTheoremFailure : kEngineError;
  }
  write_report(r, fmt, out);
  return verify_exit_code(id, r);
}

// ---------------------------------------------------------------------------
// Argument handling
// ---------------------------------------------------------------------------

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// selected subcommand.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel determinants of shifted Catalan-related sequences"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string format_name = "text";
  std::string out_path;
  FamilyFlags fam;
  const std::vector<std::string> formats{"text", "json", "csv"};
  const std::vector<std::string> families{"catalan", "central-binomial", "m-numbers", "narayana-c", "narayana-b",
                                          "conv"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to this file instead of standard output");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", fam.name, "Sequence family")->check(CLI::IsMember(families));
    sub->add_option_function<long>(
        "--b", [&](const long& v) { fam.b = v; fam.b_given = true; }, "Parameter b of m-numbers");
    sub->add_option_function<long>(
        "--k", [&](const long& v) { fam.k = v; fam.k_given = true; }, "Convolution power k of conv");
  };

  long from = 0, to = 10;
  auto* gen = app.add_subcommand("gen", "Emit sequence terms a_n for n in [from, to]");
  add_family(gen);
  add_common(gen);
  gen->add_option("--from", from, "First index (may be negative)");
  gen->add_option("--to", to, "Last index");

  long shift = 0, size = 0;
  std::string engine = "auto";
  auto* detc = app.add_subcommand("det", "Exact Hankel determinant det(a_{shift+i+j}), 0 <= i,j < size");
  add_family(detc);
  add_common(detc);
  detc->add_option("--shift", shift, "Shift m (may be negative)");
  detc->add_option("--size", size, "Matrix size n")->required();
  detc->add_option("--engine", engine, "Determinant engine")
      ->check(CLI::IsMember({"auto", "cofactor", "bareiss", "condensation", "cross-check"}));

  long shift_min = 0, shift_max = 0, n_max = 10;
  bool shift_max_given = false;
  auto* table = app.add_subcommand("table", "Grid of D_m(n) over a shift range and n in [0, n-max]");
  add_family(table);
  add_common(table);
  table->add_option("--shift", shift_min, "First shift");
  table->add_option_function<long>(
      "--shift-max", [&](const long& v) { shift_max = v; shift_max_given = true; }, "Last shift (default: --shift)");
  table->add_option("--n-max", n_max, "Largest size n; negative gives an empty grid");

  std::string claim;
  std::optional<long> v_m_min, v_m_max, v_n_max;
  std::string k_list, b_list;
  auto* ver = app.add_subcommand("verify", "Check a theorem or conjecture over a parameter grid");
  add_common(ver);
  ver->add_option("claim", claim, "t1, t6, t7, t8, t9, c10, c11, c12 or modular")
      ->required()
      ->check(CLI::IsMember({"t1", "t6", "t7", "t8", "t9", "c10", "c11", "c12", "modular"}));
  ver->add_option("--m-min", v_m_min, "Smallest m");
  ver->add_option("--m-max", v_m_max, "Largest m");
  ver->add_option("--n-max", v_n_max, "Largest determinant size n");
  ver->add_option("--k", k_list, "Comma-separated k values (conjectures, modular patterns)");
  ver->add_option("--b", b_list, "Comma-separated b values (t6)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const Format fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (gen->parsed()) return run_gen(resolve_family(fam), from, to, fmt, sink);
    if (detc->parsed()) return run_det(resolve_family(fam), shift, size, engine, fmt, sink, err);
    if (table->parsed())
      return run_table(resolve_family(fam), shift_min, shift_max_given ? shift_max : shift_min, n_max, fmt, sink, err);

    const ClaimId id = *parse_claim(claim);
    GridRange range = default_range(id);
    if (v_m_min) range.m_min = *v_m_min;
    if (v_m_max) range.m_max = *v_m_max;
    if (v_n_max) range.n_max = *v_n_max;
    if (!k_list.empty()) {
      range.k_list.clear();
      for (const auto& s : split_list(k_list)) {
        long k = parse_long(s, "--k");
        if (k < 1) throw UsageError("--k values must be positive");
        range.k_list.push_back(static_cast<unsigned>(k));
      }
    }
    if (!b_list.empty()) {
      range.b_list.clear();
      for (const auto& s : split_list(b_list)) range.b_list.emplace_back(parse_long(s, "--b"));
    }
    if (id == ClaimId::Modular)
      for (unsigned k : range.k_list)
        if (k < 3 || k > 7) throw UsageError("modular patterns exist only for 3 <= k <= 7");
    return run_verify(id, range, fmt, sink, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  }
}

}  // namespace cathankel::cli
