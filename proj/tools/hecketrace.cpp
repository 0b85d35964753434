// Command-line front end: trace, oracle, classnum, orbital, equivariance, verify.
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecketrace/classnum.hpp"
#include "hecketrace/galois.hpp"
#include "hecketrace/oracle.hpp"
#include "hecketrace/orbital.hpp"
#include "hecketrace/tfengine.hpp"

using namespace hecketrace;
using Record = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string cell(const Record& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Records mode: one JSON object per line. Table mode: the same fields as aligned columns.
void emit(const std::vector<Record>& rows, bool records) {
  if (records) {
    for (const auto& r : rows) std::cout << r.dump() << '\n';
    return;
  }
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, _] : rows.front().items()) keys.push_back(key);
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const auto& r : rows) width[i] = std::max(width[i], cell(r.value(keys[i], Record())).size());
  }
  auto line = [&](auto&& text_of) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const int pad = i + 1 < keys.size() ? static_cast<int>(width[i]) : 0;
      std::cout << (i ? "  " : "") << std::left << std::setw(pad) << text_of(i);
    }
    std::cout << '\n';
  };
  line([&](std::size_t i) { return keys[i]; });
  for (const auto& r : rows) line([&](std::size_t i) { return cell(r.value(keys[i], Record())); });
}

void require_even_weight(int k) {
  if (k % 2 != 0) throw UsageError("parity: weight k must be even, got " + std::to_string(k));
  if (k < 4) throw UsageError("weight k must be >= 4, got " + std::to_string(k));
}

void require_m(long m) {
  if (m < 1) throw UsageError("m must be >= 1, got " + std::to_string(m));
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Record breakdown_record(const TraceBreakdown& b) {
  return Record{{"k", b.k},
                {"m", b.m},
                {"identity", b.identity.to_string()},
                {"elliptic", b.elliptic.to_string()},
                {"hyperbolic", b.hyperbolic.to_string()},
                {"total", b.total.to_string()}};
}

struct Options {
  bool records = false;
  // trace / oracle
  std::vector<int> ks;
  std::vector<long> ms;
  bool matrix = false;
  bool charpoly = false;
  // classnum
  long n = 0;
  bool forms = false;
  // orbital
  long d = 1;
  std::string gamma;
  int w = 0;
  // equivariance
  std::string suite;
  int samples = 100;
  std::uint64_t seed = HilbertSuiteConfig{}.seed;
  // verify / equivariance grids
  int k_min = 4;
  int k_max = 30;
  long m_max = 30;
};

int run_trace(const Options& o) {
  for (int k : o.ks) require_even_weight(k);
  for (long m : o.ms) require_m(m);
  std::vector<Record> rows;
  for (const auto& b : trace_grid(o.ks, o.ms)) rows.push_back(breakdown_record(b));
  emit(rows, o.records);
  return kOk;
}

int run_oracle(const Options& o) {
  if (o.matrix && o.charpoly) throw UsageError("--matrix and --charpoly are exclusive");
  for (int k : o.ks) require_even_weight(k);
  for (long m : o.ms) require_m(m);
  const long m_max = *std::max_element(o.ms.begin(), o.ms.end());
  std::vector<Record> rows;
  for (int k : o.ks) {
    const HeckeOracle oracle(k, m_max);
    for (long m : o.ms) {
      const RationalMatrix a = oracle.matrix(m);
      Record r{{"k", k}, {"m", m}, {"dim", a.size()}};
      if (o.matrix) {
        Record rowsj = Record::array();
        for (std::size_t i = 0; i < a.size(); ++i) {
          Record row = Record::array();
          for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).to_string());
          rowsj.push_back(row);
        }
        r["matrix"] = rowsj;
      } else if (o.charpoly) {
        const IntPolynomial p = charpoly(a);
        Record coeffs = Record::array();
        for (const auto& c : p) coeffs.push_back(c.get_str());
        r["charpoly"] = polynomial_to_string(p);
        r["coefficients"] = coeffs;
      } else {
        r["trace"] = a.trace().to_string();
      }
      rows.push_back(std::move(r));
    }
  }
  emit(rows, o.records);
  return kOk;
}

int run_classnum(const Options& o) {
  if (o.n < 0) throw UsageError("N must be >= 0, got " + std::to_string(o.n));
  Record r{{"n", o.n}, {"hurwitz", shared_hurwitz_cache().get(o.n).to_string()}};
  if (o.forms) {
    Record list = Record::array();
    if (o.n > 0)
      for (const auto& f : reduced_forms(o.n)) list.push_back(Record::array({f.a, f.b, f.c}));
    r["forms"] = list;
  }
  emit({r}, o.records);
  return kOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

template <class S>
Record orbital_record(const GroupElement<S>& g, const WeightVector& kw) {
  const EllipticityReport cls = classify(g);
  Record places = Record::array();
  for (PlaceType p : cls.places) places.push_back(to_string(p));
  Record r{{"places", places}, {"aggregate", to_string(cls.aggregate)}};
  if (cls.aggregate == Aggregate::degenerate)
    throw DegenerateInputError("parabolic input: t^2 = 4n at some real place");
  r["orbital"] = arch_orbital(g, kw).to_string();
  if constexpr (std::is_same_v<S, QuadElem>) {
    if (cls.aggregate == Aggregate::totally_elliptic_positive) {
      const WeightVector swapped = conjugate_weight(kw, SigmaAction::quadratic(g.trace().d()));
      r["conjugate_weight_orbital"] = arch_orbital(g, swapped).to_string();
      r["equivariant"] = orbital_equivariance_check(g, kw);
    }
  }
  return r;
}

int run_orbital(const Options& o) {
  const auto entries = split(o.gamma, ',');
  if (entries.size() != 4) throw UsageError("--gamma needs four comma-separated entries a,b,c,d");
  const WeightVector kw(o.ks, o.w);
  Record r;
  if (o.d == 1) {
    Mat2<Rational> m{Rational::parse(entries[0]), Rational::parse(entries[1]), Rational::parse(entries[2]),
                     Rational::parse(entries[3])};
    r = orbital_record(RationalElement(m), kw);
  } else {
    if (o.d < 2 || !is_valid_quadratic_seed(o.d))
      throw UsageError("--d must be 1 or a squarefree integer > 1, got " + std::to_string(o.d));
    Mat2<QuadElem> m{QuadElem::parse(entries[0], o.d), QuadElem::parse(entries[1], o.d),
                     QuadElem::parse(entries[2], o.d), QuadElem::parse(entries[3], o.d)};
    r = orbital_record(QuadraticElement(m), kw);
  }
  Record out{{"d", o.d}, {"k", o.ks}, {"w", o.w}};
  out.update(r);
  emit({out}, o.records);
  return kOk;
}

int run_equivariance(const Options& o) {
  std::vector<Record> rows;
  bool ok = true;
  if (o.suite == "rational-traces") {
    std::vector<int> ks;
    for (int k = o.k_min; k <= o.k_max; k += 2) {
      require_even_weight(k);
      ks.push_back(k);
    }
    require_m(o.m_max);
    const auto report = trace_identity_suite(ks, range(1, o.m_max));
    long failures = 0;
    for (const auto& e : report.entries)
      if (!e.passed()) {
        ++failures;
        Record r = breakdown_record(e.breakdown);
        r["status"] = "FAIL";
        rows.push_back(r);
      }
    ok = report.passed();
    rows.push_back(Record{{"suite", o.suite},
                          {"pairs", report.entries.size()},
                          {"audit_field", report.audit_field},
                          {"failures", failures},
                          {"status", ok ? "PASS" : "FAIL"}});
  } else if (o.suite == "hilbert-orbital") {
    HilbertSuiteConfig cfg;
    cfg.elliptic_samples = o.samples;
    cfg.vanishing_samples = 2 * o.samples;
    cfg.seed = o.seed;
    const auto report = hilbert_orbital_suite(cfg);
    for (const auto& f : report.fields)
      rows.push_back(Record{{"d", f.d},
                            {"elliptic_checked", f.elliptic_checked},
                            {"elliptic_passed", f.elliptic_passed},
                            {"vanishing_checked", f.vanishing_checked},
                            {"vanishing_zero", f.vanishing_zero},
                            {"status", f.passed() ? "PASS" : "FAIL"}});
    ok = report.passed();
  } else if (o.suite == "eigensystems") {
    const std::vector<int> ks = o.ks.empty() ? std::vector<int>{12, 16, 18, 20, 22, 24, 26} : o.ks;
    for (int k : ks) {
      require_even_weight(k);
      const auto r = eigensystem_orbit_check(k);
      Record rec{{"k", k},
                 {"dim", r.dimension},
                 {"orbit_size", r.orbit_size},
                 {"charpoly_T2", polynomial_to_string(r.charpoly_t2)},
                 {"field", r.field_d ? "Q(sqrt(" + std::to_string(*r.field_d) + "))" : "Q"},
                 {"a_2", r.field_d ? r.quadratic_systems[0][1].to_string() : r.rational_systems[0][1].to_string()},
                 {"status", r.passed() ? "PASS" : "FAIL"}};
      rows.push_back(rec);
      ok = ok && r.passed();
    }
  } else {
    throw UsageError("unknown suite '" + o.suite + "' (rational-traces, hilbert-orbital, eigensystems)");
  }
  emit(rows, o.records);
  return ok ? kOk : kVerifyFailed;
}

int run_verify(const Options& o) {
  if (o.k_min > o.k_max) throw UsageError("--k-min exceeds --k-max");
  require_m(o.m_max);
  std::vector<int> ks;
  for (int k = o.k_min; k <= o.k_max; ++k) {
    if (k % 2 != 0) continue;
    require_even_weight(k);
    ks.push_back(k);
  }
  if (ks.empty()) throw UsageError("no even weight in [k-min, k-max]");
  const auto ms = range(1, o.m_max);
  const auto engine = trace_grid(ks, ms);
  const auto oracle = oracle_trace_grid(ks, ms);
  std::vector<Record> rows;
  const TraceBreakdown* mismatch = nullptr;
  const Rational* mismatch_oracle = nullptr;
  for (std::size_t i = 0; i < engine.size(); ++i) {
    if (engine[i].total != oracle[i]) {
      mismatch = &engine[i];
      mismatch_oracle = &oracle[i];
      break;
    }
  }
  Record summary{{"pairs", engine.size()},
                 {"k_min", ks.front()},
                 {"k_max", ks.back()},
                 {"m_max", o.m_max},
                 {"status", mismatch ? "MISMATCH" : "VERIFIED"}};
  if (mismatch) {
    summary["first_mismatch_k"] = mismatch->k;
    summary["first_mismatch_m"] = mismatch->m;
    summary["engine"] = mismatch->total.to_string();
    summary["oracle"] = mismatch_oracle->to_string();
  }
  rows.push_back(summary);
  emit(rows, o.records);
  return mismatch ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric-side traces of Hecke operators on level-one cusp forms"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--records", o.records, "Emit one JSON record per line instead of a table");

  auto* trace = app.add_subcommand("trace", "Identity/elliptic/hyperbolic breakdown of Tr T_m on S_k");
  trace->add_option("--k", o.ks, "Even weight(s) >= 4")->required()->delimiter(',');
  trace->add_option("--m", o.ms, "Hecke index(es) >= 1")->required()->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Spectral oracle from q-expansions");
  oracle->add_option("--k", o.ks, "Even weight(s) >= 4")->required()->delimiter(',');
  oracle->add_option("--m", o.ms, "Hecke index(es) >= 1")->required()->delimiter(',');
  oracle->add_flag("--matrix", o.matrix, "Print the matrix of T_m in the monomial basis");
  oracle->add_flag("--charpoly", o.charpoly, "Print the characteristic polynomial of T_m");

  auto* classnum = app.add_subcommand("classnum", "Hurwitz class number H(N)");
  classnum->add_option("--n", o.n, "N >= 0")->required();
  classnum->add_flag("--forms", o.forms, "List the reduced forms");

  auto* orbital = app.add_subcommand("orbital", "Archimedean orbital integral of the weight function");
  orbital->add_option("--d", o.d, "1 for Q, or a squarefree d > 1 for Q(sqrt(d))")->default_val(1);
  orbital->add_option("--gamma", o.gamma, "Matrix entries a,b,c,d (row-major)")->required();
  orbital->add_option("--k", o.ks, "Weight per real place")->required()->delimiter(',');
  orbital->add_option("--w", o.w, "Central exponent (k_v = w mod 2)")->default_val(0);

  auto* equiv = app.add_subcommand("equivariance", "Galois-conjugation verification suites");
  equiv->add_option("--suite", o.suite, "rational-traces | hilbert-orbital | eigensystems")->required();
  equiv->add_option("--k-min", o.k_min, "rational-traces: smallest weight")->default_val(4);
  equiv->add_option("--k-max", o.k_max, "rational-traces: largest weight")->default_val(30);
  equiv->add_option("--m-max", o.m_max, "rational-traces: largest m")->default_val(30);
  equiv->add_option("--samples", o.samples, "hilbert-orbital: elliptic samples per field")->default_val(100);
  equiv->add_option("--seed", o.seed, "hilbert-orbital: RNG seed");
  equiv->add_option("--k", o.ks, "eigensystems: weights")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Engine against oracle on a (k, m) grid");
  verify->add_option("--k-min", o.k_min)->default_val(4);
  verify->add_option("--k-max", o.k_max)->default_val(30);
  verify->add_option("--m-max", o.m_max)->default_val(30);

  for (auto* sub : {trace, oracle, classnum, orbital, equiv, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*trace) return run_trace(o);
    if (*oracle) return run_oracle(o);
    if (*classnum) return run_classnum(o);
    if (*orbital) return run_orbital(o);
    if (*equiv) return run_equivariance(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedScopeError& e) {
    std::cerr << "error: unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
