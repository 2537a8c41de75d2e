#pragma once

// Formula vs. exact-oracle table over S_{n,k} for n-k <= h <= n-2.

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starkit/cuts.hpp"
#include "starkit/formulas.hpp"
#include "starkit/graph.hpp"
#include "starkit/oracle.hpp"

namespace starkit {

struct ReportRow {
  std::string family = "nkstar";
  int n = 0;
  int k = 0;
  int h = 0;
  Measure measure = Measure::kappa;
  std::uint64_t formula_value = 0;
  std::optional<std::size_t> exact_value;
  bool timed_out = false;
  std::size_t witness_size = 0;
  bool certificate_ok = false;  // fragment cut verifies and has the formula size
  long long runtime_ms = 0;

  std::optional<bool> agree() const {
    if (timed_out) return std::nullopt;
    return exact_value && *exact_value == formula_value;
  }
};

struct ReportOptions {
  int n_min = 4;
  int n_max = 5;
  std::vector<Measure> measures{Measure::kappa, Measure::lambda};
  bool symmetry = false;
  std::optional<std::chrono::milliseconds> timeout = std::chrono::milliseconds(600'000);
  bool record_runtime = true;
};

template <class OnRow = void (*)(const ReportRow&)>
std::vector<ReportRow> build_report(const ReportOptions& opts, OnRow on_row = [](const ReportRow&) {}) {
  if (opts.n_max > 6) throw DomainError("report: n_max above 6 is out of desk scale");
  std::vector<ReportRow> rows;
  for (int n = std::max(3, opts.n_min); n <= opts.n_max; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const Graph g = build_nkstar(n, k);
      for (int h = n - k; h <= n - 2; ++h) {
        const FamilyParams p{n, k, h};
        const auto certs = build_cuts_from_X(g, h, build_fragment_X(p));
        for (auto m : opts.measures) {
          ReportRow row;
          row.n = n;
          row.k = k;
          row.h = h;
          row.measure = m;
          row.formula_value = nkstar_formula(m, n, k, h).value;
          const auto& cert = m == Measure::kappa ? certs.first : certs.second;
          row.certificate_ok = verify_certificate(g, cert).valid && cert.claimed_size == row.formula_value;
          OracleOptions oo;
          oo.symmetry = opts.symmetry;
          oo.timeout = opts.timeout;
          const auto start = std::chrono::steady_clock::now();
          const auto res = exact_measure(g, m, h, oo);
          const auto stop = std::chrono::steady_clock::now();
          row.timed_out = res.timed_out;
          row.exact_value = res.value;
          row.witness_size = res.witness_size();
          row.runtime_ms = opts.record_runtime
                               ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()
                               : 0;
          on_row(row);
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

inline void write_report_header(std::ostream& os) {
  os << "family,n,k,h,measure,formula,exact,witness_size,agree,runtime_ms\n";
}

inline void write_report_row(std::ostream& os, const ReportRow& r) {
  os << r.family << ',' << r.n << ',' << r.k << ',' << r.h << ',' << to_string(r.measure) << ','
     << r.formula_value << ',';
  if (r.timed_out)
    os << "timeout";
  else if (r.exact_value)
    os << *r.exact_value;
  else
    os << "none";
  os << ',' << r.witness_size << ',';
  if (auto a = r.agree()) os << (*a ? "true" : "false");
  os << ',' << r.runtime_ms << '\n';
}

inline void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  write_report_header(os);
  for (const auto& r : rows) write_report_row(os, r);
}

}  // namespace starkit
