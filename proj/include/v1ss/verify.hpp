#pragma once

// Window-wide checks of the pages: differential soundness, the E3
// presentation, survival, the w-grading and slice claims, and the
// bo/bu decomposition of E4(M).

#include <string>
#include <vector>

#include "v1ss/chart.hpp"
#include "v1ss/mahowald.hpp"
#include "v1ss/specseq.hpp"

namespace v1ss {

enum class Status { Pass, Fail, Insufficient };
std::string to_string(Status s);

struct ClaimRow {
  std::string claim;
  Multidegree degree;
  long long lhs = 0;
  long long rhs = 0;
  Status status = Status::Pass;
  std::string note;
};

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  /// Depends on the conjectural differentials.
  bool conditional = false;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t insufficient = 0;
  std::string details;
  /// Failing and insufficient rows; short checks list every row.
  std::vector<ClaimRow> rows;
  std::vector<Multidegree> checked_degrees;
};

CheckResult check_d_squared(const PageSet& pages, const ExecPolicy& policy = {});
CheckResult check_ext_tables(const ExecPolicy& policy = {});
CheckResult check_eta_identity();
CheckResult verify_e3_presentation(const PageSet& pages, const ExecPolicy& policy = {});
CheckResult check_survival(const PageSet& pages);
CheckResult check_smaller_conjecture(const PageSet& pages);
CheckResult check_d3m_list(const PageSet& pages);
CheckResult check_w_grading(const PageSet& pages);
CheckResult check_e2_quotients(const PageSet& pages);
CheckResult check_action(const PageSet& pages, int trials = 200, std::uint64_t seed = 1);
CheckResult check_mahowald_classes();

/// Mahowald dimensions over every bidegree the claims and the decomposition
/// can ask for in this window.
MahowaldTable claims_mahowald_table(const PageSet& pages, const ExecPolicy& policy = {});

/// Per-degree ker/rank of d3 on the w-slices of E3(M).
struct SliceData {
  std::vector<std::size_t> dim, ker, rank;
  std::size_t at(const std::vector<std::size_t>& v, int n) const {
    return n >= 0 && n < static_cast<int>(v.size()) ? v[n] : 0;
  }
};
SliceData slice_data(const PageSet& pages, const Multidegree& d);

/// Claims (1)-(4), (i)-(ii) and the direct/closed-form comparison of E4(M).
CheckResult verify_e4_claims(const PageSet& pages, const MahowaldTable& table, const ExecPolicy& policy = {});

struct DecompositionRow {
  AdamsBidegree at;
  long long lhs = 0;
  long long rhs = 0;
  Status status = Status::Pass;
  std::vector<Multidegree> tridegrees;
};

struct Decomposition {
  std::vector<DecompositionRow> rows;
  ChartDoc chart;
};

/// E4(M) collapsed to Adams bidegrees against the suspended bo/bu patterns of
/// H(d) and B(d), over the viewport.
Decomposition mahowald_decomposition_check(const PageSet& pages, const MahowaldTable& table,
                                           const Viewport& viewport = {}, const ExecPolicy& policy = {});
CheckResult summarize(const Decomposition& dec);
std::string decomposition_tsv(const Decomposition& dec);

struct VerificationReport {
  TruncationWindow window;
  int h_cap = 0;
  std::vector<std::pair<std::string, std::size_t>> trusted_counts;
  std::vector<CheckResult> checks;
  Decomposition decomposition;
  std::vector<std::pair<Multidegree, std::size_t>> e4_m;

  bool passed() const;
  /// Throws UnknownLabel.
  const CheckResult& check(std::string_view name) const;
};

VerificationReport run_verification(const PageSet& pages, const ExecPolicy& policy = {});
std::string to_json(const VerificationReport& report);

}  // namespace v1ss
