#pragma once
// Verification suite over the extremal-graph results: every check validates
// one statement (a structural identity, a closed-form inequality, or an
// exhaustively computed optimum / witness set) and reports pass, fail, or
// skipped. Failures are data, not exceptions; a failing row carries a graph6
// counterexample whenever one fits in a buildable order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wiener {

enum class CheckStatus { kPass, kFail, kSkipped };

const char* to_string(CheckStatus s);

struct CheckReport {
  std::string id;       // registry name of the owning check
  CheckStatus status = CheckStatus::kSkipped;
  std::string scope;    // coverage: ranges and evidence level
  std::string detail;   // observed values, or the reason for a skip
  std::string counterexample;       // graph6 of an offending graph (fail only)
  int n = 0;                        // representative order (0 = n/a)
  int k = -1;                       // representative cut count (-1 = n/a)
  std::int64_t optimum = -1;        // reported optimum (-1 = n/a)
  std::int64_t witness_count = -1;  // witnesses found (-1 = n/a)
  double elapsed_ms = 0;            // wall clock; rendered only with timings
};

struct CheckOptions {
  int max_n = 9;           // exhaustive-enumeration ceiling (hard cap 10)
  int workers = 1;         // enumeration threads
  std::uint64_t seed = 0;  // randomized-instance checks
};

// registry -----------------------------------------------------------------
// Check names in canonical order. resolve_check also accepts the short
// aliases used by `verify --lemma` (e.g. "4.7", "c-cmn", "pendant-location").
std::vector<std::string> check_names();
std::string resolve_check(const std::string& selector);  // "" when unknown

std::vector<CheckReport> run_check(const std::string& name,
                                   const CheckOptions& opt);
std::vector<CheckReport> run_all_checks(const CheckOptions& opt);
// table = 1, 2, or 3 (classes with that many cut vertices)
std::vector<CheckReport> table_checks(int table, const CheckOptions& opt);

bool all_passed(const std::vector<CheckReport>& reports);  // no kFail rows

// exploration (k >= 4; data only, no pass/fail semantics) -------------------
struct ExploreRow {
  int n = 0;
  int k = 0;
  bool skipped = false;  // class empty or beyond the enumeration ceiling
  std::string note;
  std::uint64_t optimum = 0;  // max Wiener index over the class
  std::uint64_t class_size = 0;
  std::vector<std::string> witnesses;  // graph6, sorted by certificate
  bool lollipop_defined = false;       // L(n, n-k) exists (n-k >= 3)
  bool lollipop_extremal = false;      // L(n, n-k) among the witnesses
  bool lollipop_unique = false;
};
std::vector<ExploreRow> explore_wiener_conjecture(int n_lo, int n_hi, int k_lo,
                                                  int k_hi,
                                                  const CheckOptions& opt);

// rendering ------------------------------------------------------------------
// CSV columns: check_id,status,n,k,optimum,witness_count,elapsed_ms.
// elapsed_ms renders as 0 unless timings is set, so reports stay byte-stable.
void render_markdown(const std::vector<CheckReport>& reports, std::ostream& out,
                     bool timings);
void render_csv(const std::vector<CheckReport>& reports, std::ostream& out,
                bool timings);

}  // namespace wiener
