#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "regseq/arith.hpp"

namespace regseq {

// The sum  S(h) = sum_{b=0}^{floor(h/3)} (-1)^{h-b}/(h-b) C(h-b, 2b) (2/3)^b,
// which is a_{2h} / (2h); its 3-adic analysis splits on h mod 3 (and mod 9).
BigRat sum_A1(long h);

enum class CaseTag { Case1, Case1Special, Case2, Case3, Case3Special };
std::string_view case_name(CaseTag tag);

struct Summand {
  long b;  // index after re-indexing b -> k - b
  BigRat value;
  PadicVal valuation;
};

// h = 3k: k > 1; h = 3k+1, 3k+2: k >= 1. Throws for h <= 3.
CaseTag case_of(long h);
long case_k(long h);

// Summands of S(h) re-indexed by b -> k - b, so b = 0 is the last original term.
std::vector<Summand> case_rewrite(long h);

// Sum of the re-indexed b = 0 and b = 1 summands, for h = 3 or 5 (mod 9), h > 3.
BigRat combined_term(long h);
// The factored closed form of the same quantity.
BigRat combined_closed_form(long h);

struct CaseProfile {
  long h = 0;
  CaseTag tag = CaseTag::Case1;
  long k = 0;
  long f = 0;  // v_3(k-1) in Case 1, v_3(2k+1) in Case 3, else 0
  std::vector<Summand> summands;
  std::optional<BigRat> combined;
  std::optional<PadicVal> combined_valuation;
  PadicVal leading_valuation = PadicVal::infinity();  // designated leading term (or combination)
  PadicVal bound = PadicVal::infinity();              // -k or f - k, the level the others must exceed
  bool leading_claim = false;  // leading term sits at (or, in Case 1, below) the bound as stated
  bool others_claim = false;   // every other summand lies strictly above the bound
  bool dominance = false;      // leading term is the unique minimum
  PadicVal sum_valuation = PadicVal::infinity();
};
CaseProfile dominance_check(long h);

// One summand's carry count against the displayed lower bound.
struct CarryRow {
  long b = 0;
  long e = 0;
  long s = 0;
  long f = 0;
  long carries = 0;
  long bound = 0;      // bound as displayed
  bool holds = false;
  long shifted_bound = 0;  // the same bound counting carries from the second digit, e-1 of them
  bool shifted_holds = false;
};
struct CarryReport {
  long h = 0;
  bool applicable = false;  // h = 3 (mod 9) or h = 2 (mod 3)
  std::vector<CarryRow> rows;
  bool holds = true;
  bool shifted_holds = true;
};
CarryReport carry_bound_check(long h);

struct NonvanishingReport {
  long h_max = 0;
  bool h3_is_zero = false;
  std::vector<long> zero_sums;            // exact zeros for h != 3: hard failures
  std::vector<long> rewrite_mismatches;   // re-indexed sum differs from S(h)
  std::vector<long> combined_mismatches;  // closed form differs, or valuation is not f - k
  std::vector<long> dominance_anomalies;  // claims fail though S(h) != 0: warnings
  std::vector<long> ultrametric_mismatches;  // v(S) != leading valuation under dominance
  std::vector<long> carry_failures;          // displayed carry bound violated
  std::vector<long> shifted_carry_failures;  // shifted carry bound violated
  std::vector<long> a_link_mismatches;       // a_{2h} != 2h S(h)

  bool nonvanishing() const { return h3_is_zero && zero_sums.empty(); }
  bool passed() const {
    return nonvanishing() && rewrite_mismatches.empty() && combined_mismatches.empty() &&
           dominance_anomalies.empty() && ultrametric_mismatches.empty() && carry_failures.empty() &&
           a_link_mismatches.empty();
  }
};
NonvanishingReport verify_nonvanishing(long h_max);

}  // namespace regseq
