#include "regseq/appendix.hpp"

#include <algorithm>
#include <stdexcept>

#include "regseq/symfunc.hpp"

namespace regseq {

namespace {

const BigRat& two_thirds() {
  static const BigRat v(BigInt(2), BigInt(3));
  return v;
}

long v3(long x) { return padic_valuation(static_cast<std::uint64_t>(x), 3); }

// Number of ternary digits s with 3^{s-1} <= x < 3^s.
long ternary_length(long x) {
  long s = 0;
  for (long p = 1; p <= x; p *= 3) ++s;
  return s;
}

long chi(bool b) { return b ? 1 : 0; }

}  // namespace

BigRat sum_A1(long h) {
  if (h < 1) throw std::invalid_argument("sum needs h >= 1");
  BigRat acc;
  for (long b = 0; b <= h / 3; ++b) {
    BigRat term(binomial(h - b, 2 * b), BigInt(h - b));
    term *= pow(two_thirds(), b);
    acc += (h - b) % 2 == 0 ? term : -term;
  }
  return acc;
}

std::string_view case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case1Special: return "case1-special";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
    case CaseTag::Case3Special: return "case3-special";
  }
  return "?";
}

CaseTag case_of(long h) {
  if (h <= 3) throw std::invalid_argument("case analysis needs h > 3");
  const long k = case_k(h);
  switch (h % 3) {
    case 0: return k % 3 == 1 ? CaseTag::Case1Special : CaseTag::Case1;
    case 1: return CaseTag::Case2;
    default: return k % 3 == 1 ? CaseTag::Case3Special : CaseTag::Case3;
  }
}

long case_k(long h) { return h / 3; }

std::vector<Summand> case_rewrite(long h) {
  const CaseTag tag = case_of(h);
  const long k = case_k(h);
  // Offset r so that the top argument is 2k + b + r and the bottom one 3b + r.
  const long r = (tag == CaseTag::Case1 || tag == CaseTag::Case1Special) ? 0 : (tag == CaseTag::Case2 ? 1 : 2);
  std::vector<Summand> out;
  out.reserve(k + 1);
  for (long b = 0; b <= k; ++b) {
    const long top = 2 * k + b + r;
    BigRat value(binomial(top, 3 * b + r), BigInt(top));
    value *= pow(two_thirds(), k - b);
    const bool negative = (b + (r == 1 ? 1 : 0)) % 2 == 1;
    if (negative) value = -value;
    PadicVal v = padic_valuation(value, 3);
    out.push_back({b, std::move(value), v});
  }
  return out;
}

BigRat combined_term(long h) {
  const CaseTag tag = case_of(h);
  if (tag != CaseTag::Case1Special && tag != CaseTag::Case3Special) {
    throw std::invalid_argument("combined term is defined for h = 3 or 5 (mod 9)");
  }
  const auto terms = case_rewrite(h);
  return terms.at(0).value + terms.at(1).value;
}

BigRat combined_closed_form(long h) {
  const CaseTag tag = case_of(h);
  const long k = case_k(h);
  const BigInt kk(k);
  if (tag == CaseTag::Case1Special) {
    const BigRat scale = pow(BigRat(2), k - 1) / pow(BigRat(3), k);
    return -(scale * BigRat(kk - 1) * BigRat(BigInt(2) * kk * kk + kk + 1) / BigRat(kk));
  }
  if (tag == CaseTag::Case3Special) {
    const BigRat scale = pow(BigRat(2), k - 2) / (BigRat(5) * pow(BigRat(3), k));
    return -(scale * BigRat(BigInt(2) * kk + 1) * BigRat(BigInt(2) * kk * kk * kk + kk * kk - kk - 10));
  }
  throw std::invalid_argument("combined term is defined for h = 3 or 5 (mod 9)");
}

CaseProfile dominance_check(long h) {
  CaseProfile p;
  p.h = h;
  p.tag = case_of(h);
  p.k = case_k(h);
  p.summands = case_rewrite(h);
  const long k = p.k;
  const bool special = p.tag == CaseTag::Case1Special || p.tag == CaseTag::Case3Special;
  if (p.tag == CaseTag::Case1Special) p.f = v3(k - 1);
  if (p.tag == CaseTag::Case3 || p.tag == CaseTag::Case3Special) p.f = v3(2 * k + 1);

  BigRat total;
  for (const auto& s : p.summands) total += s.value;
  p.sum_valuation = padic_valuation(total, 3);

  std::size_t first_other = 1;
  if (special) {
    p.combined = p.summands[0].value + p.summands[1].value;
    p.combined_valuation = padic_valuation(*p.combined, 3);
    p.leading_valuation = *p.combined_valuation;
    p.bound = PadicVal::finite(p.f - k);
    p.leading_claim = p.leading_valuation == p.bound;
    first_other = 2;
  } else {
    p.leading_valuation = p.summands[0].valuation;
    p.bound = PadicVal::finite(-k + p.f);
    p.leading_claim = p.tag == CaseTag::Case1 ? p.leading_valuation <= p.bound : p.leading_valuation == p.bound;
  }
  p.others_claim = true;
  p.dominance = true;
  for (std::size_t i = first_other; i < p.summands.size(); ++i) {
    const auto& v = p.summands[i].valuation;
    if (!(v > p.bound)) p.others_claim = false;
    if (!(v > p.leading_valuation)) p.dominance = false;
  }
  return p;
}

CarryReport carry_bound_check(long h) {
  CarryReport rep;
  rep.h = h;
  const CaseTag tag = case_of(h);
  const long k = case_k(h);
  if (tag == CaseTag::Case1Special) {
    rep.applicable = true;
    const long f = v3(k - 1);
    for (long b = 2; b <= k; ++b) {
      CarryRow row;
      row.b = b;
      row.e = v3(2 * k + b);
      row.s = ternary_length(3 * b);
      row.f = f;
      row.carries = carries_base_p(static_cast<std::uint64_t>(3 * b), static_cast<std::uint64_t>(2 * k - 2 * b), 3);
      const long tail = chi(f >= row.e) * std::max(0L, f - row.s + chi(row.s != row.e + 1));
      row.bound = row.e + tail;
      row.shifted_bound = std::max(0L, row.e - 1) + tail;
      row.holds = row.carries >= row.bound;
      row.shifted_holds = row.carries >= row.shifted_bound;
      rep.holds = rep.holds && row.holds;
      rep.shifted_holds = rep.shifted_holds && row.shifted_holds;
      rep.rows.push_back(row);
    }
  } else if (tag == CaseTag::Case3 || tag == CaseTag::Case3Special) {
    rep.applicable = true;
    const long f = v3(2 * k + 1);
    for (long b = 1; b <= k; ++b) {
      CarryRow row;
      row.b = b;
      row.e = v3(2 * k + b + 2);
      row.s = ternary_length(3 * b + 3);
      row.f = f;
      // The summand's binomial is C(2k+b+2, 3b+2): the carries are those of 3b+2 and 2k-2b.
      row.carries =
          carries_base_p(static_cast<std::uint64_t>(3 * b + 2), static_cast<std::uint64_t>(2 * k - 2 * b), 3);
      row.bound = row.e + chi(f >= row.e) * (chi(row.e > 0) + std::max(0L, f - row.s + 1));
      row.shifted_bound = row.bound;
      row.holds = row.carries >= row.bound;
      row.shifted_holds = row.holds;
      rep.holds = rep.holds && row.holds;
      rep.shifted_holds = rep.shifted_holds && row.shifted_holds;
      rep.rows.push_back(row);
    }
  }
  return rep;
}

NonvanishingReport verify_nonvanishing(long h_max) {
  if (h_max < 4) throw std::invalid_argument("verify_nonvanishing needs h_max >= 4");
  NonvanishingReport rep;
  rep.h_max = h_max;
  rep.h3_is_zero = sum_A1(3).is_zero();
  for (long h = 4; h <= h_max; ++h) {
    const BigRat s = sum_A1(h);
    if (s.is_zero()) rep.zero_sums.push_back(h);

    const CaseProfile p = dominance_check(h);
    BigRat rewritten;
    for (const auto& t : p.summands) rewritten += t.value;
    if (rewritten != s) rep.rewrite_mismatches.push_back(h);

    if (p.combined) {
      if (*p.combined != combined_closed_form(h) || !p.leading_claim) rep.combined_mismatches.push_back(h);
    }
    if (!(p.leading_claim && p.others_claim && p.dominance)) rep.dominance_anomalies.push_back(h);
    if (p.dominance && p.sum_valuation != p.leading_valuation) rep.ultrametric_mismatches.push_back(h);

    const CarryReport c = carry_bound_check(h);
    if (!c.holds) rep.carry_failures.push_back(h);
    if (!c.shifted_holds) rep.shifted_carry_failures.push_back(h);

    if (a_coefficient(static_cast<unsigned>(2 * h)) != BigRat(2 * h) * s) rep.a_link_mismatches.push_back(h);
  }
  return rep;
}

}  // namespace regseq
