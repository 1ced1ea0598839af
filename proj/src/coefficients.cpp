#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "regseq/symfunc.hpp"

namespace regseq {

namespace {

// Terms of the closed-form sum for a_m / f_m; coefficient of x^b.
std::vector<BigRat> f_coefficients(unsigned m) {
  if (m < 2) throw std::invalid_argument("a_m and f_m need m >= 2");
  const long h = m / 2;
  const bool odd = m % 2 == 1;
  std::vector<BigRat> coeffs;
  for (long b = 0; b <= h / 3; ++b) {
    const long hb = h - b;
    BigRat term(binomial(hb, odd ? 2 * b + 1 : 2 * b), BigInt(hb));
    if (hb % 2 == 1) term = -term;
    coeffs.push_back(term * BigRat(odd ? -static_cast<long>(m) : static_cast<long>(m)));
  }
  return coeffs;
}

}  // namespace

BigRat a_coefficient(unsigned m) {
  const BigRat x(BigInt(2), BigInt(3));
  BigRat acc;
  BigRat xb(1);
  for (const auto& c : f_coefficients(m)) {
    acc += c * xb;
    xb *= x;
  }
  return acc;
}

UniPoly f_polynomial(unsigned m) { return UniPoly(f_coefficients(m)); }

namespace {

// N_d = 6^d c_d satisfies N_d = 6 N_{d-1} - 18 N_{d-2} + 36 N_{d-3}.
class CSequence {
 public:
  BigInt scaled(unsigned d) {
    std::lock_guard lock(mu_);
    if (values_.empty()) values_ = {BigInt(0), BigInt(6), BigInt(0), BigInt(0)};
    while (values_.size() <= d) {
      const std::size_t k = values_.size();
      values_.push_back(BigInt(6) * values_[k - 1] - BigInt(18) * values_[k - 2] + BigInt(36) * values_[k - 3]);
    }
    return values_[d];
  }

 private:
  std::mutex mu_;
  std::vector<BigInt> values_;
};

CSequence& c_sequence() {
  static CSequence seq;
  return seq;
}

}  // namespace

BigRat c_coefficient(unsigned d) {
  if (d == 0) throw std::invalid_argument("c_d needs d >= 1");
  return BigRat(c_sequence().scaled(d), pow(BigInt(6), d));
}

int c_coefficient_sign(unsigned d) {
  if (d == 0) throw std::invalid_argument("c_d needs d >= 1");
  return c_sequence().scaled(d).sign();
}

GrowthReport c_growth_check(unsigned d_max) {
  if (d_max < 4) throw std::invalid_argument("c_growth_check needs d_max >= 4");
  GrowthReport r;
  r.d_max = d_max;
  auto cubic = [](double x) { return ((x - 1.0) * x + 0.5) * x - 1.0 / 6.0; };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (cubic(mid) < 0 ? lo : hi) = mid;
  }
  r.alpha = 0.5 * (lo + hi);
  // Roots sum to 1 and multiply to 1/6.
  const double beta_sq = 1.0 / (6.0 * r.alpha);
  r.beta_abs = std::sqrt(beta_sq);
  r.ratio4 = std::pow(r.alpha / r.beta_abs, 4);
  r.ratio_in_range = r.ratio4 >= 2.16 && r.ratio4 <= 2.18;

  const double log_ratio = std::log(r.alpha / r.beta_abs);
  r.dominance = true;
  for (unsigned d = 4; d <= d_max; ++d) {
    if (!(d * log_ratio > std::log(2.0))) {
      r.dominance = false;
      break;
    }
  }

  const double re = 0.5 * (1.0 - r.alpha);
  const std::complex<double> beta(re, std::sqrt(beta_sq - re * re));
  r.power_sum_matches = true;
  for (unsigned d = 1; d <= std::min(d_max, 40U); ++d) {
    const double approx = std::pow(r.alpha, d) + 2.0 * std::pow(beta, static_cast<double>(d)).real();
    const double exact = c_coefficient(d).to_double();
    if (std::abs(approx - exact) > 1e-9) r.power_sum_matches = false;
  }

  r.exact_positive = true;
  for (unsigned d = 4; d <= d_max; ++d) {
    if (c_coefficient_sign(d) <= 0) {
      r.exact_positive = false;
      r.first_nonpositive = d;
      break;
    }
  }
  return r;
}

UniPoly gaussian_binomial(unsigned d, unsigned n) {
  UniPoly acc = UniPoly::constant(BigRat(1));
  // After step i the accumulator is the Gaussian binomial [d+i, i], a polynomial.
  for (unsigned i = 1; i <= n; ++i) {
    auto q = up_divide_exact(acc * UniPoly::one_minus_power(d + i), UniPoly::one_minus_power(i));
    if (!q) throw std::logic_error("Gaussian binomial division was not exact");
    acc = std::move(*q);
  }
  return acc;
}

BigInt partition_count(unsigned k, unsigned n, unsigned d) {
  // Parts are chosen in non-increasing order, each at most `cap`.
  std::function<long(unsigned, unsigned, unsigned)> count = [&](unsigned left, unsigned parts,
                                                                 unsigned cap) -> long {
    if (left == 0) return 1;
    if (parts == 0) return 0;
    long total = 0;
    for (unsigned p = std::min(left, cap); p >= 1; --p) total += count(left - p, parts - 1, p);
    return total;
  };
  return BigInt(count(k, n, d));
}

}  // namespace regseq
