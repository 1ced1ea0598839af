#include "regseq/symfunc.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace regseq {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0U) != parts_.end()) {
    throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::uint32_t Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

MultiPoly power_sum(unsigned k, std::size_t n) {
  MultiPoly p(n);
  for (std::size_t i = 0; i < n; ++i) p.add_term(Monomial::variable(n, i, k), BigRat(1));
  return p;
}

MultiPoly elementary(unsigned k, std::size_t n) {
  MultiPoly e(n);
  if (k > n) return e;
  std::vector<std::uint32_t> mask(n, 0);
  std::fill(mask.end() - k, mask.end(), 1U);
  do {
    e.add_term(Monomial(mask), BigRat(1));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return e;
}

MultiPoly complete(unsigned k, std::size_t n) {
  MultiPoly h(n);
  for (const auto& m : monomials_of_degree(n, k)) h.add_term(m, BigRat(1));
  return h;
}

MultiPoly monomial_sym(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) throw std::invalid_argument("partition has more parts than variables");
  std::vector<std::uint32_t> e(n, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  MultiPoly m(n);
  do {
    m.add_term(Monomial(e), BigRat(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return m;
}

MultiPoly newton_residual(std::size_t n, unsigned h) {
  MultiPoly acc(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const unsigned idx = static_cast<unsigned>(k) + h;
    const MultiPoly p = idx == 0 ? MultiPoly::constant(n, BigRat(static_cast<long>(n))) : power_sum(idx, n);
    MultiPoly term = elementary(static_cast<unsigned>(n - k), n) * p;
    if (k % 2 == 1) term *= BigRat(-1);
    acc += term;
  }
  return acc;
}

namespace {

enum class Kind { Power, Complete };

// Memo of the e-basis forms per (kind, n); deque keeps references stable.
class EBasisCache {
 public:
  EBasisPoly get(Kind kind, unsigned m, std::size_t n) {
    std::lock_guard lock(mu_);
    auto& seq = table_[{kind, n}];
    if (seq.empty()) {
      // Index 0 holds p_0 / h_0 placeholders; p_0 is never used by the recursion.
      seq.push_back(EBasisPoly{MultiPoly::constant(n, BigRat(kind == Kind::Power ? 0 : 1))});
    }
    while (seq.size() <= m) {
      const unsigned k = static_cast<unsigned>(seq.size());
      MultiPoly next(n);
      const std::size_t top = std::min<std::size_t>(k, n);
      for (std::size_t i = 1; i <= top; ++i) {
        if (kind == Kind::Power && i == k) continue;
        MultiPoly term = seq[k - i].poly.mul_monomial(Monomial::variable(n, i - 1));
        if (i % 2 == 0) term *= BigRat(-1);
        next += term;
      }
      if (kind == Kind::Power && k <= n) {
        const long sign = k % 2 == 1 ? 1 : -1;
        next.add_term(Monomial::variable(n, k - 1), BigRat(sign * static_cast<long>(k)));
      }
      seq.push_back(EBasisPoly{std::move(next)});
    }
    return seq[m];
  }

 private:
  std::mutex mu_;
  std::map<std::pair<Kind, std::size_t>, std::deque<EBasisPoly>> table_;
};

EBasisCache& ebasis_cache() {
  static EBasisCache cache;
  return cache;
}

}  // namespace

EBasisPoly power_in_e_basis(unsigned m, std::size_t n) {
  if (m == 0) throw std::invalid_argument("power sum degree must be positive");
  if (n == 0) throw std::invalid_argument("need at least one variable");
  return ebasis_cache().get(Kind::Power, m, n);
}

EBasisPoly complete_in_e_basis(unsigned m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one variable");
  return ebasis_cache().get(Kind::Complete, m, n);
}

MultiPoly expand_e_basis(const EBasisPoly& f) {
  const std::size_t n = f.arity();
  std::vector<MultiPoly> values;
  values.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) values.push_back(elementary(static_cast<unsigned>(i), n));
  return substitute(f.poly, values);
}

std::vector<Monomial> e_monomials(std::uint32_t weight, std::size_t n) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> g(n, 0);
  auto rec = [&](auto&& self, std::size_t part, std::uint32_t left) -> void {
    if (part == 1) {
      g[0] = left;
      out.emplace_back(g);
      return;
    }
    for (std::uint32_t c = 0; c * part <= left; ++c) {
      g[part - 1] = c;
      self(self, part - 1, left - c * static_cast<std::uint32_t>(part));
    }
    g[part - 1] = 0;
  };
  rec(rec, n, weight);
  std::sort(out.begin(), out.end());
  return out;
}

ModE1Class classify_mod_e1(unsigned t) {
  if (t < 2) throw std::invalid_argument("classify_mod_e1 needs t >= 2");
  const MultiPoly reduced = power_in_e_basis(t, 3).poly.set_zero(0);
  ModE1Class out;
  if (reduced.size() != 1) return out;
  const auto& [m, c] = *reduced.terms().begin();
  out.is_monomial = true;
  out.unit = c;
  out.e2_exp = m[1];
  out.e3_exp = m[2];
  return out;
}

ReducedShape reduce_mod_p1_p6(unsigned m) {
  const MultiPoly mod_e1 = power_in_e_basis(m, 3).poly.set_zero(0);
  const BigRat two_thirds(BigInt(2), BigInt(3));
  MultiPoly reduced(3);
  for (const auto& [mono, c] : mod_e1.terms()) {
    const std::uint32_t j = mono[2] / 2;
    const std::uint32_t r = mono[2] % 2;
    reduced.add_term(Monomial({0, mono[1] + 3 * j, r}), c * pow(two_thirds, static_cast<long>(j)));
  }
  ReducedShape out;
  out.e3_exp = m % 2;
  out.e2_exp = m / 2 - out.e3_exp;
  if (reduced.size() > 1) throw std::logic_error("reduction modulo (p1, p6) left several monomials");
  if (reduced.size() == 1) {
    const auto& [mono, c] = *reduced.terms().begin();
    if (mono[1] != out.e2_exp || mono[2] != out.e3_exp) {
      throw std::logic_error("reduction modulo (p1, p6) has an unexpected shape");
    }
    out.coefficient = c;
  }
  return out;
}

BigRat reduce_mod_p2_p3(unsigned d) {
  const MultiPoly f = power_in_e_basis(d, 3).poly;
  const std::vector<MultiPoly> values = {
      MultiPoly::variable(1, 0),
      MultiPoly::term(Monomial({2}), BigRat(BigInt(1), BigInt(2))),
      MultiPoly::term(Monomial({3}), BigRat(BigInt(1), BigInt(6))),
  };
  const MultiPoly t = substitute(f, values);
  if (t.size() > 1) throw std::logic_error("reduction modulo (p2, p3) is not a single power");
  return t.coefficient(Monomial({d}));
}

}  // namespace regseq
