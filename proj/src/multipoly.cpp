#include <numeric>
#include <sstream>
#include <stdexcept>

#include "regseq/poly.hpp"

namespace regseq {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> e(arity, 0);
  // Enumerate compositions in ascending lex order of the exponent vector.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == arity) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly MultiPoly::constant(std::size_t arity, const BigRat& c) {
  MultiPoly p(arity);
  p.add_term(Monomial::one(arity), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  return term(Monomial::variable(arity, index), BigRat(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const BigRat& c) {
  MultiPoly p(m.arity());
  p.add_term(m, c);
  return p;
}

std::optional<std::uint32_t> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

BigRat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigRat& c) {
  if (m.arity() != arity_) throw std::invalid_argument("term arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.arity_ != arity_) {
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                                std::to_string(o.arity_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
  MultiPoly r(arity_);
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, BigRat(1));
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::set_zero(std::size_t index) const {
  if (index >= arity_) throw std::out_of_range("variable index");
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.to_string();
    bool star = false;
    for (std::size_t i = 0; i < arity_; ++i) {
      const auto e = it->first[i];
      if (e == 0) continue;
      os << (star ? "*" : " * ") << var << (i + 1);
      if (e != 1) os << '^' << e;
      star = true;
    }
  }
  return os.str();
}

namespace {

// Horner-style substitution over variables index..arity-1 of the terms in
// [first, last), which all agree on the variables before `index`.
class Substituter {
 public:
  Substituter(std::span<const MultiPoly> values, std::size_t arity)
      : values_(values), powers_(values.size()), arity_(arity) {}

  const MultiPoly& power(std::size_t var, std::uint32_t k) {
    auto& cache = powers_[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(arity_, BigRat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * values_[var]);
    return cache[k];
  }

  using Term = std::pair<const Monomial*, const BigRat*>;

  MultiPoly run(std::span<const Term> terms, std::size_t index) {
    if (index == values_.size()) {
      MultiPoly acc(arity_);
      for (const auto& [m, c] : terms) acc += MultiPoly::constant(arity_, *c);
      return acc;
    }
    // Group by the exponent of variable `index`.
    std::map<std::uint32_t, std::vector<Term>> groups;
    for (const auto& t : terms) groups[(*t.first)[index]].push_back(t);
    MultiPoly acc(arity_);
    for (auto& [e, group] : groups) {
      MultiPoly inner = run(group, index + 1);
      acc += e == 0 ? inner : power(index, e) * inner;
    }
    return acc;
  }

 private:
  std::span<const MultiPoly> values_;
  std::vector<std::vector<MultiPoly>> powers_;
  std::size_t arity_;
};

}  // namespace

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> values) {
  if (values.size() != f.arity()) throw std::invalid_argument("substitution needs one value per variable");
  if (values.empty()) return f;
  const std::size_t arity = values.front().arity();
  for (const auto& v : values) {
    if (v.arity() != arity) throw std::invalid_argument("substituted values disagree on arity");
  }
  std::vector<Substituter::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(&m, &c);
  Substituter s(values, arity);
  return s.run(terms, 0);
}

}  // namespace regseq
