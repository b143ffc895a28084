#include "crspan/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "crspan/error.hpp"

namespace crspan {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> z, std::vector<std::uint32_t> zeta) {
  if (zeta.empty()) zeta.assign(z.size(), 0);
  if (z.size() != zeta.size()) {
    throw Error(ErrorKind::kVariableMismatch, "z and zeta exponent vectors differ in length");
  }
  exps_ = std::move(z);
  exps_.insert(exps_.end(), zeta.begin(), zeta.end());
}

std::vector<std::uint32_t> Monomial::z_exponents() const {
  return {exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(vars())};
}

std::vector<std::uint32_t> Monomial::zeta_exponents() const {
  return {exps_.begin() + static_cast<std::ptrdiff_t>(vars()), exps_.end()};
}

Monomial Monomial::with_exponent(std::size_t i, VarKind kind, std::uint32_t e) const {
  Monomial out = *this;
  out.exps_[kind == VarKind::kZ ? i : vars() + i] = e;
  return out;
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

std::uint32_t Monomial::z_degree() const {
  return std::accumulate(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(vars()),
                         std::uint32_t{0});
}

bool Monomial::has_zeta() const {
  return std::any_of(exps_.begin() + static_cast<std::ptrdiff_t>(vars()), exps_.end(),
                     [](std::uint32_t e) { return e != 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  return out;
}

Monomial Monomial::swapped() const {
  Monomial out(vars());
  const std::size_t m = vars();
  for (std::size_t i = 0; i < m; ++i) {
    out.exps_[i] = exps_[m + i];
    out.exps_[m + i] = exps_[i];
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.raw() < b.raw();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t vars, const GaussianRational& c) {
  MultiPoly p(vars);
  p.add_term(Monomial(vars), c);
  return p;
}

MultiPoly MultiPoly::z(std::size_t vars, std::size_t i) {
  if (i >= vars) throw Error(ErrorKind::kIndexOutOfRange, "z variable index out of range");
  return term(Monomial(vars).with_exponent(i, VarKind::kZ, 1), 1);
}

MultiPoly MultiPoly::zeta(std::size_t vars, std::size_t i) {
  if (i >= vars) throw Error(ErrorKind::kIndexOutOfRange, "zeta variable index out of range");
  return term(Monomial(vars).with_exponent(i, VarKind::kZeta, 1), 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const GaussianRational& c) {
  MultiPoly p(m.vars());
  p.add_term(m, c);
  return p;
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool MultiPoly::has_zeta_support() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_zeta(); });
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::kDivisionByZero, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const GaussianRational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::kDivisionByZero, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

MultiPoly& MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.vars() != vars_) throw Error(ErrorKind::kVariableMismatch, "monomial variable count mismatch");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) {
    throw Error(ErrorKind::kVariableMismatch,
                "variable count mismatch: " + std::to_string(vars_) + " vs " + std::to_string(o.vars_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

MultiPoly MultiPoly::operator-() const { return scale(GaussianRational(-1)); }

MultiPoly MultiPoly::scale(const GaussianRational& c) const {
  MultiPoly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const GaussianRational& c) const {
  if (m.vars() != vars_) throw Error(ErrorKind::kVariableMismatch, "monomial variable count mismatch");
  MultiPoly out(vars_);
  if (c.is_zero()) return out;
  // Multiplication by a monomial preserves grlex order.
  for (const auto& [mm, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, v * c);
  return out;
}

MultiPoly MultiPoly::conjugate() const {
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.swapped(), c.conj());
  return out;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var, VarKind kind) const {
  if (var >= vars_) throw Error(ErrorKind::kIndexOutOfRange, "derivative variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(var, kind);
    if (e == 0) continue;
    out.terms_.emplace(m.with_exponent(var, kind, e - 1), c * GaussianRational(static_cast<long>(e)));
  }
  return out;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != vars_) {
    throw Error(ErrorKind::kVariableMismatch, "evaluation point has " + std::to_string(point.size()) +
                                                  " coordinates, expected " + std::to_string(vars_));
  }
  // Power tables for z and conj(z), grown on demand.
  std::vector<std::vector<GaussianRational>> zp(vars_), cp(vars_);
  auto power = [](std::vector<GaussianRational>& table, const GaussianRational& base,
                  std::uint32_t e) -> const GaussianRational& {
    if (table.empty()) table.emplace_back(1);
    while (table.size() <= e) table.push_back(table.back() * base);
    return table[e];
  };
  std::vector<GaussianRational> conj_point(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) conj_point[i] = point[i].conj();

  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (m.z(i)) t *= power(zp[i], point[i], m.z(i));
      if (m.zeta(i)) t *= power(cp[i], conj_point[i], m.zeta(i));
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::homogeneous_component(std::uint32_t degree) const {
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

bool MultiPoly::is_homogeneous(std::uint32_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return t.first.degree() == degree; });
}

MultiPoly MultiPoly::extend_vars(std::size_t vars) const {
  if (vars < vars_) throw Error(ErrorKind::kVariableMismatch, "cannot shrink variable count");
  MultiPoly out(vars);
  for (const auto& [m, c] : terms_) {
    auto z = m.z_exponents();
    auto zeta = m.zeta_exponents();
    z.resize(vars, 0);
    zeta.resize(vars, 0);
    out.add_term(Monomial(std::move(z), std::move(zeta)), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string factors;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (const auto& [e, name] : {std::pair{m.z(i), std::string("z")}, std::pair{m.zeta(i), std::string("zeta")}}) {
        if (e == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += name + std::to_string(i + 1);
        if (e > 1) factors += "^" + std::to_string(e);
      }
    }
    std::string coeff = crspan::to_string(c);
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) coeff = "(" + coeff + ")";
    std::string term;
    if (factors.empty()) {
      term = coeff;
    } else if (c.is_one()) {
      term = factors;
    } else if (c == GaussianRational(-1)) {
      term = "-" + factors;
    } else {
      term = coeff + "*" + factors;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

MultiPoly scale(const MultiPoly& a, const GaussianRational& c) { return a.scale(c); }
MultiPoly conjugate(const MultiPoly& a) { return a.conjugate(); }
MultiPoly partial_derivative(const MultiPoly& a, std::size_t var, VarKind kind) {
  return a.partial_derivative(var, kind);
}
GaussianRational evaluate(const MultiPoly& a, std::span<const GaussianRational> point) {
  return a.evaluate(point);
}
MultiPoly homogeneous_component(const MultiPoly& a, std::uint32_t degree) {
  return a.homogeneous_component(degree);
}
bool is_homogeneous(const MultiPoly& a, std::uint32_t degree) { return a.is_homogeneous(degree); }

Division reduce_mod(const MultiPoly& a, const MultiPoly& h) {
  if (h.is_zero()) throw Error(ErrorKind::kDivisionByZero, "reduce_mod by the zero polynomial");
  if (a.vars() != h.vars()) throw Error(ErrorKind::kVariableMismatch, "reduce_mod variable count mismatch");

  const Monomial& lm = h.leading_monomial();
  const GaussianRational lc_inv = h.leading_coefficient().inverse();
  Division out{MultiPoly(a.vars()), MultiPoly(a.vars())};
  MultiPoly rest = a;
  while (!rest.is_zero()) {
    const Monomial top = rest.leading_monomial();
    const GaussianRational c = rest.leading_coefficient();
    if (lm.divides(top)) {
      const Monomial q = lm.quotient_of(top);
      const GaussianRational f = c * lc_inv;
      out.quotient.add_term(q, f);
      rest -= h.times_monomial(q, f);
    } else {
      out.remainder.add_term(top, c);
      rest.add_term(top, -c);
    }
  }
  return out;
}

CoefficientMatrix coefficient_matrix(std::span<const MultiPoly> polys) {
  if (polys.empty()) throw Error(ErrorKind::kPrecondition, "coefficient_matrix of an empty list");
  const std::size_t vars = polys.front().vars();
  std::map<Monomial, std::size_t, GrlexLess> index;
  for (const auto& p : polys) {
    if (p.vars() != vars) throw Error(ErrorKind::kVariableMismatch, "coefficient_matrix variable mismatch");
    for (const auto& t : p.terms()) index.emplace(t.first, 0);
  }
  CoefficientMatrix out;
  out.columns.reserve(index.size());
  for (auto& [m, col] : index) {
    col = out.columns.size();
    out.columns.push_back(m);
  }
  std::vector<GaussianRational> entries(polys.size() * index.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) entries[r * index.size() + index.at(m)] = c;
  out.matrix = ExactMatrix(polys.size(), index.size(), std::move(entries));
  return out;
}

std::vector<Monomial> z_monomials_of_degree(std::size_t vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(vars, 0);
  // Enumerate compositions of `degree` into `vars` parts in lex-decreasing order.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == vars) {
      e[i] = left;
      out.emplace_back(e, std::vector<std::uint32_t>{});
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (vars == 0) return out;
  rec(rec, 0, degree);
  return out;
}

MultiPoly substitute_z(const MultiPoly& a, std::span<const MultiPoly> images) {
  if (images.size() != a.vars()) {
    throw Error(ErrorKind::kVariableMismatch, "substitute_z needs one image per variable");
  }
  if (a.has_zeta_support()) throw Error(ErrorKind::kPrecondition, "substitute_z on a zeta-dependent polynomial");
  const std::size_t out_vars = images.empty() ? 0 : images.front().vars();
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(MultiPoly::constant(out_vars, 1));
    while (table.size() <= e) table.push_back(table.back() * images[i]);
    return table[e];
  };
  MultiPoly out(out_vars);
  for (const auto& [m, c] : a.terms()) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < a.vars(); ++i)
      if (m.z(i)) t = t * power(i, m.z(i));
    out += t;
  }
  return out;
}

MultiPoly hermitian_square(std::size_t vars) {
  MultiPoly out(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    out.add_term(Monomial(vars).with_exponent(j, VarKind::kZ, 1).with_exponent(j, VarKind::kZeta, 1), 1);
  }
  return out;
}

}  // namespace crspan
