#include "cuspg2/exterior.hpp"

#include <bit>
#include <sstream>

#include "cuspg2/errors.hpp"

namespace cuspg2::exterior {

std::vector<int> indices(Mask mask) {
  std::vector<int> r;
  for (int k = 0; k < kGenerators; ++k)
    if (mask & (1u << k)) r.push_back(k + 1);
  return r;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in A, j in B) with i > j: each needs one transposition.
  int inversions = 0;
  for (int j = 0; j < kGenerators; ++j)
    if (b & (1u << j)) inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  return inversions % 2 ? -1 : 1;
}

ExteriorForm::ExteriorForm(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative form degree");
}

ExteriorForm ExteriorForm::constant(const Scalar& c) { return from_mask(0, c); }

ExteriorForm ExteriorForm::theta(int k, const Scalar& c) {
  if (k < 1 || k > kGenerators) throw DomainError("generator index out of range");
  return from_mask(static_cast<Mask>(1u << (k - 1)), c);
}

ExteriorForm ExteriorForm::monomial(std::initializer_list<int> idx, const Scalar& c) {
  ExteriorForm r = constant(c);
  for (int k : idx) r = wedge(r, theta(k));
  return r;
}

ExteriorForm ExteriorForm::from_mask(Mask mask, const Scalar& c) {
  ExteriorForm r(std::popcount(static_cast<unsigned>(mask)));
  r.add_term(mask, c);
  return r;
}

Scalar ExteriorForm::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar() : it->second;
}

bool ExteriorForm::is_basic() const {
  for (const auto& [mask, c] : terms_)
    if (mask & 0x80) return false;
  return true;
}

bool ExteriorForm::is_real() const {
  for (const auto& [mask, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

void ExteriorForm::add_term(Mask mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm r(degree_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
  return r;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& other) {
  if (other.degree_ != degree_) throw DomainError("adding forms of different degree");
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& other) {
  if (other.degree_ != degree_) throw DomainError("subtracting forms of different degree");
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

ExteriorForm operator*(const Scalar& c, const ExteriorForm& a) {
  ExteriorForm r(a.degree_);
  if (c.is_zero()) return r;
  for (const auto& [mask, x] : a.terms_) r.terms_.emplace(mask, c * x);
  return r;
}

std::string ExteriorForm::to_string(const std::array<std::string, kGenerators>* names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_rational()) {
      os << c.to_string();
    } else {
      os << '(' << c.to_string() << ')';
    }
    if (mask == 0) continue;
    os << '*';
    if (names) {
      bool first_factor = true;
      for (int k : indices(mask)) {
        os << (first_factor ? "" : "^") << (*names)[k - 1];
        first_factor = false;
      }
    } else {
      os << "th";
      for (int k : indices(mask)) os << k;
    }
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  ExteriorForm r(a.degree() + b.degree());
  if (r.degree() > kGenerators) return r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r += ExteriorForm::from_mask(static_cast<Mask>(ma | mb), s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return r;
}

ExteriorForm wedge(std::initializer_list<ExteriorForm> factors) {
  ExteriorForm r = ExteriorForm::constant(1);
  for (const auto& f : factors) r = wedge(r, f);
  return r;
}

StructureConstants::StructureConstants() = default;

void StructureConstants::set(int j, int k, int l, const Scalar& value) {
  if (j == k && !value.is_zero()) throw DomainError("c_jj^l must vanish");
  c_[j - 1][k - 1][l - 1] = value;
  c_[k - 1][j - 1][l - 1] = -value;
}

bool StructureConstants::is_antisymmetric() const {
  for (int j = 0; j < kGenerators; ++j)
    for (int k = 0; k < kGenerators; ++k)
      for (int l = 0; l < kGenerators; ++l)
        if (!(c_[j][k][l] + c_[k][j][l]).is_zero()) return false;
  return true;
}

bool StructureConstants::satisfies_jacobi() const {
  // Σ_m c_{jk}^m c_{ml}^n + c_{kl}^m c_{mj}^n + c_{lj}^m c_{mk}^n = 0.
  for (int j = 0; j < kGenerators; ++j)
    for (int k = j + 1; k < kGenerators; ++k)
      for (int l = k + 1; l < kGenerators; ++l)
        for (int n = 0; n < kGenerators; ++n) {
          Scalar s;
          for (int m = 0; m < kGenerators; ++m)
            s += c_[j][k][m] * c_[m][l][n] + c_[k][l][m] * c_[m][j][n] + c_[l][j][m] * c_[m][k][n];
          if (!s.is_zero()) return false;
        }
  return true;
}

ExteriorForm StructureConstants::dtheta(int l) const {
  ExteriorForm r(2);
  for (int j = 1; j <= kGenerators; ++j)
    for (int k = j + 1; k <= kGenerators; ++k) {
      const Scalar& c = (*this)(j, k, l);
      if (!c.is_zero()) r -= ExteriorForm::monomial({j, k}, c);
    }
  return r;
}

Differential::Differential(const StructureConstants& sc) {
  monomial_d_[0] = ExteriorForm(1);
  // d(θˡ∧θ^rest) = dθˡ∧θ^rest − θˡ∧d(θ^rest), l the smallest index; rest < mask numerically.
  for (unsigned mask = 1; mask < 256; ++mask) {
    const int low = std::countr_zero(mask);
    const Mask rest = static_cast<Mask>(mask & (mask - 1));
    const auto rest_form = ExteriorForm::from_mask(rest);
    monomial_d_[mask] = wedge(sc.dtheta(low + 1), rest_form) -
                        wedge(ExteriorForm::theta(low + 1), monomial_d_[rest]);
  }
}

ExteriorForm Differential::operator()(const ExteriorForm& a) const {
  ExteriorForm r(a.degree() + 1);
  if (r.degree() > kGenerators) return r;
  for (const auto& [mask, c] : a.terms()) r += c * monomial_d_[mask];
  return r;
}

ExteriorForm hodge_star(const ExteriorForm& a, Orientation orientation) {
  if (!a.is_basic()) throw DomainError("Hodge star needs a basic form (no θ⁸ component)");
  if (a.degree() > 7) throw DomainError("Hodge star of a form of degree above 7");
  ExteriorForm r(7 - a.degree());
  const int o = static_cast<int>(orientation);
  for (const auto& [mask, c] : a.terms()) {
    const Mask complement = static_cast<Mask>(kVolume7 & ~mask);
    const int s = wedge_sign(mask, complement) * o;
    r += ExteriorForm::from_mask(complement, s > 0 ? c : -c);
  }
  return r;
}

ExteriorForm volume_form(Orientation orientation) {
  return ExteriorForm::from_mask(kVolume7, Scalar(static_cast<int>(orientation)));
}

Scalar inner_product(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.degree() != b.degree()) throw DomainError("inner product of forms of different degree");
  if (!a.is_basic() || !b.is_basic()) throw DomainError("inner product needs basic forms");
  Scalar s;
  for (const auto& [mask, c] : a.terms()) {
    const auto it = b.terms().find(mask);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

ExteriorForm interior(const std::array<Scalar, kGenerators>& v, const ExteriorForm& a) {
  if (a.degree() == 0) throw DomainError("interior product of a function");
  ExteriorForm r(a.degree() - 1);
  for (const auto& [mask, c] : a.terms()) {
    int position = 0;
    for (int k : indices(mask)) {
      const Scalar& vk = v[k - 1];
      if (!vk.is_zero()) {
        const Mask rest = static_cast<Mask>(mask & ~(1u << (k - 1)));
        r += ExteriorForm::from_mask(rest, position % 2 ? -(vk * c) : vk * c);
      }
      ++position;
    }
  }
  return r;
}

ExteriorForm pullback(const ExteriorForm& a, const std::array<ExteriorForm, kGenerators>& images) {
  for (const auto& img : images)
    if (img.degree() != 1) throw DomainError("pullback images must be one-forms");
  ExteriorForm r(a.degree());
  for (const auto& [mask, c] : a.terms()) {
    ExteriorForm term = ExteriorForm::constant(c);
    for (int k : indices(mask)) term = wedge(term, images[k - 1]);
    r += term;
  }
  return r;
}

}  // namespace cuspg2::exterior
