#include "cuspg2/orbit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "cuspg2/errors.hpp"
#include "cuspg2/linalg.hpp"

namespace cuspg2::orbit {

using exterior::ExteriorForm;

const std::array<std::string, kSigmaCount> kSigmaNames = {"s11", "s12", "s13", "s21",
                                                         "s22", "s23", "s31", "s32"};

SigmaLinear SigmaLinear::symbol(int a, int b) {
  if (a < 1 || a > 3 || b < 1 || b > 3) throw DomainError("sigma indices must lie in 1..3");
  SigmaLinear s;
  if (a == 3 && b == 3) {
    s.c_[s11] = -1;
    s.c_[s22] = -1;
  } else {
    s.c_[3 * (a - 1) + (b - 1)] = 1;
  }
  return s;
}

bool SigmaLinear::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

SigmaLinear& SigmaLinear::operator+=(const SigmaLinear& o) {
  for (int k = 0; k < kSigmaCount; ++k) c_[k] += o.c_[k];
  return *this;
}

SigmaLinear& SigmaLinear::operator-=(const SigmaLinear& o) {
  for (int k = 0; k < kSigmaCount; ++k) c_[k] -= o.c_[k];
  return *this;
}

SigmaLinear operator*(const SigmaLinear& a, const Scalar& c) {
  SigmaLinear r;
  for (int k = 0; k < kSigmaCount; ++k) r.c_[k] = a.c_[k] * c;
  return r;
}

ExteriorForm SigmaLinear::as_form() const {
  ExteriorForm f(1);
  for (int k = 0; k < kSigmaCount; ++k)
    if (!c_[k].is_zero()) f += ExteriorForm::theta(k + 1, c_[k]);
  return f;
}

std::string SigmaLinear::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kSigmaCount; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[k].is_rational()) {
      os << c_[k].to_string();
    } else {
      os << '(' << c_[k].to_string() << ')';
    }
    os << '*' << kSigmaNames[k];
  }
  return first ? "0" : os.str();
}

FamilySextic family_sextic(int p, int q) {
  if (p <= 0 || q <= p || std::gcd(p, q) != 1)
    throw DomainError("family needs coprime integers 0 < p < q");
  // Gradient of f = Y^p Z^{q−p} − X^q at T = (t^p, t^q, 1), each entry a t-power and
  // a coefficient; then Σ_γ ∂f/∂T^γ · (σT)^γ.
  const std::array<int, 3> t_exponent = {p, q, 0};
  const std::array<std::pair<Rational, int>, 3> gradient = {{
      {Rational(-q), p * (q - 1)},
      {Rational(p), q * (p - 1)},
      {Rational(q - p), p * q},
  }};
  std::map<int, SigmaLinear> by_power;
  for (int g = 0; g < 3; ++g)
    for (int d = 0; d < 3; ++d) {
      const int power = gradient[g].second + t_exponent[d];
      by_power[power] += SigmaLinear::symbol(g + 1, d + 1) * Scalar(gradient[g].first);
    }
  std::erase_if(by_power, [](const auto& kv) { return kv.second.is_zero(); });
  const int low = by_power.begin()->first;
  const int high = by_power.rbegin()->first;
  const int degree = high - low;
  // Monomial t^e s^{degree−e} sits at s-index degree−e.
  std::vector<SigmaLinear> monomials(degree + 1);
  for (const auto& [power, coefficient] : by_power) monomials[degree - (power - low)] = coefficient;
  return {CoframeSextic::from_monomials(monomials), low};
}

Gram symmetric_product(const SigmaLinear& a, const SigmaLinear& b) {
  Gram g{};
  const Rational half(1, 2);
  for (int i = 0; i < kSigmaCount; ++i)
    for (int j = 0; j < kSigmaCount; ++j) g[i][j] = (a[i] * b[j] + a[j] * b[i]) * half;
  return g;
}

Gram operator+(const Gram& a, const Gram& b) {
  Gram r;
  for (int i = 0; i < kSigmaCount; ++i)
    for (int j = 0; j < kSigmaCount; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Gram scale(const Gram& a, const Scalar& c) {
  Gram r;
  for (int i = 0; i < kSigmaCount; ++i)
    for (int j = 0; j < kSigmaCount; ++j) r[i][j] = a[i][j] * c;
  return r;
}

Gram metric_from_sextic(const CoframeSextic& sextic) {
  if (sextic.degree() != 6) throw DomainError("metric needs a sextic");
  const auto& a = sextic.coefficients();
  return symmetric_product(a[0], a[6]) + scale(symmetric_product(a[1], a[5]), -6) +
         scale(symmetric_product(a[2], a[4]), 15) + scale(symmetric_product(a[3], a[3]), -10);
}

ExteriorForm threeform_from_sextic(const CoframeSextic& sextic) {
  if (sextic.degree() != 6) throw DomainError("three-form needs a sextic");
  std::array<ExteriorForm, 7> a;
  for (int k = 0; k < 7; ++k) a[k] = sextic[k].as_form();
  using exterior::wedge;
  const ExteriorForm inner = wedge(a[0], a[6]) + Scalar(6) * wedge(a[1], a[5]) - Scalar(15) * wedge(a[2], a[4]);
  const ExteriorForm body = Scalar(3) * (wedge({a[1], a[2], a[6]}) + wedge({a[0], a[4], a[5]})) + wedge(a[3], inner);
  return (Scalar::sqrt10() * Rational(1, 2)) * body;  // √(5/2) = √10/2
}

SigmaDictionary su21_dictionary(const liealg::FrameBasis& basis) {
  const auto s = liealg::sigma_in_theta(basis);
  SigmaDictionary d;
  for (int k = 0; k < kSigmaCount; ++k) d[k] = s[k / 3][k % 3];
  return d;
}

std::array<std::array<Scalar, 8>, 8> realize_metric(const Gram& g, const SigmaDictionary& dict) {
  // G_θ = Mᵀ G_σ M with σ_i = Σ_k M_ik θᵏ.
  std::array<std::array<Scalar, 8>, kSigmaCount> m{};
  for (int i = 0; i < kSigmaCount; ++i)
    for (int k = 0; k < 8; ++k) m[i][k] = dict[i].coefficient(static_cast<exterior::Mask>(1u << k));
  std::array<std::array<Scalar, 8>, 8> r{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Scalar s;
      for (int i = 0; i < kSigmaCount; ++i) {
        if (m[i][a].is_zero()) continue;
        for (int j = 0; j < kSigmaCount; ++j)
          if (!m[j][b].is_zero() && !g[i][j].is_zero()) s += m[i][a] * g[i][j] * m[j][b];
      }
      if (!s.is_real()) throw DomainError("realized metric has an imaginary component");
      r[a][b] = s;
    }
  return r;
}

ExteriorForm realize_form(const ExteriorForm& phi_sigma, const SigmaDictionary& dict) {
  std::array<ExteriorForm, 8> images;
  for (int k = 0; k < kSigmaCount; ++k) images[k] = dict[k];
  const auto r = exterior::pullback(phi_sigma, images);
  if (!r.is_real()) throw DomainError("realized three-form has an imaginary component");
  return r;
}

std::optional<RealForm> parse_real_form(std::string_view tag) {
  if (tag == "split") return RealForm::kSplit;
  if (tag == "su3") return RealForm::kSu3;
  if (tag == "su21") return RealForm::kSu21;
  return std::nullopt;
}

std::string to_string(RealForm form) {
  switch (form) {
    case RealForm::kSplit:
      return "split";
    case RealForm::kSu3:
      return "su3";
    case RealForm::kSu21:
      return "su21";
  }
  return "?";
}

std::array<std::array<Scalar, 7>, kSigmaCount> real_coordinates(RealForm form) {
  std::array<std::array<Scalar, 7>, kSigmaCount> l{};
  const Scalar i = Scalar::i();
  // Diagonal: σ¹₁ = w/4 (times i for the compact-type forms), σ²₂ = 0, so 4σ¹₁ − σ²₂ ∝ w.
  if (form == RealForm::kSplit) {
    l[s12][0] = 1;
    l[s21][1] = 1;
    l[s13][2] = 1;
    l[s31][3] = 1;
    l[s23][4] = 1;
    l[s32][5] = 1;
    l[s11][6] = Rational(1, 4);
    return l;
  }
  // σ¹₂ = x₀ + i x₁, σ¹₃ = x₂ + i x₃, σ²₃ = x₄ + i x₅.
  l[s12][0] = 1;
  l[s12][1] = i;
  l[s13][2] = 1;
  l[s13][3] = i;
  l[s23][4] = 1;
  l[s23][5] = i;
  l[s11][6] = i * Rational(1, 4);
  // σ²₁ = −conj σ¹₂ in both; the remaining lower entries flip sign between su(2,1) and su(3).
  l[s21][0] = -1;
  l[s21][1] = i;
  const Scalar lower = form == RealForm::kSu21 ? Scalar(1) : Scalar(-1);
  l[s31][2] = lower;
  l[s31][3] = -lower * i;
  l[s32][4] = lower;
  l[s32][5] = -lower * i;
  return l;
}

std::pair<int, int> signature(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  int plus = 0, minus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Bring a nonzero pivot to (k,k) by congruence.
    if (m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        std::swap(m[k], m[j]);
        for (auto& row : m) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < n && m[k][j] == 0) ++j;
        if (j == n) throw DomainError("degenerate quadratic form");
        // x_k ← x_k + x_j makes the (k,k) entry 2 m_kj + m_jj = 2 m_kj ≠ 0.
        for (std::size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
        for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
      }
    }
    const Rational pivot = m[k][k];
    (pivot > 0 ? plus : minus) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      // Congruence by E = I − f·e_r e_kᵀ: row operation, then the matching column operation.
      const Rational f = m[r][k] / pivot;
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[k][c];
      for (std::size_t c = 0; c < n; ++c) m[c][r] -= f * m[c][k];
    }
  }
  return {plus, minus};
}

namespace {

std::vector<std::vector<Rational>> to_rational(const std::vector<std::vector<Scalar>>& m) {
  std::vector<std::vector<Rational>> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) {
      const auto q = x.as_rational();
      if (!q) throw DomainError("quadratic form has non-rational entries: " + x.to_string());
      r[i].push_back(*q);
    }
  return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

}  // namespace

std::pair<int, int> metric_signature(RealForm form) {
  const Gram g = metric_from_sextic(family_sextic(2, 3).form);
  const auto l = real_coordinates(form);
  std::vector<std::vector<Scalar>> q(7, std::vector<Scalar>(7));
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int i = 0; i < kSigmaCount; ++i)
        for (int j = 0; j < kSigmaCount; ++j)
          if (!l[i][a].is_zero() && !l[j][b].is_zero()) q[a][b] += l[i][a] * g[i][j] * l[j][b];
  return signature(to_rational(q));
}

std::pair<int, int> phi_metric_signature(RealForm form) {
  const ExteriorForm phi_sigma = threeform_from_sextic(family_sextic(2, 3).form);
  const auto l = real_coordinates(form);
  std::array<ExteriorForm, 8> images;
  for (int i = 0; i < kSigmaCount; ++i) {
    images[i] = ExteriorForm(1);
    for (int a = 0; a < 7; ++a)
      if (!l[i][a].is_zero()) images[i] += ExteriorForm::theta(a + 1, l[i][a]);
  }
  const ExteriorForm phi = exterior::pullback(phi_sigma, images);
  std::array<ExteriorForm, 7> contracted;
  for (int a = 0; a < 7; ++a) {
    std::array<Scalar, 8> v{};
    v[a] = 1;
    contracted[a] = exterior::interior(v, phi);
  }
  std::vector<std::vector<Scalar>> b(7, std::vector<Scalar>(7));
  for (int a = 0; a < 7; ++a)
    for (int c = a; c < 7; ++c) {
      b[a][c] = exterior::wedge({contracted[a], contracted[c], phi}).coefficient(exterior::kVolume7);
      b[c][a] = b[a][c];
    }
  // B is cubic in φ, so the √(5/2) normalization leaves a common positive surd; divide it out.
  const Scalar* first = nullptr;
  for (const auto& row : b)
    for (const auto& x : row)
      if (!first && !x.is_zero()) first = &x;
  if (first) {
    for (unsigned surd : {Scalar::kSqrt2, Scalar::kSqrt5, Scalar::kSqrt10}) {
      if ((*first)[surd] == 0) continue;
      const Scalar unit = Scalar::basis_element(surd).inverse();
      for (auto& row : b)
        for (auto& x : row) x = x * unit;
      break;
    }
  }
  auto rational = to_rational(b);
  const Rational det = determinant(rational);
  if (det == 0) throw DomainError("three-form is degenerate");
  if (det < 0)
    for (auto& row : rational)
      for (auto& x : row) x = -x;
  return signature(rational);
}

bool stabilizer_check(int p, int q, const std::array<int, 3>& weights) {
  if (p <= 0 || q <= p) throw DomainError("stabilizer check needs 0 < p < q");
  // Y^p Z^{q−p} − X^q under (X,Y,Z) ↦ (a^{w₁}X, a^{w₂}Y, a^{w₃}Z): each monomial picks up a
  // power of a; the curve is preserved iff every monomial picks up the same power.
  struct Monomial {
    std::array<int, 3> exponents;
    int coefficient;
  };
  const std::array<Monomial, 2> f = {{{{0, p, q - p}, 1}, {{q, 0, 0}, -1}}};
  std::vector<int> a_powers;
  for (const auto& m : f) {
    int power = 0;
    for (int v = 0; v < 3; ++v) power += weights[v] * m.exponents[v];
    a_powers.push_back(power);
  }
  return std::adjacent_find(a_powers.begin(), a_powers.end(), std::not_equal_to<>()) == a_powers.end();
}

std::array<int, 3> stabilizer_weights(int p, int q) { return {q - 2 * p, p - 2 * q, p + q}; }

std::pair<long, long> aloff_wallach_indices(long p, long q) { return {-p - 2 * q, 2 * p + q}; }

std::optional<std::pair<long, long>> curve_exponents(long k, long l) {
  if ((2 * l + k) % 3 != 0 || (l + 2 * k) % 3 != 0) return std::nullopt;
  return std::pair<long, long>{(2 * l + k) / 3, -(l + 2 * k) / 3};
}

LiftData legendrian_lift(int p, int q) {
  if (p <= 0 || q <= p || std::gcd(p, q) != 1) throw DomainError("lift needs coprime 0 < p < q");
  // Components c·t^e: x = t^p, y = t^q, slope dy/dx = (q/p) t^{q−p}.
  const std::array<std::pair<Rational, int>, 3> gamma = {{
      {Rational(1), p},
      {Rational(1), q},
      {ratio(q, p), q - p},
  }};
  LiftData r;
  for (int k = 0; k < 3; ++k) {
    const auto& [c, e] = gamma[k];
    r.value_at_zero[k] = e == 0 ? c : Rational(0);
    r.velocity_at_zero[k] = e == 1 ? c : Rational(0);
  }
  r.smooth = r.velocity_at_zero[0] != 0 || r.velocity_at_zero[1] != 0 || r.velocity_at_zero[2] != 0;
  return r;
}

bool legendrian_lift_smooth(int p, int q) { return legendrian_lift(p, q).smooth; }

}  // namespace cuspg2::orbit
