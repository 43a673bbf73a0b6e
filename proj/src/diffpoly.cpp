#include "cuspg2/diffpoly.hpp"

#include <bit>

#include <cctype>
#include <sstream>

#include "cuspg2/errors.hpp"

namespace cuspg2::diffpoly {

std::string variable_name(std::size_t v) {
  if (v == kX) return "x";
  if (v == kKappa) return "k";
  if (v == jet(0)) return "y";
  return "y" + std::to_string(v - 1);
}

std::optional<std::size_t> variable_index(std::string_view name) {
  if (name == "x") return kX;
  if (name == "k" || name == "kappa") return kKappa;
  if (name == "y") return jet(0);
  if (name.size() == 2 && name[0] == 'y' && name[1] >= '1' && name[1] <= '9') return jet(name[1] - '0');
  return std::nullopt;
}

namespace {

using Factors = JetFunction::Factors;

// Dense coefficients c[i] of v^i, without trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Univariate to_univariate(const JetPolynomial& p, std::size_t v) {
  Univariate a;
  for (const auto& t : p.terms()) {
    if (a.size() <= t.e[v]) a.resize(t.e[v] + 1);
    a[t.e[v]] += t.c;
  }
  trim(a);
  return a;
}

JetPolynomial from_univariate(const Univariate& a, std::size_t v) {
  JetPolynomial p;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) p = p + JetPolynomial::variable(v, static_cast<unsigned>(i)).scaled(a[i]);
  return p;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Univariate, Univariate> divide(Univariate a, const Univariate& b) {
  Univariate q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

Univariate gcd(Univariate a, Univariate b) {
  while (!b.empty()) {
    auto r = divide(std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Bitmask of the variables occurring in p.
std::uint32_t variable_mask(const JetPolynomial& p) {
  std::uint32_t m = 0;
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < kJetVars; ++v)
      if (t.e[v]) m |= 1u << v;
  return m;
}

JetPolynomial free_dx(const JetPolynomial& p) {
  if (p.depends_on(jet(kMaxJetOrder))) throw DomainError("total derivative needs jets beyond y9");
  JetPolynomial r = p.derivative(kX);
  for (int k = 0; k < kMaxJetOrder; ++k)
    if (p.depends_on(jet(k))) r += p.derivative(jet(k)).shifted(jet(k + 1));
  return r;
}

std::optional<int> exponent_of(const Factors& list, const JetPolynomial& f) {
  for (const auto& [g, e] : list)
    if (g == f) return e;
  return std::nullopt;
}

JetPolynomial expand(const Factors& list) {
  JetPolynomial r(1);
  for (const auto& [f, e] : list) r *= f.pow(static_cast<unsigned>(e));
  return r;
}

std::array<Rational, kJetVars> point_array(const JetPoint& point, std::array<bool, kJetVars>& set) {
  std::array<Rational, kJetVars> a{};
  set.fill(false);
  for (const auto& [v, value] : point) {
    if (v >= kJetVars) throw DomainError("unknown jet variable index");
    a[v] = value;
    set[v] = true;
  }
  return a;
}

Rational eval_checked(const JetPolynomial& p, const std::array<Rational, kJetVars>& a,
                      const std::array<bool, kJetVars>& set) {
  for (std::size_t v = 0; v < kJetVars; ++v)
    if (!set[v] && p.depends_on(v)) throw DomainError("no value given for " + variable_name(v));
  return p.evaluate(a);
}

// Exact rational cube root, if any.
std::optional<Rational> rational_cbrt(const Rational& r) {
  mpz_class num = r.get_num(), den = r.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;
  mpz_class a, b;
  if (!mpz_root(a.get_mpz_t(), num.get_mpz_t(), 3) || !mpz_root(b.get_mpz_t(), den.get_mpz_t(), 3))
    return std::nullopt;
  Rational q(negative ? mpz_class(-a) : a, b);
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// JetFunction

JetFunction::JetFunction(JetPolynomial p) : rest_(std::move(p)) { normalize(); }

JetFunction JetFunction::fraction(const JetPolynomial& num, const JetPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  JetFunction r(num);
  if (r.is_zero()) return r;
  r.absorb_denominator(den);
  r.normalize();
  return r;
}

void JetFunction::add_factor(Factors& list, const JetPolynomial& f, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(list.begin(), list.end(), f,
                             [](const auto& entry, const JetPolynomial& key) { return entry.first < key; });
  if (it != list.end() && it->first == f) {
    it->second += e;
    if (it->second == 0) list.erase(it);
  } else {
    list.insert(it, {f, e});
  }
}

void JetFunction::absorb_denominator(const JetPolynomial& d) {
  auto [content, p] = d.primitive_part();
  rest_ = rest_.scaled(1 / content);
  const auto m = p.monomial_gcd();
  p = p.divided_by_monomial(m);
  for (std::size_t v = 0; v < kJetVars; ++v)
    if (m[v]) add_factor(den_, JetPolynomial::variable(v), m[v]);
  if (p.is_constant()) return;
  // Split off known factors so that powers of the same polynomial merge.
  auto split_known = [&](const Factors& list, int sign) {
    for (const auto& [f, e] : Factors(list)) {
      if (f.size() == 1) continue;
      while (!p.is_constant() && p.size() >= f.size()) {
        auto q = p.divide_exact(f);
        if (!q) break;
        p = *q;
        if (sign > 0) add_factor(num_, f, -1);
        else add_factor(den_, f, 1);
      }
    }
  };
  split_known(num_, 1);
  split_known(den_, -1);
  if (p.is_constant()) {
    rest_ = rest_.scaled(1 / p.constant_term());
    return;
  }
  auto [c2, q] = p.primitive_part();
  rest_ = rest_.scaled(1 / c2);
  add_factor(den_, q, 1);
}

void JetFunction::normalize() {
  if (rest_.is_zero()) {
    num_.clear();
    den_.clear();
    return;
  }
  const auto m = rest_.monomial_gcd();
  bool any = false;
  for (auto x : m) any = any || x;
  if (any) {
    rest_ = rest_.divided_by_monomial(m);
    for (std::size_t v = 0; v < kJetVars; ++v)
      if (m[v]) add_factor(num_, JetPolynomial::variable(v), m[v]);
  }
  for (auto& [f, e] : num_) {
    if (auto d = exponent_of(den_, f)) {
      const int c = std::min(e, *d);
      e -= c;
      add_factor(den_, f, -c);
    }
  }
  num_.erase(std::remove_if(num_.begin(), num_.end(), [](const auto& x) { return x.second == 0; }), num_.end());
}

bool JetFunction::depends_on(std::size_t v) const {
  if (rest_.depends_on(v)) return true;
  for (const auto* list : {&num_, &den_})
    for (const auto& [f, e] : *list)
      if (f.depends_on(v)) return true;
  return false;
}

std::optional<Rational> JetFunction::constant_value() const {
  if (!num_.empty() || !den_.empty() || !rest_.is_constant()) return std::nullopt;
  return rest_.constant_term();
}

JetPolynomial JetFunction::numerator() const { return rest_ * expand(num_); }
JetPolynomial JetFunction::denominator() const { return expand(den_); }

JetFunction JetFunction::operator-() const {
  JetFunction r = *this;
  r.rest_ = -r.rest_;
  return r;
}

JetFunction JetFunction::combine(const JetFunction& a, const JetFunction& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  Factors common;
  for (const auto& [f, e] : a.num_)
    if (auto e2 = exponent_of(b.num_, f)) common.push_back({f, std::min(e, *e2)});
  Factors lcm = a.den_;
  for (const auto& [f, e] : b.den_) {
    auto e1 = exponent_of(lcm, f);
    if (!e1) add_factor(lcm, f, e);
    else if (e > *e1) add_factor(lcm, f, e - *e1);
  }
  auto scaled_rest = [&](const JetFunction& s) {
    JetPolynomial r = s.rest_;
    for (const auto& [f, e] : s.num_) {
      const int k = e - exponent_of(common, f).value_or(0);
      if (k) r *= f.pow(static_cast<unsigned>(k));
    }
    for (const auto& [f, e] : lcm) {
      const int k = e - exponent_of(s.den_, f).value_or(0);
      if (k) r *= f.pow(static_cast<unsigned>(k));
    }
    return r;
  };
  JetFunction r;
  r.rest_ = subtract ? scaled_rest(a) - scaled_rest(b) : scaled_rest(a) + scaled_rest(b);
  r.num_ = std::move(common);
  r.den_ = std::move(lcm);
  r.normalize();
  return r;
}

JetFunction operator*(const JetFunction& a, const JetFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  JetFunction r;
  r.rest_ = a.rest_ * b.rest_;
  r.num_ = a.num_;
  r.den_ = a.den_;
  for (const auto& [f, e] : b.num_) JetFunction::add_factor(r.num_, f, e);
  for (const auto& [f, e] : b.den_) JetFunction::add_factor(r.den_, f, e);
  r.normalize();
  return r;
}

JetFunction JetFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero jet function");
  JetFunction r;
  r.rest_ = JetPolynomial(1);
  r.num_ = den_;
  r.den_ = num_;
  r.absorb_denominator(rest_);
  r.normalize();
  return r;
}

JetFunction JetFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  JetFunction r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

JetFunction JetFunction::derive(const PolynomialDerivation& d) const {
  if (is_zero()) return {};
  struct Active {
    const JetPolynomial* f;
    JetPolynomial df;
    int weight;  // signed exponent
  };
  std::vector<Active> active;
  for (const auto& [f, e] : num_) {
    auto df = d(f);
    if (!df.is_zero()) active.push_back({&f, std::move(df), e});
  }
  for (const auto& [f, e] : den_) {
    auto df = d(f);
    if (!df.is_zero()) active.push_back({&f, std::move(df), -e});
  }
  const std::size_t n = active.size();
  // prefix[i] = Π_{j<i} f_j, suffix[i] = Π_{j≥i} f_j.
  std::vector<JetPolynomial> prefix(n + 1, JetPolynomial(1)), suffix(n + 1, JetPolynomial(1));
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * *active[i].f;
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * *active[i].f;
  JetPolynomial q = d(rest_) * prefix[n];
  for (std::size_t i = 0; i < n; ++i)
    q += (rest_ * active[i].df * prefix[i] * suffix[i + 1]).scaled(Rational(active[i].weight));
  JetFunction r;
  r.rest_ = std::move(q);
  r.num_ = num_;
  r.den_ = den_;
  for (const auto& a : active) {
    if (a.weight > 0) add_factor(r.num_, *a.f, -1);
    else add_factor(r.den_, *a.f, 1);
  }
  r.normalize();
  return r;
}

JetFunction JetFunction::partial(std::size_t v) const {
  return derive([v](const JetPolynomial& p) { return p.derivative(v); });
}

JetFunction JetFunction::total_derivative() const { return derive(free_dx); }

JetFunction JetFunction::reduced() const {
  JetFunction r = *this;
  if (r.is_zero()) return r;
  for (auto& [f, e] : r.den_) {
    while (e > 0) {
      auto q = r.rest_.divide_exact(f);
      if (!q) break;
      r.rest_ = std::move(*q);
      --e;
    }
  }
  r.den_.erase(std::remove_if(r.den_.begin(), r.den_.end(), [](const auto& x) { return x.second == 0; }),
               r.den_.end());
  r.normalize();
  return r;
}

JetFunction JetFunction::canonical() const {
  JetFunction r = reduced();
  std::uint32_t vars = variable_mask(r.rest_);
  for (const auto& [f, e] : r.num_) vars |= variable_mask(f);
  std::uint32_t den_vars = 0;
  for (const auto& [f, e] : r.den_) den_vars |= variable_mask(f);
  vars |= den_vars;
  if (den_vars == 0 || (vars & (vars - 1)) != 0) return r;
  const auto v = static_cast<std::size_t>(std::countr_zero(vars));
  const Univariate n = to_univariate(r.numerator(), v), d = to_univariate(r.denominator(), v);
  const Univariate g = gcd(n, d);
  if (g.size() <= 1) return r;
  return fraction(from_univariate(divide(n, g).first, v), from_univariate(divide(d, g).first, v));
}

Rational JetFunction::evaluate(const JetPoint& point) const {
  std::array<bool, kJetVars> set{};
  const auto a = point_array(point, set);
  Rational den = 1;
  for (const auto& [f, e] : den_) den *= cuspg2::pow(eval_checked(f, a, set), e);
  if (den == 0) {
    const JetFunction r = reduced();
    if (r.den_.size() < den_.size() || r.rest_.size() != rest_.size()) {
      Rational rd = 1;
      for (const auto& [f, e] : r.den_) rd *= cuspg2::pow(eval_checked(f, a, set), e);
      if (rd != 0) return r.evaluate(point);
    }
    throw DivisionByZero("jet function has a pole at the point");
  }
  Rational num = eval_checked(rest_, a, set);
  for (const auto& [f, e] : num_) num *= cuspg2::pow(eval_checked(f, a, set), e);
  return num / den;
}

JetFunction JetFunction::substitute(const std::map<std::size_t, JetFunction>& images) const {
  std::array<JetFunction, kJetVars> table;
  for (std::size_t v = 0; v < kJetVars; ++v) {
    auto it = images.find(v);
    table[v] = it != images.end() ? it->second : JetFunction::variable(v);
  }
  auto image = [&](std::size_t v) -> const JetFunction& { return table[v]; };
  auto sub = [&](const JetPolynomial& p) { return p.evaluate_with<JetFunction>(image); };
  JetFunction r = sub(rest_);
  for (const auto& [f, e] : num_) r *= sub(f).pow(e);
  for (const auto& [f, e] : den_) r /= sub(f).pow(e);
  return r;
}

std::string JetFunction::to_string() const {
  const JetFunction r = canonical();
  const auto num = r.numerator().to_string(variable_name);
  if (r.den_.empty()) return num;
  return "(" + num + ")/(" + r.denominator().to_string(variable_name) + ")";
}

// ---------------------------------------------------------------------------------------------
// CubeRootBase

CubeRootBase CubeRootBase::from(const JetFunction& r) {
  if (r.is_zero()) throw DomainError("cube-root base must be nonzero");
  CubeRootBase b;
  auto [content, p] = r.rest().primitive_part();
  b.constant = content;
  if (!p.is_constant()) b.factors.push_back({JetFunction(p), 1});
  for (const auto& [f, e] : r.numerator_factors()) b.factors.push_back({JetFunction(f), e});
  for (const auto& [f, e] : r.denominator_factors()) b.factors.push_back({JetFunction(f), -e});
  return b;
}

JetFunction CubeRootBase::value() const {
  JetFunction r(constant);
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

bool operator==(const CubeRootBase& a, const CubeRootBase& b) {
  if (a.constant != b.constant || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (a.factors[i].second != b.factors[i].second || !(a.factors[i].first == b.factors[i].first)) return false;
  return true;
}

// ---------------------------------------------------------------------------------------------
// ExtendedJetFunction

namespace {

std::shared_ptr<const CubeRootBase> merge_base(const std::shared_ptr<const CubeRootBase>& a,
                                               const std::shared_ptr<const CubeRootBase>& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw DomainError("extended jet functions over different cube-root bases");
}

}  // namespace

ExtendedJetFunction::ExtendedJetFunction(std::array<JetFunction, 3> c, std::shared_ptr<const CubeRootBase> base)
    : c_(std::move(c)), base_(std::move(base)) {
  if (!base_ && !is_rational()) throw DomainError("cube-root components need a base");
}

ExtendedJetFunction ExtendedJetFunction::generator(std::shared_ptr<const CubeRootBase> base) {
  if (!base) throw DomainError("generator needs a base");
  return ExtendedJetFunction({JetFunction(), JetFunction(1), JetFunction()}, std::move(base));
}

ExtendedJetFunction ExtendedJetFunction::operator-() const {
  ExtendedJetFunction r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

ExtendedJetFunction operator+(const ExtendedJetFunction& a, const ExtendedJetFunction& b) {
  return ExtendedJetFunction({a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}, merge_base(a.base_, b.base_));
}

ExtendedJetFunction operator-(const ExtendedJetFunction& a, const ExtendedJetFunction& b) {
  return ExtendedJetFunction({a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}, merge_base(a.base_, b.base_));
}

ExtendedJetFunction operator*(const ExtendedJetFunction& a, const ExtendedJetFunction& b) {
  auto base = merge_base(a.base_, b.base_);
  if (a.is_rational() && b.is_rational()) return ExtendedJetFunction(a.c_[0] * b.c_[0]);
  std::array<JetFunction, 5> p{};
  for (int i = 0; i < 3; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j)
      if (!b.c_[j].is_zero()) p[i + j] += a.c_[i] * b.c_[j];
  }
  if (!p[3].is_zero() || !p[4].is_zero()) {
    const JetFunction r = base->value();
    p[0] += r * p[3];
    p[1] += r * p[4];
  }
  return ExtendedJetFunction({p[0], p[1], p[2]}, base);
}

ExtendedJetFunction operator/(const ExtendedJetFunction& a, const JetFunction& b) {
  const JetFunction inv = b.inverse();
  return ExtendedJetFunction({a.c_[0] * inv, a.c_[1] * inv, a.c_[2] * inv}, a.base_);
}

ExtendedJetFunction ExtendedJetFunction::partial(std::size_t v) const {
  std::array<JetFunction, 3> r{c_[0].partial(v), c_[1].partial(v), c_[2].partial(v)};
  if (!is_rational()) {
    JetFunction g;
    for (const auto& [f, m] : base_->factors) {
      auto df = f.partial(v);
      if (!df.is_zero()) g += JetFunction(ratio(m, 3)) * df / f;
    }
    for (int j = 1; j < 3; ++j)
      if (!c_[j].is_zero()) r[j] += JetFunction(j) * c_[j] * g;
  }
  return ExtendedJetFunction(r, base_);
}

ExtendedJetFunction ExtendedJetFunction::total_derivative(const Equation& eq) const {
  ExtendedJetFunction result = diffpoly::total_derivative(c_[0], eq);
  if (is_rational()) return result;
  ExtendedJetFunction g;
  for (const auto& [f, m] : base_->factors) {
    auto df = diffpoly::total_derivative(f, eq);
    if (!df.is_zero()) g = g + df / (JetFunction(ratio(3, m)) * f);
  }
  const auto u = generator(base_);
  ExtendedJetFunction power = u;
  for (int j = 1; j < 3; ++j) {
    if (!c_[j].is_zero())
      result = result + (diffpoly::total_derivative(c_[j], eq) + ExtendedJetFunction(JetFunction(j) * c_[j]) * g) * power;
    power = power * u;
  }
  return result;
}

ExtendedJetFunction ExtendedJetFunction::reduced() const {
  return ExtendedJetFunction({c_[0].reduced(), c_[1].reduced(), c_[2].reduced()}, base_);
}

Rational ExtendedJetFunction::evaluate(const JetPoint& point) const {
  Rational v0 = c_[0].evaluate(point);
  if (is_rational()) return v0;
  const Rational v1 = c_[1].evaluate(point), v2 = c_[2].evaluate(point);
  if (v1 == 0 && v2 == 0) return v0;
  Rational r = base_->constant;
  for (const auto& [f, m] : base_->factors) r *= cuspg2::pow(f.evaluate(point), m);
  const auto u = rational_cbrt(r);
  if (!u) throw DomainError("cube-root base is not a rational cube at the point");
  return v0 + v1 * *u + v2 * *u * *u;
}

std::string ExtendedJetFunction::to_string() const {
  if (is_rational()) return c_[0].to_string();
  std::ostringstream os;
  os << '(' << c_[0].to_string() << ") + (" << c_[1].to_string() << ")*u + (" << c_[2].to_string()
     << ")*u^2; u^3 = " << base_->value().to_string();
  return os.str();
}

ExtendedJetFunction total_derivative(const JetFunction& f, const Equation& eq) {
  if (eq.order == 0) return ExtendedJetFunction(f.total_derivative());
  const int n = eq.order;
  if (n < 1 || n > kMaxJetOrder) throw DomainError("equation order out of range");
  if (!eq.rhs) throw DomainError("equation needs a right-hand side");
  for (int k = n; k <= kMaxJetOrder; ++k)
    if (f.depends_on(jet(k))) throw DomainError("expression involves y" + std::to_string(k) + " on an order-" +
                                                std::to_string(n) + " equation");
  const auto truncated = [n](const JetPolynomial& p) {
    JetPolynomial r = p.derivative(kX);
    for (int k = 0; k + 1 < n; ++k)
      if (p.depends_on(jet(k))) r += p.derivative(jet(k)).shifted(jet(k + 1));
    return r;
  };
  ExtendedJetFunction r(f.derive(truncated));
  const JetFunction top = f.partial(jet(n - 1));
  if (!top.is_zero()) r = r + ExtendedJetFunction(top) * *eq.rhs;
  return r;
}

// ---------------------------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  JetFunction parse() {
    JetFunction r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  JetFunction expr() {
    JetFunction r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  JetFunction term() {
    JetFunction r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        JetFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }
  JetFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  JetFunction power() {
    JetFunction base = atom();
    if (!eat('^')) return base;
    skip();
    bool negative = false;
    if (eat('-')) negative = true;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    const int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) throw ParseError("zero to a negative power", start);
    return base.pow(negative ? -k : k);
  }
  JetFunction atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      JetFunction r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return JetFunction(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      const auto v = variable_index(name);
      if (!v) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return JetFunction::variable(*v);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

JetFunction parse_jet_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace cuspg2::diffpoly
