#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "cuspg2/errors.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2 {

/// Sparse multivariate polynomial over the rationals in NV variables.
///
/// Terms are kept sorted by exponent vector in strictly decreasing lexicographic order with
/// no zero coefficients, so equality is structural.
template <std::size_t NV>
class Polynomial {
 public:
  using Exponents = std::array<std::uint8_t, NV>;
  struct Term {
    Exponents e;
    Rational c;
  };

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: constants embed implicitly
    if (c != 0) terms_.push_back({Exponents{}, c});
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

  static Polynomial variable(std::size_t v, unsigned power = 1) {
    Polynomial p;
    Exponents e{};
    e[v] = static_cast<std::uint8_t>(power);
    p.terms_.push_back({e, Rational(1)});
    return p;
  }
  static Polynomial monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_one(terms_[0].e)); }
  Rational constant_term() const {
    return !terms_.empty() && is_one(terms_.back().e) ? terms_.back().c : Rational(0);
  }
  const Term& leading() const { return terms_.front(); }

  bool depends_on(std::size_t v) const {
    for (const auto& t : terms_)
      if (t.e[v]) return true;
    return false;
  }
  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.e[v]);
    return d;
  }
  unsigned min_degree_in(std::size_t v) const {
    unsigned d = 255;
    for (const auto& t : terms_) d = std::min<unsigned>(d, t.e[v]);
    return terms_.empty() ? 0 : d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }
  /// Total order used for canonical factor lists.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.terms_[i].e != b.terms_[i].e) return greater(a.terms_[i].e, b.terms_[i].e);
      if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c;
    }
    return a.terms_.size() < b.terms_.size();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& b) { return *this = merge(*this, b, false); }
  Polynomial& operator-=(const Polynomial& b) { return *this = merge(*this, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() > b.terms_.size()) return b * a;
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    return heap_product(a, b);
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result(1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  Polynomial derivative(std::size_t v) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!t.e[v]) continue;
      Term nt{t.e, t.c * static_cast<unsigned long>(t.e[v])};
      --nt.e[v];
      r.terms_.push_back(std::move(nt));
    }
    return r;
  }

  /// Multiplies by v^k (order-preserving shift).
  Polynomial shifted(std::size_t v, unsigned k = 1) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      if (t.e[v] + k > 255) throw DomainError("polynomial exponent overflow");
      t.e[v] = static_cast<std::uint8_t>(t.e[v] + k);
    }
    return r;
  }

  /// Divides every term by v^k; the caller guarantees divisibility.
  Polynomial unshifted(std::size_t v, unsigned k) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.e[v] = static_cast<std::uint8_t>(t.e[v] - k);
    return r;
  }

  /// Coefficient of v^k, as a polynomial free of v.
  Polynomial coefficient_of(std::size_t v, unsigned k) const {
    Polynomial r;
    for (const auto& t : terms_)
      if (t.e[v] == k) {
        Term nt = t;
        nt.e[v] = 0;
        r.terms_.push_back(std::move(nt));
      }
    return r;
  }

  Rational evaluate(const std::array<Rational, NV>& point) const {
    Rational s = 0;
    for (const auto& t : terms_) {
      Rational m = t.c;
      for (std::size_t v = 0; v < NV; ++v)
        if (t.e[v]) m *= cuspg2::pow(point[v], t.e[v]);
      s += m;
    }
    return s;
  }

  /// Positive rational c and primitive integer polynomial P with *this = c·P (leading coefficient
  /// of P positive up to the returned sign folded into c).
  std::pair<Rational, Polynomial> primitive_part() const {
    if (terms_.empty()) return {Rational(0), Polynomial()};
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational content(g, l);
    content.canonicalize();
    if (terms_.front().c < 0) content = -content;
    Polynomial p = *this;
    const Rational inv = 1 / content;
    for (auto& t : p.terms_) t.c *= inv;
    return {content, p};
  }

  /// Exponents of the largest monomial dividing every term.
  Exponents monomial_gcd() const {
    Exponents g{};
    if (terms_.empty()) return g;
    g = terms_[0].e;
    for (const auto& t : terms_)
      for (std::size_t v = 0; v < NV; ++v) g[v] = std::min(g[v], t.e[v]);
    return g;
  }

  Polynomial divided_by_monomial(const Exponents& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_)
      for (std::size_t v = 0; v < NV; ++v) t.e[v] = static_cast<std::uint8_t>(t.e[v] - m[v]);
    return r;
  }

  /// Exact quotient *this / d, or nothing when d does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (d.terms_.size() == 1) {
      const auto& lt = d.terms_[0];
      for (const auto& t : terms_)
        if (!divides(lt.e, t.e)) return std::nullopt;
      Polynomial q = divided_by_monomial(lt.e);
      return q.scaled(1 / lt.c);
    }
    Polynomial r = *this;
    std::vector<Term> q;
    const auto& lt = d.terms_.front();
    while (!r.is_zero()) {
      const auto& rt = r.terms_.front();
      if (!divides(lt.e, rt.e)) return std::nullopt;
      Term qt{rt.e, rt.c / lt.c};
      for (std::size_t v = 0; v < NV; ++v) qt.e[v] = static_cast<std::uint8_t>(qt.e[v] - lt.e[v]);
      r -= d.times_term(qt);
      q.push_back(std::move(qt));
    }
    Polynomial result;
    result.terms_ = std::move(q);
    return result;
  }

  /// Substitutes polynomial images for variables (identity where `images` has no entry).
  template <class T, class Lookup>
  T evaluate_with(Lookup&& image) const {
    // image(v) returns const T&; powers are cached per variable.
    std::map<std::pair<std::size_t, unsigned>, T> cache;
    auto power = [&](std::size_t v, unsigned k) -> const T& {
      auto it = cache.find({v, k});
      if (it != cache.end()) return it->second;
      unsigned j = 1;
      T value = T(image(v));
      for (auto lower = cache.lower_bound({v, 1}); lower != cache.end() && lower->first.first == v &&
                                                   lower->first.second < k;
           ++lower) {
        j = lower->first.second;
        value = lower->second;
      }
      for (; j < k; ++j) value = T(value * image(v));
      return cache.emplace(std::pair{v, k}, std::move(value)).first->second;
    };
    T total{};
    for (const auto& t : terms_) {
      T m = T(t.c);
      for (std::size_t v = 0; v < NV; ++v)
        if (t.e[v]) m = T(m * power(v, t.e[v]));
      total = T(total + m);
    }
    return total;
  }

  std::string to_string(const std::function<std::string(std::size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.c;
      if (first) {
        if (c < 0) {
          os << '-';
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      const bool unit = is_one(t.e);
      if (c != 1 || unit) {
        os << c.get_str();
        if (!unit) os << '*';
      }
      bool first_factor = true;
      for (std::size_t v = 0; v < NV; ++v) {
        if (!t.e[v]) continue;
        if (!first_factor) os << '*';
        first_factor = false;
        os << name(v);
        if (t.e[v] > 1) os << '^' << static_cast<int>(t.e[v]);
      }
    }
    return os.str();
  }

 private:
  static bool is_one(const Exponents& e) {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  static bool greater(const Exponents& a, const Exponents& b) {
    return std::memcmp(a.data(), b.data(), NV) > 0;
  }
  static bool divides(const Exponents& d, const Exponents& e) {
    for (std::size_t v = 0; v < NV; ++v)
      if (d[v] > e[v]) return false;
    return true;
  }
  static Exponents add(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t v = 0; v < NV; ++v) {
      const unsigned s = unsigned(a[v]) + b[v];
      if (s > 255) throw DomainError("polynomial exponent overflow");
      r[v] = static_cast<std::uint8_t>(s);
    }
    return r;
  }

  Polynomial times_term(const Term& m) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({add(t.e, m.e), t.c * m.c});
    return r;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) {
        cmp = -1;
      } else if (j == b.terms_.size()) {
        cmp = 1;
      } else {
        cmp = std::memcmp(a.terms_[i].e.data(), b.terms_[j].e.data(), NV);
      }
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(subtract ? Term{b.terms_[j].e, -b.terms_[j].c} : b.terms_[j]);
        ++j;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].c - b.terms_[j].c) : Rational(a.terms_[i].c + b.terms_[j].c);
        if (c != 0) r.terms_.push_back({a.terms_[i].e, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Johnson's heap multiplication: one cursor per term of the shorter factor.
  static Polynomial heap_product(const Polynomial& a, const Polynomial& b) {
    struct Cursor {
      Exponents e;
      std::size_t i, j;
    };
    auto cmp = [](const Cursor& x, const Cursor& y) { return std::memcmp(x.e.data(), y.e.data(), NV) < 0; };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < a.terms_.size(); ++i) heap.push({add(a.terms_[i].e, b.terms_[0].e), i, 0});
    Polynomial r;
    Rational acc, prod;
    bool open = false;
    Exponents current{};
    while (!heap.empty()) {
      Cursor c = heap.top();
      heap.pop();
      if (!open || c.e != current) {
        if (open && acc != 0) r.terms_.push_back({current, acc});
        current = c.e;
        acc = 0;
        open = true;
      }
      mpq_mul(prod.get_mpq_t(), a.terms_[c.i].c.get_mpq_t(), b.terms_[c.j].c.get_mpq_t());
      acc += prod;
      if (c.j + 1 < b.terms_.size()) heap.push({add(a.terms_[c.i].e, b.terms_[c.j + 1].e), c.i, c.j + 1});
    }
    if (open && acc != 0) r.terms_.push_back({current, acc});
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace cuspg2
