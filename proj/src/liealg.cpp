#include "cuspg2/liealg.hpp"

#include <sstream>

#include "cuspg2/errors.hpp"
#include "cuspg2/linalg.hpp"

namespace cuspg2::liealg {

Matrix3 Matrix3::identity() { return diagonal(1, 1, 1); }

Matrix3 Matrix3::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix3 m;
  m.m_[0][0] = a;
  m.m_[1][1] = b;
  m.m_[2][2] = c;
  return m;
}

Scalar Matrix3::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

Matrix3 Matrix3::conjugate_transpose() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i].conj();
  return r;
}

bool Matrix3::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = a.m_[i][j] + b.m_[i][j];
  return r;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = a.m_[i][j] - b.m_[i][j];
  return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!a.m_[i][k].is_zero() && !b.m_[k][j].is_zero()) r.m_[i][j] += a.m_[i][k] * b.m_[k][j];
  return r;
}

Matrix3 operator*(const Scalar& c, const Matrix3& a) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = c * a.m_[i][j];
  return r;
}

std::string Matrix3::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << m_[i][j].to_string();
  }
  os << ']';
  return os.str();
}

Matrix3 Matrix3::parse(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\n");
  std::size_t end = text.find_last_not_of(" \t\n");
  if (begin == std::string_view::npos || text[begin] != '[' || text[end] != ']')
    throw ParseError("matrix must be enclosed in []", begin == std::string_view::npos ? 0 : begin);
  Matrix3 m;
  std::size_t pos = begin + 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const char sep = j < 2 ? ',' : (i < 2 ? ';' : ']');
      const std::size_t stop = text.find(sep, pos);
      if (stop == std::string_view::npos || stop > end)
        throw ParseError(std::string("expected '") + sep + "'", pos);
      try {
        m.m_[i][j] = Scalar::parse(text.substr(pos, stop - pos));
      } catch (const ParseError& e) {
        throw ParseError("bad matrix entry", pos + e.position());
      }
      pos = stop + 1;
    }
  }
  if (pos != end + 1) throw ParseError("trailing characters after matrix", pos);
  return m;
}

Matrix3 commutator(const Matrix3& x, const Matrix3& y) { return x * y - y * x; }

FrameBasis su21_frame() {
  const Scalar i = Scalar::i();
  const Scalar r10_2 = Scalar::sqrt10() * Rational(1, 2);
  const Scalar r2 = Scalar::sqrt2();
  const Scalar inv_r2 = Scalar::sqrt2() * Rational(1, 2);
  const Scalar r10_7 = Scalar::sqrt10() * Rational(1, 7);
  FrameBasis e;
  e[0] = inv_r2 * Matrix3({{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}});
  e[1] = r2 * Matrix3({{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}});
  e[2] = r10_2 * Matrix3({{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}});
  e[3] = r10_7 * Matrix3::diagonal(Scalar(-3) * i, Scalar(2) * i, i);
  e[4] = inv_r2 * Matrix3({{{0, 0, 0}, {0, 0, i}, {0, -i, 0}}});
  e[5] = r2 * Matrix3({{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}}});
  e[6] = r10_2 * Matrix3({{{0, i, 0}, {i, 0, 0}, {0, 0, 0}}});
  e[7] = Matrix3::diagonal(i, Scalar(4) * i, Scalar(-5) * i);
  return e;
}

namespace {

// Coordinates of a matrix as a column: the nine entries.
std::array<Scalar, 9> flatten(const Matrix3& m) {
  std::array<Scalar, 9> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] = m(i, j);
  return r;
}

}  // namespace

exterior::StructureConstants extract_structure_constants(const FrameBasis& basis) {
  linalg::Matrix<Scalar> a(9, std::vector<Scalar>(8));
  for (int l = 0; l < 8; ++l) {
    const auto col = flatten(basis[l]);
    for (int r = 0; r < 9; ++r) a[r][l] = col[r];
  }
  if (linalg::rank(a) != 8) throw DomainError("frame basis is linearly dependent");
  exterior::StructureConstants sc;
  for (int j = 0; j < 8; ++j) {
    for (int k = j + 1; k < 8; ++k) {
      const auto rhs = flatten(commutator(basis[j], basis[k]));
      const auto x = linalg::solve(a, std::vector<Scalar>(rhs.begin(), rhs.end()));
      if (!x) {
        throw DomainError("commutator [e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) +
                          "] leaves the span of the basis");
      }
      for (int l = 0; l < 8; ++l) sc.set(j + 1, k + 1, l + 1, (*x)[l]);
    }
  }
  return sc;
}

SigmaMatrix sigma_in_theta(const FrameBasis& basis) {
  SigmaMatrix s;
  for (auto& row : s)
    for (auto& x : row) x = exterior::ExteriorForm(1);
  for (int k = 0; k < 8; ++k)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (!basis[k](a, b).is_zero()) s[a][b] += exterior::ExteriorForm::theta(k + 1, basis[k](a, b));
  return s;
}

Matrix3 hermitian_form(const FrameBasis& basis) {
  // Unknowns: the nine entries of η; equations X†η + ηX = 0 (K-linear in η) and η† = η.
  linalg::Matrix<Scalar> rows;
  for (const auto& x : basis) {
    const Matrix3 xd = x.conjugate_transpose();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        std::vector<Scalar> row(9);
        // (X†η)_{rc} = Σ_k X†_{rk} η_{kc};  (ηX)_{rc} = Σ_k η_{rk} X_{kc}.
        for (int k = 0; k < 3; ++k) {
          row[3 * k + c] += xd(r, k);
          row[3 * r + k] += x(k, c);
        }
        rows.push_back(std::move(row));
      }
  }
  const auto kernel = linalg::nullspace(rows, 9);
  if (kernel.size() != 1) throw DomainError("basis does not determine a unique invariant Hermitian form");
  Matrix3 eta;
  Scalar lead;
  for (int k = 0; k < 9; ++k) {
    if (lead.is_zero() && !kernel[0][k].is_zero()) lead = kernel[0][k];
    eta(k / 3, k % 3) = kernel[0][k];
  }
  eta = lead.inverse() * eta;
  if (!(eta.conjugate_transpose() == eta)) throw DomainError("invariant form is not Hermitian");
  return eta;
}

bool is_traceless(const Matrix3& x) { return x.trace().is_zero(); }

bool preserves_form(const Matrix3& x, const Matrix3& eta) {
  return (x.conjugate_transpose() * eta + eta * x).is_zero();
}

}  // namespace cuspg2::liealg
