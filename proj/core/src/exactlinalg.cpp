#include "knotinv/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotinv {

// ---------------------------------------------------------------------------
// UnimodularTransform

UnimodularTransform::UnimodularTransform(IntegerMatrix t) : t_(std::move(t)) {
  if (!t_.square()) throw std::invalid_argument("unimodular transform must be square");
  Integer d = det_exact(t_);
  if (d != 1 && d != -1) throw std::invalid_argument("transform has determinant " + d.get_str());
}

UnimodularTransform UnimodularTransform::identity(std::size_t n) {
  return UnimodularTransform(IntegerMatrix::identity(n), Trusted{});
}

IntegerSymmetricMatrix UnimodularTransform::congruence(const IntegerSymmetricMatrix& m) const {
  return IntegerSymmetricMatrix(t_ * m.matrix() * t_.transpose());
}

RationalSymmetricMatrix UnimodularTransform::congruence(const RationalSymmetricMatrix& m) const {
  RationalMatrix t = to_rational(t_);
  return RationalSymmetricMatrix(t * m.matrix() * t.transpose());
}

UnimodularTransform UnimodularTransform::inverse() const {
  RationalMatrix inv = inverse_rational(t_);
  IntegerMatrix out(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (inv(i, j).get_den() != 1) throw std::logic_error("unimodular inverse is not integral");
      out(i, j) = inv(i, j).get_num();
    }
  return UnimodularTransform(std::move(out), Trusted{});
}

UnimodularTransform UnimodularTransform::transpose() const { return UnimodularTransform(t_.transpose(), Trusted{}); }

UnimodularTransform operator*(const UnimodularTransform& a, const UnimodularTransform& b) {
  return UnimodularTransform(a.t_ * b.t_, UnimodularTransform::Trusted{});
}

// ---------------------------------------------------------------------------
// Determinants, inverses, signature, ranks

Integer det_exact(const IntegerMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_rational(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det of non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RationalMatrix inverse_rational(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    a.swap_rows(k, piv);
    inv.swap_rows(k, piv);
    Rational d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix inverse_rational(const IntegerMatrix& m) { return inverse_rational(to_rational(m)); }

long signature(const IntegerSymmetricMatrix& m) {
  RationalMatrix a = to_rational(m.matrix());
  const std::size_t n = a.rows();
  long sig = 0;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };
  auto sym_add = [&](std::size_t dst, std::size_t src, const Rational& f) {
    a.add_row(dst, src, f);
    a.add_col(dst, src, f);
  };
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t piv = n;
    for (std::size_t k = t; k < n; ++k)
      if (a(k, k) != 0) {
        piv = k;
        break;
      }
    if (piv == n) {
      bool found = false;
      for (std::size_t i = t; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a(i, j) != 0) {
            sym_add(j, i, Rational(1));  // diagonal becomes 2 a_ij
            piv = j;
            found = true;
          }
      if (!found) break;
    }
    sym_swap(t, piv);
    const Rational d = a(t, t);
    sig += sgn(d);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      sym_add(i, t, -a(i, t) / d);
    }
  }
  return sig;
}

std::size_t rank_mod_p(const IntegerMatrix& m, const Integer& p) {
  IntegerMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = mod_floor(m(i, j), p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    Integer inv = inverse_mod(a(rank, c), p);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = mod_floor(-a(i, c) * inv, p);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j) + f * a(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(r);
  IntegerMatrix v = IntegerMatrix::identity(c);
  auto row_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col(dst, src, f);
    v.add_col(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) goto done;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_add(t, i, Integer(1));
            divides = false;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }
done:
  return SmithForm{std::move(a), std::move(u), std::move(v)};
}

bool CokernelDecomposition::cyclic() const {
  if (!finite()) return false;
  std::size_t nonunit = 0;
  for (const auto& d : invariant_factors)
    if (d != 1) ++nonunit;
  return nonunit <= 1;
}

std::vector<unsigned> CokernelDecomposition::exponents(const Integer& p) const {
  auto it = prime_parts.find(p);
  if (it != prime_parts.end()) return it->second;
  return std::vector<unsigned>(invariant_factors.size() + free_rank, 0u);
}

CokernelDecomposition smith_cokernel(const IntegerMatrix& m) {
  if (!m.square()) throw std::invalid_argument("smith_cokernel expects a square matrix");
  SmithForm snf = smith_normal_form(m);
  CokernelDecomposition out;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.diagonal(i, i) == 0)
      ++out.free_rank;
    else
      out.invariant_factors.push_back(snf.diagonal(i, i));
  }
  Integer order = 1;
  for (const auto& d : out.invariant_factors) order *= d;
  out.order_or_zero = out.free_rank == 0 ? order : Integer(0);
  if (order != 0) {
    for (const auto& p : prime_divisors(order)) {
      std::vector<unsigned> ks(out.free_rank, 0u);
      for (const auto& d : out.invariant_factors) ks.push_back(split_prime_power(d, p).first);
      std::sort(ks.begin(), ks.end());
      out.prime_parts.emplace(p, std::move(ks));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mod-p block reduction

namespace {

/// Symmetric working copy W = T M T^T with the transform tracked alongside.
template <class T>
struct Congruence {
  Matrix<T> w;
  IntegerMatrix t;

  void swap(std::size_t i, std::size_t j) {
    w.swap_rows(i, j);
    w.swap_cols(i, j);
    t.swap_rows(i, j);
  }
  // Basis vector dst += c * basis vector src.
  void shear(std::size_t dst, std::size_t src, const Integer& c) {
    const T f(c);
    w.add_row(dst, src, f);
    w.add_col(dst, src, f);
    t.add_row(dst, src, c);
  }
};

Integer centered_mod(const Integer& a, const Integer& p) {
  Integer r = mod_floor(a, p);
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace

ModPReduction mod_p_block_reduce(const IntegerSymmetricMatrix& m, const Integer& p, std::mt19937_64* rng) {
  require_odd_prime(p);
  const std::size_t n = m.size();
  Congruence<Integer> c{m.matrix(), IntegerMatrix::identity(n)};
  auto unit = [&](std::size_t i, std::size_t j) { return !mpz_divisible_p(c.w(i, j).get_mpz_t(), p.get_mpz_t()); };
  auto pick = [&](std::size_t count) -> std::size_t {
    if (!rng || count <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng);
  };

  std::size_t r = 0;
  for (; r < n; ++r) {
    std::vector<std::size_t> diag;
    for (std::size_t k = r; k < n; ++k)
      if (unit(k, k)) diag.push_back(k);
    std::size_t piv;
    if (!diag.empty()) {
      piv = diag[pick(diag.size())];
    } else {
      std::vector<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (unit(i, j)) off.emplace_back(i, j);
      if (off.empty()) break;
      auto [i, j] = off[pick(off.size())];
      // Diagonal entries vanish mod p, so the new (j, j) entry is 2 w_ij, a unit as p is odd.
      c.shear(j, i, Integer(1));
      piv = j;
    }
    c.swap(r, piv);
    const Integer inv = inverse_mod(c.w(r, r), p);
    for (std::size_t j = r + 1; j < n; ++j) {
      if (!unit(j, r)) continue;
      c.shear(j, r, centered_mod(-c.w(j, r) * inv, p));
    }
  }

  IntegerSymmetricMatrix reduced(c.w);
  IntegerSymmetricMatrix block(c.w.leading_block(r));
  return ModPReduction{UnimodularTransform(std::move(c.t)), std::move(block), std::move(reduced), n - r};
}

// ---------------------------------------------------------------------------
// p-adic normal forms

namespace {

bool rational_normal_form_holds(const RationalMatrix& w, const Integer& p, long rho) {
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const PAdicValuation di = ord_p(w(i, i), p);
    if (di.is_infinite()) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i && di > ord_p(w(j, j), p)) return false;
      if (j != i) {
        const PAdicValuation oij = ord_p(w(i, j), p);
        if (!(di < oij) || oij < rho) return false;
      }
    }
  }
  return true;
}

}  // namespace

RationalNormalization rational_normalize(const RationalSymmetricMatrix& nmat, const Integer& p, long rho) {
  require_odd_prime(p);
  const std::size_t n = nmat.size();
  if (det_rational(nmat.matrix()) == 0) throw std::domain_error("rational_normalize: matrix is singular");

  // Off-diagonal entries cleared against a pivot are pushed to ord_p >= precision.
  // Raising the precision until every condition holds terminates because the
  // final diagonal valuations are bounded by ord_p(det N).
  long precision = rho;
  for (int attempt = 0; attempt < 128; ++attempt) {
    Congruence<Rational> c{nmat.matrix(), IntegerMatrix::identity(n)};
    for (std::size_t m = n; m >= 1; --m) {
      PAdicValuation omega = PAdicValuation::infinity();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) omega = std::min(omega, ord_p(c.w(i, j), p));
      // A truncated clearing step can zero the whole leading block; retry at a
      // higher precision, which changes the shear coefficients.
      if (omega.is_infinite()) break;
      std::size_t piv = m;
      for (std::size_t i = 0; i < m; ++i)
        if (ord_p(c.w(i, i), p) == omega) {
          piv = i;
          break;
        }
      if (piv == m) {
        // Only an off-diagonal entry attains omega: add e_i to e_j.
        for (std::size_t i = 0; i < m && piv == m; ++i)
          for (std::size_t j = i + 1; j < m; ++j)
            if (ord_p(c.w(i, j), p) == omega) {
              c.shear(j, i, Integer(1));
              piv = j;
              break;
            }
      }
      c.swap(piv, m - 1);
      const long w = omega.value();
      const long target = std::max({w + 1, rho, precision});
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(target - w));
      const Rational d = c.w(m - 1, m - 1);
      for (std::size_t j = 0; j + 1 < m; ++j) {
        if (ord_p(c.w(j, m - 1), p) >= target) continue;
        const Rational x = c.w(j, m - 1) / d;  // p-integral
        Integer coef = mod_floor(-x.get_num() * inverse_mod(x.get_den(), pe), pe);
        c.shear(j, m - 1, coef);
      }
    }
    if (rational_normal_form_holds(c.w, p, rho)) {
      return RationalNormalization{UnimodularTransform(std::move(c.t)), RationalSymmetricMatrix(std::move(c.w))};
    }
    long max_diag = precision;
    for (std::size_t i = 0; i < n; ++i)
      if (const auto v = ord_p(c.w(i, i), p); !v.is_infinite()) max_diag = std::max(max_diag, v.value());
    precision = std::max(precision + 1, max_diag + 1);
  }
  throw std::logic_error("rational_normalize: did not converge");
}

InverseOrdNormalization inverse_ord_normalize(const IntegerSymmetricMatrix& m, const Integer& p) {
  require_odd_prime(p);
  if (det_exact(m) == 0) throw std::domain_error("inverse_ord_normalize: matrix is singular");
  RationalSymmetricMatrix inv(inverse_rational(m.matrix()));
  RationalNormalization s = rational_normalize(inv, p, 0);
  UnimodularTransform t = s.transform.inverse().transpose();
  InverseOrdNormalization out{t, t.congruence(m), s.normalized, {}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.exponents.push_back(static_cast<unsigned>(-ord_p(out.conjugate_inverse(i, i), p).value()));
  }
  return out;
}

// ---------------------------------------------------------------------------

JacobiSides jacobi_minor_identity(const RationalSymmetricMatrix& m, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  const std::size_t n = m.size();
  if (rows.size() != cols.size()) throw std::invalid_argument("jacobi: |I| != |J|");
  for (auto i : rows)
    if (i >= n) throw std::invalid_argument("jacobi: row index out of range");
  for (auto j : cols)
    if (j >= n) throw std::invalid_argument("jacobi: column index out of range");
  const Rational det = det_rational(m.matrix());
  if (det == 0) throw std::domain_error("jacobi: matrix is singular");

  auto complement = [n](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k)
      if (std::find(s.begin(), s.end(), k) == s.end()) out.push_back(k);
    return out;
  };
  auto sorted = [](std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto rs = sorted(rows), cs = sorted(cols);
  const RationalMatrix inv = inverse_rational(m.matrix());
  Rational lhs = det_rational(m.matrix().submatrix(rs, cs));
  const auto rc = complement(rs), cc = complement(cs);
  std::size_t exponent = 0;
  for (auto i : rs) exponent += i + 1;
  for (auto j : cs) exponent += j + 1;
  Rational rhs = det * det_rational(inv.submatrix(rc, cc));
  if (exponent % 2) rhs = -rhs;
  return JacobiSides{lhs, rhs};
}

}  // namespace knotinv
