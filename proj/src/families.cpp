#include "prodtri/families.hpp"

#include <map>
#include <string>

#include "prodtri/riordan.hpp"

namespace prodtri {

namespace {

void require_terms(const IntSequence& a, std::size_t needed, const char* what) {
  if (a.size() < needed)
    throw Error(ErrorCode::length_mismatch, std::string(what) + " needs " + std::to_string(needed) +
                                                " terms of a, have " + std::to_string(a.size()));
}

void require_nonnegative(long r) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "parameter r must be >= 0, got " + std::to_string(r));
}

}  // namespace

LowerTriMatrix almost_pm_triangle(const IntSequence& a, std::size_t dim) {
  if (dim == 0) return LowerTriMatrix(SquareMatrix(0));
  require_terms(a, dim - 1, "almost_pm_triangle");
  // Coefficients of 1 - x f(x).
  IntSequence b;
  b.terms.push_back(1);
  for (std::size_t i = 0; i + 1 < dim; ++i) b.terms.push_back(-a[i]);
  const auto appell = sequence_array(b, dim);
  return lt_inverse(LowerTriMatrix(mat_add(appell, v_matrix(dim))));
}

SquareMatrix predicted_delta(const IntSequence& a, std::size_t dim) {
  require_terms(a, dim, "predicted_delta");
  SquareMatrix d = shift_matrix(dim);
  if (dim == 0) return d;
  d(0, 0) = a[0] - 1;
  for (std::size_t i = 1; i < dim; ++i) d(i, 0) = a[i];
  return d;
}

DeltaReport verify_almost(const IntSequence& a, std::size_t dim) {
  if (dim < 3) throw Error(ErrorCode::invalid_argument, "verify_almost needs dim >= 3");
  const auto m = almost_pm_triangle(a, dim);
  const auto p = production_matrix(m);
  const auto block = dim - 1;
  DeltaReport report;
  report.observed_delta = mat_sub(p, m.square().leading_block(block));
  report.expected_delta = predicted_delta(a, block);
  for (std::size_t i = 0; i < block && !report.first_mismatch; ++i)
    for (std::size_t j = 0; j < block; ++j)
      if (report.observed_delta(i, j) != report.expected_delta(i, j)) {
        report.first_mismatch = std::make_pair(i, j);
        break;
      }
  report.holds = !report.first_mismatch.has_value();
  return report;
}

LowerTriMatrix self_build_triangle(const IntSequence& a, std::size_t dim) {
  SquareMatrix t(dim);
  if (dim == 0) return LowerTriMatrix(std::move(t));
  require_terms(a, dim - 1, "self_build_triangle");
  t(0, 0) = 1;
  for (std::size_t n = 1; n < dim; ++n) {
    // Column 0 uses the production column a_j + m_j - [j = 0].
    BigInt acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt weight = a[j] + t(j, 0);
      if (j == 0) weight -= 1;
      acc += weight * t(n - 1, j);
    }
    t(n, 0) = acc;
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt v = t(n - 1, k - 1);
      for (std::size_t j = 0; k + j + 1 <= n; ++j) v += t(k + j, k) * t(n - 1, k + j);
      t(n, k) = v;
    }
  }
  return LowerTriMatrix(std::move(t));
}

IntSequence hanna_a_sequence(long r, std::size_t terms) {
  require_nonnegative(r);
  if (terms == 0) return {};
  const auto depth = terms - 1;
  IntSequence x, y;
  for (std::size_t k = 0; 2 * k < depth; ++k) x.terms.emplace_back(r + static_cast<long>(k));
  for (std::size_t k = 0; 2 * k + 1 < depth; ++k) y.terms.emplace_back(2 + static_cast<long>(k));
  return series_to_sequence(stieltjes_to_series(interleave(x, y), terms));
}

LowerTriMatrix hanna_triangle(long r, std::size_t dim) {
  return almost_pm_triangle(hanna_a_sequence(r, dim), dim);
}

IntSequence hanna_first_column(long r, std::size_t terms) {
  require_nonnegative(r);
  IntSequence m;
  for (std::size_t n = 0; n < terms; ++n) {
    if (n == 0) {
      m.terms.push_back(1);
      continue;
    }
    BigInt conv = 0;
    for (std::size_t i = 0; i < n; ++i) conv += m[i] * m[n - 1 - i];
    m.terms.push_back((static_cast<long>(n) - r) * m[n - 1] + r * conv);
  }
  if (terms > 1 && m[1] != 1) throw Error(ErrorCode::invalid_argument, "convolution recurrence lost m_1 = 1");
  return m;
}

BigInt appell_m_closed_form(const BigInt& r, std::size_t n) {
  BigInt acc = 0;
  const long top = static_cast<long>(n) - 1;
  for (std::size_t k = 0; k <= n; ++k)
    acc += binomial(top, static_cast<long>(k)) * factorial(static_cast<unsigned>(n - k)) *
           boost::multiprecision::pow(r, static_cast<unsigned>(k));
  return acc;
}

IntSequence martin_kearney(long alpha, long beta, long gamma, std::size_t terms) {
  if (terms == 0) throw Error(ErrorCode::invalid_argument, "martin_kearney needs at least one term");
  // u[i] holds u_{i+1}.
  IntSequence u;
  u.offset = 1;
  u.terms.push_back(1);
  for (std::size_t n = 2; n <= terms; ++n) {
    BigInt conv = 0;
    for (std::size_t j = 1; j < n; ++j) conv += u[j - 1] * u[n - j - 1];
    u.terms.push_back((alpha * static_cast<long>(n) + beta) * u[n - 2] + gamma * conv);
  }
  return u;
}

StieltjesCF mk_posited_cf(long alpha, long beta, long gamma, std::size_t depth) {
  StieltjesCF cf;
  for (std::size_t i = 0; i < depth; ++i) {
    const long k = static_cast<long>(i / 2);
    cf.c.emplace_back(i % 2 == 0 ? (k + 2) * alpha + beta + gamma : (k + 1) * alpha + gamma);
  }
  return cf;
}

JacobiCF mk_printed_jacobi(long alpha, long beta, long gamma, std::size_t depth) {
  JacobiCF cf;
  for (std::size_t i = 0; i < depth; ++i) {
    const long n = static_cast<long>(i);
    cf.a.emplace_back(n == 0 ? 2 * alpha + beta + gamma : (2 * n + 2) * alpha + beta + 2 * gamma);
    if (i + 1 < depth) {
      const long m = n + 1;  // b_m
      cf.b.emplace_back(m == 1 ? (alpha + gamma) * (2 * alpha + beta + gamma)
                               : (m * alpha + beta) * ((m + 1) * alpha + beta + gamma));
    }
  }
  return cf;
}

std::vector<IntPolynomial> hanna_m_polynomials(std::size_t count) {
  const IntPolynomial r{0, 1};
  std::vector<IntPolynomial> m;
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0) {
      m.push_back(IntPolynomial{1});
      continue;
    }
    IntPolynomial conv;
    for (std::size_t i = 0; i < n; ++i) conv += m[i] * m[n - 1 - i];
    const IntPolynomial n_minus_r{static_cast<long long>(n), -1};
    m.push_back(n_minus_r * m[n - 1] + r * conv);
  }
  if (count > 1 && m[1] != IntPolynomial{1})
    throw Error(ErrorCode::invalid_argument, "convolution recurrence lost m_1 = 1");
  return m;
}

std::vector<IntPolynomial> appell_m_polynomials(std::size_t count) {
  std::vector<IntPolynomial> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<BigInt> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      c[k] = binomial(static_cast<long>(n) - 1, static_cast<long>(k)) * factorial(static_cast<unsigned>(n - k));
    out.emplace_back(std::move(c));
  }
  return out;
}

LowerTriMatrix coefficient_array(const std::vector<IntPolynomial>& polys) {
  const auto dim = polys.size();
  SquareMatrix m(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    if (!polys[n].is_zero() && polys[n].degree() > n)
      throw Error(ErrorCode::not_triangular, "polynomial " + std::to_string(n) + " has degree " +
                                                 std::to_string(polys[n].degree()),
                  n);
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = polys[n].coeff(k);
  }
  return LowerTriMatrix(std::move(m));
}

namespace {

class PrintedHanna {
 public:
  explicit PrintedHanna(long r) : r_(r) {}

  BigInt at(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == k) return 1;
    if (n == k + 1) return n;
    const auto key = std::make_pair(n, k);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (!it->second)
        throw Error(ErrorCode::invalid_argument,
                    "printed recurrence refers to H(" + std::to_string(n) + "," + std::to_string(k) + ") circularly");
      return *it->second;
    }
    memo_[key] = std::nullopt;
    BigInt v = k * at(n, k + 1);
    for (long j = 0; j <= n - k - 1; ++j) v += at(j + r_, r_) * at(n, j + k + 1);
    memo_[key] = v;
    return v;
  }

 private:
  long r_;
  std::map<std::pair<long, long>, std::optional<BigInt>> memo_;
};

}  // namespace

LowerTriMatrix hanna_printed_recurrence(long r, std::size_t dim) {
  require_nonnegative(r);
  PrintedHanna h(r);
  SquareMatrix m(dim);
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = h.at(static_cast<long>(n), static_cast<long>(k));
  return LowerTriMatrix(std::move(m));
}

}  // namespace prodtri
