#include "prodtri/claims.hpp"

#include <functional>
#include <sstream>

#include "prodtri/contfrac.hpp"
#include "prodtri/families.hpp"
#include "prodtri/io.hpp"
#include "prodtri/reference_data.hpp"
#include "prodtri/riordan.hpp"
#include "prodtri/sampling.hpp"

namespace prodtri {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::deviation: return "deviation";
  }
  return "?";
}

std::size_t ClaimsReport::count(ClaimStatus s) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

const ClaimResult* ClaimsReport::find(std::string_view id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

struct Outcome {
  ClaimStatus status;
  std::string detail;
};

Outcome verdict(bool ok, std::string detail = {}) {
  return {ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(detail)};
}

Outcome printed_vs_corrected(bool printed, bool corrected, std::string detail) {
  if (printed) return {ClaimStatus::pass, "printed form holds; " + detail};
  return {corrected ? ClaimStatus::deviation : ClaimStatus::fail, std::move(detail)};
}

IntSequence column0(const LowerTriMatrix& m) { return IntSequence{m.column(0), 0}; }
IntSequence flattened(const LowerTriMatrix& m) { return IntSequence{m.flatten(), 0}; }

IntSequence powers(long r, std::size_t n) {
  IntSequence s;
  BigInt p = 1;
  for (std::size_t i = 0; i < n; ++i, p *= r) s.terms.push_back(p);
  return s;
}

IntSequence prefix(const IntSequence& s, std::size_t n) {
  return IntSequence{{s.terms.begin(), s.terms.begin() + static_cast<long>(std::min(n, s.size()))}, s.offset};
}

IntSequence expand(const CFSpec& cf, std::size_t terms) { return series_to_sequence(cf_to_series(cf, terms)); }

// a0 + n*da for n < na, and b_n = n(n+1) for 1 <= n < na.
JacobiCF arithmetic_jacobi(long a0, long da, std::size_t na) {
  JacobiCF j;
  for (std::size_t n = 0; n < na; ++n) j.a.emplace_back(a0 + da * static_cast<long>(n));
  for (std::size_t n = 1; n < na; ++n) j.b.emplace_back(static_cast<long>(n * (n + 1)));
  return j;
}

IntSequence hanna_m_cf_printed(long r, std::size_t terms) {
  // S(1,2,3,...; r+1, r+2, r+2, ...) with the last printed entry repeated.
  IntSequence x, y;
  for (std::size_t k = 0; k < terms; ++k) {
    x.terms.emplace_back(static_cast<long>(k) + 1);
    y.terms.emplace_back(r + std::min<long>(static_cast<long>(k) + 1, 2));
  }
  return expand(interleave(x, y), terms);
}

IntSequence hanna_m_cf_corrected(long r, std::size_t terms) {
  IntSequence x, y;
  for (std::size_t k = 0; k < terms; ++k) {
    x.terms.emplace_back(static_cast<long>(k) + 1);
    y.terms.emplace_back(r + static_cast<long>(k) + 1);
  }
  return expand(interleave(x, y), terms);
}

std::string describe(const PrefixReport& rep, std::size_t computed) {
  std::ostringstream os;
  if (rep.is_prefix)
    os << computed << " terms match";
  else if (rep.first_mismatch)
    os << "mismatch at term " << *rep.first_mismatch << " after " << rep.common_prefix << " matching";
  return os.str();
}

// Rows n >= 1, columns 0..n-1 of the closed-form coefficient array.
IntSequence appell_array_without_diagonal(std::size_t rows) {
  const auto arr = coefficient_array(appell_m_polynomials(rows + 1));
  IntSequence s;
  s.offset = 1;
  for (std::size_t n = 1; n <= rows; ++n)
    for (std::size_t k = 0; k < n; ++k) s.terms.push_back(arr(n, k));
  return s;
}

IntSequence deleham_r() {
  IntSequence s;
  s.terms.emplace_back(0);
  for (long k = 0; k < 20; ++k) {
    s.terms.emplace_back(k + 2);
    s.terms.emplace_back(k + 1);
  }
  return s;
}

IntSequence deleham_s() {
  IntSequence s;
  for (int k = 0; k < 40; ++k) s.terms.emplace_back(k % 2 == 0 ? 1 : 0);
  return s;
}

class Corpus {
 public:
  Corpus(const OeisClient& client, std::uint64_t seed) : client_(client), rng_(seed) {}

  void add(std::string id, std::string statement, const std::function<Outcome()>& check) {
    ClaimResult r{std::move(id), std::move(statement), ClaimStatus::fail, {}};
    try {
      auto o = check();
      r.status = o.status;
      r.detail = std::move(o.detail);
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report_.results.push_back(std::move(r));
  }

  Outcome against(const char* id, const IntSequence& computed, std::size_t record_start = 0) {
    const auto rec = client_.fetch_sequence(OeisId(id));
    const auto rep = compare_prefix(computed, rec, record_start);
    return verdict(rep.is_prefix, describe(rep, computed.size()) + " (" + std::string(to_string(rec.source)) + ")");
  }

  Rng& rng() { return rng_; }
  ClaimsReport take() { return std::move(report_); }

 private:
  const OeisClient& client_;
  Rng rng_;
  ClaimsReport report_;
};

void triangle_claims(Corpus& c) {
  const auto a003319 = hanna_a_sequence(1, 12);

  c.add("h1.s-fraction", "S(1,2,2,3,3,...) expands to A003319 from index 1, 10 terms", [&] {
    return c.against("A003319", expand(stieltjes({1, 2, 2, 3, 3, 4, 4, 5, 5}), 10), 1);
  });
  c.add("h1.invert", "A003319 is the INVERT(1) transform of (n+1)!", [] {
    const auto fac = shifted_factorials(10);
    const auto target = prefix(hanna_a_sequence(1, 10), 10);
    const bool printed = invert_transform(fac, 1) == target;
    const bool corrected = invert_transform(fac, -1) == target && invert_transform(target, 1) == fac;
    return printed_vs_corrected(printed, corrected,
                                "holds with y = -1 under A/(1 - y x A); equivalently (n+1)! = INVERT(1) of A003319");
  });
  c.add("h1.pre-inverse", "((1 - x f, x) + V) for f = gf of A003319, 7x7 block", [&] {
    IntSequence b;
    b.terms.emplace_back(1);
    for (std::size_t i = 0; i + 1 < 7; ++i) b.terms.push_back(-a003319[i]);
    const auto pre = mat_add(sequence_array(b, 7), v_matrix(7));
    return verdict(pre == reference::hanna1_pre_inverse());
  });
  c.add("h1.triangle", "M for a = A003319 equals the displayed 7x7 block (A104980)", [&] {
    return verdict(almost_pm_triangle(a003319, 8).leading_block(7) == reference::hanna(1));
  });
  c.add("h1.production", "P_M of the 8x8 M equals the displayed 7x7 P_M", [&] {
    return verdict(production_matrix(almost_pm_triangle(a003319, 8)) == reference::hanna1_production());
  });
  c.add("h1.delta", "P_M - M equals the displayed difference for a = A003319", [&] {
    const auto rep = verify_almost(a003319, 8);
    return verdict(rep.holds && rep.observed_delta == reference::hanna1_delta() &&
                   mat_sub(reference::hanna1_production(), reference::hanna(1)) == reference::hanna1_delta());
  });

  for (long rate : {1L, 2L}) {
    const auto a = powers(rate, 9);
    const std::string tag = "geometric" + std::to_string(rate);
    c.add(tag + ".triangle", "M and P_M for a_n = " + std::to_string(rate) + "^n equal the displayed blocks", [=] {
      const auto m = almost_pm_triangle(a, 8);
      return verdict(m.leading_block(7) == reference::geometric_triangle(rate) &&
                     production_matrix(m) == reference::geometric_production(rate));
    });
    c.add(tag + ".delta", "displayed difference for a_n = " + std::to_string(rate) + "^n", [=] {
      const auto rep = verify_almost(a, 8);
      const bool matches = rep.holds && rep.observed_delta == reference::geometric_delta(rate);
      if (rate == 1) return verdict(matches);
      // This display is labelled P_M - P.
      const auto p = reference::geometric_production(rate);
      const bool printed = mat_sub(p, p) == reference::geometric_delta(rate);
      return printed_vs_corrected(printed, matches, "label read as P_M - M");
    });
  }

  c.add("proposition.random", "P_M - M has the predicted form for 100 random a, N = 12", [&] {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_sequence(c.rng(), 12, -9, 9);
      if (!verify_almost(a, 12).holds) return verdict(false, "trial " + std::to_string(t));
    }
    return verdict(true, "100 trials");
  });
  c.add("lemma.appell", "production matrix of (g, x)^{-1} is -b down column 0 plus U, 100 random g", [&] {
    const std::size_t n = 12;
    for (int t = 0; t < 100; ++t) {
      auto g = random_sequence(c.rng(), n + 1, -9, 9);
      g.terms[0] = 1;
      const auto p = production_matrix(lt_inverse(sequence_array(g, n)));
      SquareMatrix expected = shift_matrix(n - 1);
      for (std::size_t i = 0; i < n - 1; ++i) expected(i, 0) += -g[i + 1];
      if (p != expected) return verdict(false, "trial " + std::to_string(t));
    }
    return verdict(true, "100 trials");
  });
  c.add("lemma.corollary", "production matrix of (1 - x f, x)^{-1} is a down column 0 plus U", [&] {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_sequence(c.rng(), 12, -9, 9);
      IntSequence b;
      b.terms.emplace_back(1);
      for (std::size_t i = 0; i < 11; ++i) b.terms.push_back(-a[i]);
      const auto p = production_matrix(lt_inverse(sequence_array(b, 12)));
      SquareMatrix expected = shift_matrix(11);
      for (std::size_t i = 0; i < 11; ++i) expected(i, 0) += a[i];
      if (p != expected) return verdict(false, "trial " + std::to_string(t));
    }
    return verdict(true, "100 trials");
  });
  c.add("lemma.commutator", "V U - U V = I - W on the leading block, N = 2..50", [] {
    for (std::size_t n = 2; n <= 50; ++n) {
      const auto v = v_matrix(n), u = shift_matrix(n);
      const auto lhs = mat_sub(mat_mul(v, u), mat_mul(u, v)).leading_block(n - 1);
      if (lhs != mat_sub(SquareMatrix::identity(n - 1), w_matrix(n - 1))) return verdict(false, "N = " + std::to_string(n));
    }
    return verdict(true);
  });
  c.add("self-build", "the self-building recurrence reproduces M for the displayed examples", [&] {
    bool ok = self_build_triangle(powers(1, 7), 7) == reference::geometric_triangle(1) &&
              self_build_triangle(powers(2, 7), 7) == reference::geometric_triangle(2);
    for (long r = 0; r <= 4; ++r) ok = ok && self_build_triangle(hanna_a_sequence(r, 7), 7) == reference::hanna(r);
    return verdict(ok, "T(0,0) = 1");
  });
}

void appell_claims(Corpus& c) {
  const auto egf = [](long r, std::size_t n) {
    std::vector<Rational> d(n);
    d[0] = 1;
    if (n > 1) d[1] = -2;
    if (n > 2) d[2] = 1;
    return egf_to_sequence(ps_mul(PowerSeries::exp(r, n), ps_inverse(PowerSeries(std::move(d)))));
  };
  c.add("a001339.egf", "e^x/(1-x)^2 is the egf of A001339", [&] { return c.against("A001339", egf(1, 15)); });
  c.add("a001339.binomial", "A001339 is the binomial transform of (n+1)!",
        [&] { return c.against("A001339", binomial_transform_r(shifted_factorials(15), 1)); });
  c.add("a001339.jacobi", "J(3,5,7,9,...; 2,6,12,20,...) expands to A001339, 10 terms",
        [&] { return c.against("A001339", expand(arithmetic_jacobi(3, 2, 6), 10)); });
  c.add("a081923.egf", "e^{2x}/(1-x)^2 is the egf of A081923", [&] { return c.against("A081923", egf(2, 15)); });
  c.add("a081923.jacobi", "J(4,6,8,10,...; 2,6,12,20,...) expands to A081923, 10 terms",
        [&] { return c.against("A081923", expand(arithmetic_jacobi(4, 2, 6), 10)); });
  c.add("appell.closed-form", "m_n = sum C(n-1,k)(n-k)! r^k is column 0 of M for a_n = r^n, r = 0..5", [] {
    for (long r = 0; r <= 5; ++r) {
      const auto m = almost_pm_triangle(powers(r, 14), 14);
      const auto bt = binomial_transform_r(shifted_factorials(14), r);
      for (std::size_t n = 0; n < 14; ++n) {
        if (appell_m_closed_form(r, n) != m(n, 0)) return verdict(false, "column, r = " + std::to_string(r));
        if (appell_m_closed_form(r, n + 1) != bt[n]) return verdict(false, "binomial, r = " + std::to_string(r));
      }
    }
    return verdict(true);
  });
  c.add("appell.coefficients", "coefficient array of the closed-form polynomials, 7 rows",
        [] { return verdict(coefficient_array(appell_m_polynomials(7)) == reference::appell_coefficients()); });
  c.add("appell.a132159", "the closed-form array without its diagonal is A132159",
        [&] { return c.against("A132159", appell_array_without_diagonal(10), 0); });
  c.add("appell.jacobi", "m_{n+1} has J-fraction J(r+2, r+4, r+6, 10, ...; 2, 6, 12, 20, ...), r = 0..4", [] {
    bool printed = true, corrected = true;
    for (long r = 0; r <= 4; ++r) {
      const auto s = PowerSeries::from_integers(binomial_transform_r(shifted_factorials(12), r).terms);
      const auto fit = series_to_jacobi(s, 6);
      corrected = corrected && fit == arithmetic_jacobi(r + 2, 2, 6);
      printed = printed && fit.a[3] == 10;
    }
    return printed_vs_corrected(printed, corrected, "fourth a-coefficient is r+8; the literal 10 holds at r = 2 only");
  });
}

void hanna_claims(Corpus& c) {
  for (long r = 1; r <= 4; ++r)
    c.add("hanna" + std::to_string(r) + ".triangle", "H(" + std::to_string(r) + ") equals the displayed 7x7 block",
          [=] { return verdict(hanna_triangle(r, 7) == reference::hanna(r)); });
  c.add("hanna.printed-recurrence", "the printed H_{n,k} recurrence reproduces the displayed triangles", [] {
    bool printed = true;
    std::string detail;
    for (long r = 1; r <= 4; ++r) {
      try {
        if (hanna_printed_recurrence(r, 7) != reference::hanna(r)) {
          printed = false;
          if (detail.empty())
            detail = "r = " + std::to_string(r) + " gives H(2,0) = " + to_decimal(hanna_printed_recurrence(r, 3)(2, 0));
        }
      } catch (const Error& e) {
        printed = false;
        if (detail.empty()) detail = e.what();
      }
    }
    bool corrected = true;
    for (long r = 1; r <= 4; ++r) corrected = corrected && hanna_triangle(r, 7) == reference::hanna(r);
    return printed_vs_corrected(printed, corrected, detail + "; the triangles follow from the S-fraction definition");
  });
  c.add("hanna0", "r = 0 gives n!/k! = [1/(1-x), x], its stated inverse and production matrix, P_M - M = U", [] {
    const auto m = hanna_triangle(0, 8);
    SquareMatrix bidiag = SquareMatrix::identity(7);
    for (std::size_t i = 1; i < 7; ++i) bidiag(i, i - 1) = -static_cast<long>(i);
    const auto p = production_matrix(m);
    return verdict(m.leading_block(7) == reference::hanna(0) &&
                   exponential_riordan(PowerSeries::geometric(1, 7), PowerSeries::x(7), 7) == reference::hanna(0) &&
                   lt_inverse(LowerTriMatrix(bidiag)) == reference::hanna(0) && p == reference::hanna0_production() &&
                   mat_sub(p, m.leading_block(7)).leading_block(6) == shift_matrix(6));
  });
  c.add("hanna.m-cf", "column 0 of H(r) has S-fraction S(1,2,3,...; r+1, r+2, r+2, ...), r = 1..5", [] {
    bool printed = true, corrected = true;
    for (long r = 1; r <= 5; ++r) {
      const auto m = column0(hanna_triangle(r, 14));
      printed = printed && hanna_m_cf_printed(r, 14) == m;
      corrected = corrected && hanna_m_cf_corrected(r, 14) == m;
    }
    return printed_vs_corrected(printed, corrected, "second interleaved sequence is r+1, r+2, r+3, ...");
  });
  c.add("hanna.convolution", "column 0 of H(r) satisfies the convolution recurrence, r = 0..6", [] {
    for (long r = 0; r <= 6; ++r)
      if (column0(hanna_triangle(r, 16)) != hanna_first_column(r, 16)) return verdict(false, "r = " + std::to_string(r));
    return verdict(true, "m_1 = 1 follows from m_0 = 1");
  });
  c.add("hanna.polynomials", "m_n(r) begins 1, 1, r+2, r^2+6r+6, r^3+12r^2+34r+24, r^4+20r^3+110r^2+210r+120", [] {
    const auto p = hanna_m_polynomials(6);
    return verdict(p[0] == IntPolynomial{1} && p[1] == IntPolynomial{1} && p[2] == IntPolynomial{2, 1} &&
                   p[3] == IntPolynomial{6, 6, 1} && p[4] == IntPolynomial{24, 34, 12, 1} &&
                   p[5] == IntPolynomial{120, 210, 110, 20, 1});
  });
  c.add("hanna.coefficients", "coefficient array of m_n(r), 8 rows",
        [] { return verdict(coefficient_array(hanna_m_polynomials(8)) == reference::hanna_coefficients()); });
  c.add("hanna.deleham", "the m_n(r) array is a variant of [0,2,1,3,2,4,...] Delta [1,0,1,0,...]", [] {
    const auto arr = reference::hanna_coefficients();
    const auto d = deleham_delta(deleham_r(), deleham_s(), arr.dim() + 1);
    if (d.leading_block(arr.dim()) == arr) return verdict(true, "equal");
    // Row n >= 1 of the array is row n of the Delta triangle moved one column left.
    bool shifted = arr(0, 0) == d(0, 0);
    for (std::size_t n = 1; n < arr.dim(); ++n) {
      shifted = shifted && d(n, 0) == 0;
      for (std::size_t k = 0; k < n; ++k) shifted = shifted && arr(n, k) == d(n, k + 1);
    }
    return verdict(shifted, "not equal; array(n,k) = Delta(n,k+1) for n >= 1, 8 rows");
  });
}

void martin_kearney_claims(Corpus& c) {
  c.add("mk.a-side", "the H(r) defining sequence is S(1, r-3, 1) of the u-recurrence, r = 1..5", [] {
    for (long r = 1; r <= 5; ++r)
      if (martin_kearney(1, r - 3, 1, 14).terms != hanna_a_sequence(r, 14).terms)
        return verdict(false, "r = " + std::to_string(r));
    return verdict(true, "14 terms");
  });
  c.add("mk.m-side", "column 0 of H(r) is S(1, -(r+1), 1) of the u-recurrence, r = 1..5", [] {
    bool printed = true, corrected = true;
    for (long r = 1; r <= 5; ++r) {
      const auto m = hanna_first_column(r, 14).terms;
      printed = printed && martin_kearney(1, -(r + 1), 1, 14).terms == m;
      corrected = corrected && martin_kearney(1, -(r + 1), r, 14).terms == m;
    }
    return printed_vs_corrected(printed, corrected, "third parameter is r");
  });
  c.add("mk.posited-s", "the posited S-fraction expands to the u-recurrence, 50 random triples and the H(r) columns", [&] {
    for (long r = 1; r <= 5; ++r)
      if (expand(mk_posited_cf(1, -(r + 1), r, 13), 14).terms != hanna_first_column(r, 14).terms)
        return verdict(false, "r = " + std::to_string(r));
    for (int t = 0; t < 50;) {
      const long alpha = uniform_int(c.rng(), 1, 4), beta = uniform_int(c.rng(), -4, 4), gamma = uniform_int(c.rng(), 0, 4);
      if (2 * alpha + beta + gamma <= 0 || alpha + gamma <= 0) continue;
      ++t;
      if (expand(mk_posited_cf(alpha, beta, gamma, 13), 14).terms != martin_kearney(alpha, beta, gamma, 14).terms)
        return verdict(false, "triple " + std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma));
    }
    return verdict(true, "14 terms");
  });
  c.add("mk.jacobi", "the printed J-fraction b-pattern (na+b)((n+1)a+b+g) matches the u-recurrence", [&] {
    bool printed = true, corrected = true;
    std::string detail;
    const auto check = [&](long alpha, long beta, long gamma) {
      const auto u = martin_kearney(alpha, beta, gamma, 14).terms;
      if (expand(mk_printed_jacobi(alpha, beta, gamma, 7), 14).terms != u) {
        if (printed)
          detail = "printed fails at (" + std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma) + ")";
        printed = false;
      }
      corrected = corrected && expand(stieltjes_to_jacobi(mk_posited_cf(alpha, beta, gamma, 13)), 14).terms == u;
    };
    check(1, -2, 1);
    for (int t = 0; t < 20;) {
      const long alpha = uniform_int(c.rng(), 1, 4), beta = uniform_int(c.rng(), -4, 4), gamma = uniform_int(c.rng(), 0, 4);
      if (2 * alpha + beta + gamma <= 0 || alpha + gamma <= 0) continue;
      ++t;
      check(alpha, beta, gamma);
    }
    return printed_vs_corrected(printed, corrected, detail + "; contraction gives b_n = (na+g)((n+1)a+b+g)");
  });
}

void oeis_claims(Corpus& c) {
  c.add("oeis.A003319", "column 0 of H(1)", [&] { return c.against("A003319", hanna_first_column(1, 20), 1); });
  c.add("oeis.A001339", "binomial transform of (n+1)!",
        [&] { return c.against("A001339", binomial_transform_r(shifted_factorials(20), 1)); });
  c.add("oeis.A081923", "second binomial transform of (n+1)!",
        [&] { return c.against("A081923", binomial_transform_r(shifted_factorials(20), 2)); });
  c.add("oeis.A094587", "H(0) by rows", [&] { return c.against("A094587", flattened(hanna_triangle(0, 12))); });
  c.add("oeis.A104980", "H(1) by rows", [&] { return c.against("A104980", flattened(hanna_triangle(1, 12))); });
  c.add("oeis.A111184", "[0,2,1,3,2,4,...] Delta [1,0,1,0,...] by rows",
        [&] { return c.against("A111184", flattened(deleham_delta(deleham_r(), deleham_s(), 12))); });
  c.add("oeis.A111529", "column 0 of H(2)", [&] { return c.against("A111529", hanna_first_column(2, 20)); });
  c.add("oeis.A111530", "column 0 of H(3)", [&] { return c.against("A111530", hanna_first_column(3, 20)); });
  c.add("oeis.A111531", "column 0 of H(4)", [&] { return c.against("A111531", hanna_first_column(4, 20)); });
  c.add("oeis.A111536", "H(2) by rows", [&] { return c.against("A111536", flattened(hanna_triangle(2, 12))); });
  c.add("oeis.A111544", "H(3) by rows, cited as 111544", [&] {
    bool printed = true;
    try {
      OeisId("111544");
    } catch (const Error&) {
      printed = false;
    }
    const auto o = c.against("A111544", flattened(hanna_triangle(3, 12)));
    return printed_vs_corrected(printed, o.status == ClaimStatus::pass, "read as A111544; " + o.detail);
  });
  c.add("oeis.A111553", "H(4) by rows", [&] { return c.against("A111553", flattened(hanna_triangle(4, 12))); });
  c.add("oeis.A132159", "closed-form array rows without the diagonal",
        [&] { return c.against("A132159", appell_array_without_diagonal(12)); });
}

}  // namespace

ClaimsReport run_claims(const OeisClient& client, std::uint64_t seed) {
  Corpus c(client, seed);
  triangle_claims(c);
  appell_claims(c);
  hanna_claims(c);
  martin_kearney_claims(c);
  oeis_claims(c);
  return c.take();
}

nlohmann::json to_json(const ClaimsReport& report) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : report.results)
    items.push_back({{"id", r.id}, {"statement", r.statement}, {"status", to_string(r.status)}, {"detail", r.detail}});
  return {{"claims", items},
          {"pass", report.count(ClaimStatus::pass)},
          {"deviation", report.count(ClaimStatus::deviation)},
          {"fail", report.count(ClaimStatus::fail)}};
}

std::string render_plain(const ClaimsReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << '[' << to_string(r.status) << "] " << r.id << ": " << r.statement;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << '\n';
  }
  os << report.count(ClaimStatus::pass) << " pass, " << report.count(ClaimStatus::deviation) << " deviation, "
     << report.count(ClaimStatus::fail) << " fail\n";
  return os.str();
}

}  // namespace prodtri
