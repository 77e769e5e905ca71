/* Independent reference computations used only by the tests. */
#ifndef FAVOR7_TEST_ORACLES_HPP_
#define FAVOR7_TEST_ORACLES_HPP_

#include "favor7/arith.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using favor7::Int;
using favor7::IntPoly;
using favor7::Rat;
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

/* determinant by Bareiss fraction-free elimination */
inline Int bareiss_det(std::vector<std::vector<Int>> a)
{
    int n = (int)a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; k++) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < n && a[r][k] == 0)
                r++;
            if (r == n)
                return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/* Sylvester matrix determinant */
inline Int sylvester_resultant(IntPoly const& p, IntPoly const& q)
{
    int m = p.degree(), n = q.degree();
    int N = m + n;
    std::vector<std::vector<Int>> S(N, std::vector<Int>(N, 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= m; j++)
            S[i][i + j] = p.c[m - j];
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= n; j++)
            S[n + i][i + j] = q.c[n - j];
    return bareiss_det(S);
}

/* disc via the Sylvester matrix of p and p' */
inline Int sylvester_discriminant(IntPoly const& p)
{
    int n = p.degree();
    Int r = sylvester_resultant(p, p.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
    if ((n * (n - 1) / 2) & 1)
        r = -r;
    return r;
}

/* all complex roots, Durand-Kerner iteration */
inline std::vector<Complex> numeric_roots(IntPoly const& p)
{
    int n = p.degree();
    std::vector<Complex> a(n + 1);
    for (int i = 0; i <= n; i++)
        a[i] = Complex(Real(p.c[i].get_str()) / Real(p.lc().get_str()));
    auto eval = [&](Complex const& z) {
        Complex r = 0;
        for (int i = n; i >= 0; i--)
            r = r * z + a[i];
        return r;
    };
    std::vector<Complex> z(n);
    Complex seed(Real("0.4"), Real("0.9"));
    Real bound = 1;
    for (int i = 0; i < n; i++)
        bound = std::max(bound, Real(1) + abs(a[i]));
    Complex w = 1;
    for (int i = 0; i < n; i++) {
        z[i] = w * Complex(bound / 2);
        w *= seed;
    }
    Real eps("1e-45");
    for (int it = 0; it < 2000; it++) {
        Real delta = 0;
        for (int i = 0; i < n; i++) {
            Complex den = 1;
            for (int j = 0; j < n; j++)
                if (j != i)
                    den *= (z[i] - z[j]);
            Complex step = eval(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, Real(abs(step)));
        }
        if (delta < eps)
            break;
    }
    return z;
}

/* Real root count by Descartes' rule with bisection (Vincent-Collins-
 * Akritas) on (0, 1) after scaling; exact integer arithmetic. */
inline int sign_variations(std::vector<Int> const& c)
{
    int v = 0, last = 0;
    for (auto const& x : c) {
        int s = mpz_sgn(x.get_mpz_t());
        if (!s)
            continue;
        if (last && s != last)
            v++;
        last = s;
    }
    return v;
}

inline std::vector<Int> taylor_shift1(std::vector<Int> c)
{
    int n = (int)c.size() - 1;
    for (int i = 0; i < n; i++)
        for (int j = n - 1; j >= i; j--)
            c[j] += c[j + 1];
    return c;
}

/* roots of c in the open interval (0, 1) */
inline int vca_count(std::vector<Int> c, int depth = 0)
{
    int n = (int)c.size() - 1;
    if (n <= 0)
        return 0;
    /* variations of (x+1)^n c(1/(x+1)) */
    std::vector<Int> rev(c.rbegin(), c.rend());
    int v = sign_variations(taylor_shift1(rev));
    if (v <= 1)
        return v;
    if (depth > 200)
        throw std::runtime_error("vca did not terminate");
    /* halves: 2^n c(x/2) and 2^n c((x+1)/2) */
    std::vector<Int> left(n + 1);
    for (int i = 0; i <= n; i++) {
        Int t = c[i];
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), n - i);
        left[i] = t;
    }
    std::vector<Int> right = taylor_shift1(left);
    int mid = (right[0] == 0) ? 1 : 0;
    if (mid) {
        /* divide out the root at 1/2 */
        right.erase(right.begin());
    }
    return vca_count(left, depth + 1) + vca_count(right, depth + 1) + mid;
}

inline int bisection_real_roots(IntPoly const& p)
{
    int n = p.degree();
    /* Cauchy bound as a power of two */
    Int maxc = 0;
    for (int i = 0; i < n; i++)
        if (abs(p.c[i]) > maxc)
            maxc = abs(p.c[i]);
    Int B = 1;
    long k = 0;
    while (B * abs(p.lc()) <= maxc + abs(p.lc())) {
        B *= 2;
        k++;
    }
    int total = 0;
    if (p.c[0] == 0)
        total++;
    for (int side : {1, -1}) {
        /* roots of p(side * B * x) in (0,1) */
        std::vector<Int> c(n + 1);
        for (int i = 0; i <= n; i++) {
            Int t = p.c[i];
            mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), k * i);
            if (side < 0 && (i & 1))
                t = -t;
            c[i] = t;
        }
        int z = 0;
        while (z < n && c[z] == 0)
            z++;
        c.erase(c.begin(), c.begin() + z);
        total += vca_count(c);
    }
    return total;
}

inline IntPoly random_poly(std::mt19937_64& rng, int deg, int bound, bool monic_like = false)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Int> c(deg + 1);
    for (auto& x : c)
        x = d(rng);
    while (c[deg] == 0)
        c[deg] = d(rng);
    if (monic_like)
        c[deg] = 1;
    return IntPoly(c);
}

/* conductor exponent of Q_2(sqrt d)/Q_2 for rational d != 0, from the
 * shape of d modulo squares: odd 2-adic valuation gives 3, a unit part
 * 3 mod 4 gives 2, otherwise unramified (0) */
inline int quadratic_conductor_2adic(Rat d)
{
    d.canonicalize();
    if (d == 0)
        throw std::invalid_argument("zero");
    /* d ~ num * den modulo squares */
    Int n = d.get_num() * d.get_den();
    long v = mpz_scan1(n.get_mpz_t(), 0);
    if (v & 1)
        return 3;
    Int u = n >> v;
    Int r = u % 4;
    if (r < 0)
        r += 4;
    return r == 3 ? 2 : 0;
}

}  // namespace oracle

#endif
