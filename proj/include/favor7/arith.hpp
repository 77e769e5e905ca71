#ifndef FAVOR7_ARITH_HPP_
#define FAVOR7_ARITH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace favor7 {

using Int = mpz_class;
using Rat = mpq_class;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Dense univariate polynomial, c[i] is the coefficient of x^i.  Trailing
 * zeros are always stripped, so the zero polynomial has an empty vector.
 */
template <class R>
class Poly {
  public:
    std::vector<R> c;

    Poly() = default;
    explicit Poly(std::vector<R> v) : c(std::move(v)) { normalize(); }
    Poly(std::initializer_list<R> v) : c(v) { normalize(); }

    static Poly constant(R const& a) { return Poly(std::vector<R>{a}); }
    static Poly monomial(R const& a, int d)
    {
        std::vector<R> v(d + 1, R(0));
        v[d] = a;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(R(1), 1); }

    void normalize()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    R const& lc() const
    {
        if (c.empty())
            throw arith_error("zero polynomial");
        return c.back();
    }
    R coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : R(0); }

    R operator()(R const& x) const
    {
        R r = 0;
        for (int i = degree(); i >= 0; i--)
            r = r * x + c[i];
        return r;
    }

    Poly derivative() const
    {
        std::vector<R> v;
        for (int i = 1; i <= degree(); i++)
            v.push_back(R(c[i] * i));
        return Poly(std::move(v));
    }

    Poly& operator+=(Poly const& b)
    {
        if (b.c.size() > c.size())
            c.resize(b.c.size(), R(0));
        for (size_t i = 0; i < b.c.size(); i++)
            c[i] += b.c[i];
        normalize();
        return *this;
    }
    Poly& operator-=(Poly const& b)
    {
        if (b.c.size() > c.size())
            c.resize(b.c.size(), R(0));
        for (size_t i = 0; i < b.c.size(); i++)
            c[i] -= b.c[i];
        normalize();
        return *this;
    }
    Poly& operator*=(R const& s)
    {
        for (auto& a : c)
            a *= s;
        normalize();
        return *this;
    }
    friend Poly operator+(Poly a, Poly const& b) { return a += b; }
    friend Poly operator-(Poly a, Poly const& b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto& x : a.c)
            x = -x;
        return a;
    }
    friend Poly operator*(Poly a, R const& s) { return a *= s; }
    friend Poly operator*(R const& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly const& a, Poly const& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<R> v(a.c.size() + b.c.size() - 1, R(0));
        for (size_t i = 0; i < a.c.size(); i++) {
            if (a.c[i] == 0)
                continue;
            for (size_t j = 0; j < b.c.size(); j++)
                v[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(Poly const& b) { return *this = *this * b; }
    friend bool operator==(Poly const& a, Poly const& b) { return a.c == b.c; }
    friend bool operator!=(Poly const& a, Poly const& b) { return !(a == b); }

    Poly pow(unsigned e) const
    {
        Poly r = constant(R(1)), b = *this;
        for (; e; e >>= 1) {
            if (e & 1)
                r *= b;
            if (e > 1)
                b *= b;
        }
        return r;
    }

    /* p(x+a) */
    Poly shift(R const& a) const
    {
        std::vector<R> v = c;
        int n = degree();
        for (int i = 0; i < n; i++)
            for (int j = n - 1; j >= i; j--)
                v[j] += a * v[j + 1];
        return Poly(std::move(v));
    }

    /* p(a*x) */
    Poly scale_var(R const& a) const
    {
        std::vector<R> v = c;
        R m = 1;
        for (auto& x : v) {
            x *= m;
            m *= a;
        }
        return Poly(std::move(v));
    }

    /* p(q(x)) */
    Poly compose(Poly const& q) const
    {
        Poly r;
        for (int i = degree(); i >= 0; i--)
            r = r * q + constant(c[i]);
        return r;
    }

    std::string to_string(char var = 'x') const;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

template <class R>
std::string Poly<R>::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; i--) {
        R a = c[i];
        if (a == 0)
            continue;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (!s.empty())
            s += neg ? " - " : " + ";
        else if (neg)
            s += "-";
        bool one = (a == 1);
        if (!one || i == 0)
            s += a.get_str();
        if (i > 0) {
            s += var;
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

/* Integer polynomial helpers */
Int content(IntPoly const& p);
IntPoly primitive_part(IntPoly const& p);
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b);
IntPoly exact_quotient(IntPoly const& a, IntPoly const& b);
IntPoly primitive_gcd(IntPoly a, IntPoly b);
bool is_squarefree(IntPoly const& p);

RatPoly to_rat(IntPoly const& p);
/* clear denominators and divide by the content; leading coefficient made
 * positive */
IntPoly primitive_integer(RatPoly const& p);
std::pair<RatPoly, RatPoly> divrem(RatPoly const& a, RatPoly const& b);
RatPoly monic(RatPoly const& p);

/* Sylvester resultant: Res(p, q) = lc(p)^deg(q) * prod q(alpha) over the
 * roots alpha of p.  Computed with the subresultant PRS. */
Int resultant(IntPoly const& p, IntPoly const& q);

/* disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p) */
Int discriminant(IntPoly const& p);

/* Sturm sequence with primitive parts, starting p, p' */
std::vector<IntPoly> sturm_sequence(IntPoly const& p);
int sign_changes_at(std::vector<IntPoly> const& seq, Rat const& x);
int sign_changes_at_infinity(std::vector<IntPoly> const& seq, int side);
int count_real_roots(IntPoly const& p);
/* roots in the half-open interval (a, b] */
int count_real_roots_between(IntPoly const& p, Rat const& a, Rat const& b);

/* exact square root of a monic rational polynomial, or throws */
RatPoly exact_sqrt(RatPoly const& p);

/* v_p of a nonzero integer / rational */
long valuation(Int n, Int const& p);
long valuation(Rat const& x, Int const& p);

bool miller_rabin(Int const& n, unsigned long base);
bool is_prime(Int const& n);
/* fixed Miller-Rabin base set, deterministic below this bound */
Int deterministic_mr_bound();

/* "4x^7 - 12x^6 + 1", or a comma separated list of coefficients given
 * from the highest degree down */
IntPoly parse_polynomial(std::string const& s);

}  // namespace favor7

#endif /* FAVOR7_ARITH_HPP_ */
