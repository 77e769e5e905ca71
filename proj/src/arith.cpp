#include "favor7/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace favor7 {

Int content(IntPoly const& p)
{
    Int g = 0;
    for (auto const& a : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly primitive_part(IntPoly const& p)
{
    if (p.is_zero())
        return p;
    Int g = content(p);
    IntPoly r = p;
    for (auto& a : r.c)
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return r;
}

/* lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions */
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b)
{
    if (b.is_zero())
        throw arith_error("zero polynomial");
    int db = b.degree();
    if (a.degree() < db)
        return a;
    std::vector<Int> r = a.c;
    Int const& l = b.lc();
    for (int d = a.degree(); d >= db; d--) {
        Int q = r[d];
        for (int i = 0; i <= d; i++)
            r[i] *= l;
        if (q != 0)
            for (int i = 0; i <= db; i++)
                r[d - db + i] -= q * b.c[i];
    }
    /* l was applied once per step, including steps with a zero leading
     * term, so the exponent is exactly deg a - deg b + 1 */
    r.resize(db);
    return IntPoly(std::move(r));
}

IntPoly exact_quotient(IntPoly const& a, IntPoly const& b)
{
    if (b.is_zero())
        throw arith_error("zero polynomial");
    int db = b.degree();
    if (a.is_zero())
        return a;
    if (a.degree() < db)
        throw arith_error("inexact polynomial division");
    std::vector<Int> r = a.c;
    std::vector<Int> q(a.degree() - db + 1);
    for (int d = a.degree(); d >= db; d--) {
        if (r[d] == 0)
            continue;
        if (!mpz_divisible_p(r[d].get_mpz_t(), b.lc().get_mpz_t()))
            throw arith_error("inexact polynomial division");
        Int t;
        mpz_divexact(t.get_mpz_t(), r[d].get_mpz_t(), b.lc().get_mpz_t());
        q[d - db] = t;
        for (int i = 0; i <= db; i++)
            r[d - db + i] -= t * b.c[i];
    }
    for (int i = 0; i < db; i++)
        if (r[i] != 0)
            throw arith_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

IntPoly primitive_gcd(IntPoly a, IntPoly b)
{
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.lc() < 0)
        a = -a;
    return a;
}

bool is_squarefree(IntPoly const& p)
{
    if (p.degree() <= 0)
        return true;
    return primitive_gcd(p, p.derivative()).degree() == 0;
}

RatPoly to_rat(IntPoly const& p)
{
    std::vector<Rat> v;
    v.reserve(p.c.size());
    for (auto const& a : p.c)
        v.emplace_back(a);
    return RatPoly(std::move(v));
}

IntPoly primitive_integer(RatPoly const& p)
{
    Int l = 1;
    for (auto const& a : p.c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Int> v;
    for (auto const& a : p.c) {
        Rat t = a * l;
        v.push_back(t.get_num());
    }
    IntPoly r = primitive_part(IntPoly(std::move(v)));
    if (!r.is_zero() && r.lc() < 0)
        r = -r;
    return r;
}

std::pair<RatPoly, RatPoly> divrem(RatPoly const& a, RatPoly const& b)
{
    if (b.is_zero())
        throw arith_error("zero polynomial");
    std::vector<Rat> r = a.c;
    int db = b.degree();
    if (a.degree() < db)
        return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1);
    for (int d = a.degree(); d >= db; d--) {
        if (r[d] == 0)
            continue;
        Rat t = r[d] / b.lc();
        q[d - db] = t;
        for (int i = 0; i <= db; i++)
            r[d - db + i] -= t * b.c[i];
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(RatPoly const& p)
{
    RatPoly r = p;
    Rat l = p.lc();
    for (auto& a : r.c)
        a /= l;
    return r;
}

static Int ipow(Int const& a, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

static Int exact_div(Int const& a, Int const& b)
{
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int resultant(IntPoly const& p, IntPoly const& q)
{
    if (p.is_zero() || q.is_zero())
        throw arith_error("zero polynomial");
    IntPoly A = p, B = q;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
    }
    if (B.degree() == 0)
        return s * ipow(B.lc(), A.degree());
    Int a = content(A), b = content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    Int t = ipow(a, B.degree()) * ipow(b, A.degree());
    Int g = 1, h = 1;
    for (;;) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.is_zero())
            return 0;
        Int den = g * ipow(h, delta);
        for (auto& x : R.c)
            x = exact_div(x, den);
        B = std::move(R);
        g = A.lc();
        if (delta > 0)
            h = exact_div(ipow(g, delta), ipow(h, delta - 1));
        if (B.degree() == 0)
            break;
    }
    int dA = A.degree();
    Int hf = exact_div(ipow(B.lc(), dA), ipow(h, dA - 1));
    return s * t * hf;
}

Int discriminant(IntPoly const& p)
{
    int n = p.degree();
    if (n < 2)
        throw arith_error("discriminant needs degree >= 2");
    Int r = exact_div(resultant(p, p.derivative()), p.lc());
    if (((long)n * (n - 1) / 2) & 1)
        r = -r;
    return r;
}

std::vector<IntPoly> sturm_sequence(IntPoly const& p)
{
    std::vector<IntPoly> seq;
    if (p.is_zero())
        throw arith_error("zero polynomial");
    seq.push_back(primitive_part(p));
    if (p.degree() == 0)
        return seq;
    seq.push_back(primitive_part(p.derivative()));
    for (;;) {
        IntPoly const& a = seq[seq.size() - 2];
        IntPoly const& b = seq.back();
        if (b.degree() == 0)
            break;
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero())
            break;
        int e = a.degree() - b.degree() + 1;
        bool flip = (b.lc() < 0) && (e & 1);
        r = primitive_part(r);
        if (!flip)
            r = -r;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_changes_at(std::vector<IntPoly> const& seq, Rat const& x)
{
    int changes = 0, last = 0;
    for (auto const& P : seq) {
        /* evaluate the numerator of P(x) scaled by den^deg, same sign */
        Int num = x.get_num(), den = x.get_den();
        Int v = 0, dp = 1;
        for (int i = P.degree(); i >= 0; i--) {
            v = v * num + P.c[i] * dp;
            dp *= den;
        }
        int s = mpz_sgn(v.get_mpz_t());
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            changes++;
        last = s;
    }
    return changes;
}

int sign_changes_at_infinity(std::vector<IntPoly> const& seq, int side)
{
    int changes = 0, last = 0;
    for (auto const& P : seq) {
        int s = mpz_sgn(P.lc().get_mpz_t());
        if (side < 0 && (P.degree() & 1))
            s = -s;
        if (last != 0 && s != last)
            changes++;
        last = s;
    }
    return changes;
}

static std::vector<IntPoly> checked_sturm(IntPoly const& p)
{
    auto seq = sturm_sequence(p);
    if (seq.back().degree() > 0)
        throw arith_error("squarefree required");
    return seq;
}

int count_real_roots(IntPoly const& p)
{
    if (p.degree() <= 0)
        return 0;
    auto seq = checked_sturm(p);
    return sign_changes_at_infinity(seq, -1) - sign_changes_at_infinity(seq, 1);
}

int count_real_roots_between(IntPoly const& p, Rat const& a, Rat const& b)
{
    if (p.degree() <= 0)
        return 0;
    auto seq = checked_sturm(p);
    return sign_changes_at(seq, a) - sign_changes_at(seq, b);
}

RatPoly exact_sqrt(RatPoly const& p)
{
    if (p.is_zero())
        return p;
    int n = p.degree();
    if ((n & 1) || p.lc() != 1)
        throw arith_error("not an exact square");
    int m = n / 2;
    std::vector<Rat> r(m + 1);
    r[m] = 1;
    /* match coefficients of x^(2m-k) from the top */
    for (int k = 1; k <= m; k++) {
        Rat acc = p.coeff(n - k);
        for (int i = m - k + 1; i <= m; i++) {
            int j = n - k - i;
            if (j > m - k && j <= m)
                acc -= r[i] * r[j];
        }
        r[m - k] = acc / 2;
    }
    RatPoly s(std::move(r));
    if (s * s != p)
        throw arith_error("not an exact square");
    return s;
}

long valuation(Int n, Int const& p)
{
    if (n == 0)
        throw arith_error("valuation of zero");
    return (long)mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long valuation(Rat const& x, Int const& p)
{
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

bool miller_rabin(Int const& n, unsigned long base)
{
    Int nm1 = n - 1, d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int a = base, x;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (a == 0)
        return true;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return true;
    for (unsigned long i = 1; i < s; i++) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

static const unsigned long mr_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

Int deterministic_mr_bound() { return Int("3317044064679887385961981"); }

bool is_prime(Int const& n)
{
    if (n <= 1)
        throw arith_error("primality test needs n > 1");
    for (unsigned long b : mr_bases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    if (n < deterministic_mr_bound()) {
        for (unsigned long b : mr_bases)
            if (!miller_rabin(n, b))
                return false;
        return true;
    }
    /* GMP runs Baillie-PSW followed by extra Miller-Rabin rounds; no
     * known counterexample, but not proven */
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

static std::string strip_spaces(std::string const& s)
{
    std::string r;
    for (char ch : s)
        if (!std::isspace((unsigned char)ch))
            r += ch;
    return r;
}

IntPoly parse_polynomial(std::string const& input)
{
    std::string s = strip_spaces(input);
    if (s.empty())
        throw arith_error("empty polynomial");
    if (s.find('x') == std::string::npos) {
        std::vector<Int> hi_to_lo;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty())
                throw arith_error("bad coefficient list");
            Int v;
            if (v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
                throw arith_error("bad coefficient '" + tok + "'");
            hi_to_lo.push_back(v);
        }
        std::reverse(hi_to_lo.begin(), hi_to_lo.end());
        return IntPoly(std::move(hi_to_lo));
    }
    std::vector<Int> c;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            i++;
        }
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j]))
            j++;
        Int coef = 1;
        bool have_digits = j > i;
        if (have_digits)
            coef.set_str(s.substr(i, j - i), 10);
        i = j;
        if (i < s.size() && s[i] == '*')
            i++;
        long e = 0;
        if (i < s.size() && s[i] == 'x') {
            i++;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                size_t k = i;
                while (k < s.size() && std::isdigit((unsigned char)s[k]))
                    k++;
                if (k == i)
                    throw arith_error("bad exponent in '" + input + "'");
                e = std::stol(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_digits) {
            throw arith_error("cannot parse '" + input + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw arith_error("cannot parse '" + input + "'");
        if ((long)c.size() <= e)
            c.resize(e + 1, Int(0));
        c[e] += sign * coef;
    }
    return IntPoly(std::move(c));
}

}  // namespace favor7
