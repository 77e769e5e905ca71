#include "favor7/resolvent.hpp"
#include "favor7/modp.hpp"
#include "favor7/padic.hpp"

#include <sstream>

namespace favor7 {

/* Newton interpolation through (x_k, y_k) */
static RatPoly interpolate(std::vector<Int> const& xs, std::vector<Int> const& ys)
{
    size_t n = xs.size();
    std::vector<Rat> d(ys.begin(), ys.end());
    for (size_t j = 1; j < n; j++)
        for (size_t i = n - 1; i >= j; i--) {
            d[i] = (d[i] - d[i - 1]) / Rat(xs[i] - xs[i - j]);
            d[i].canonicalize();
        }
    RatPoly r = RatPoly::constant(d[n - 1]);
    for (size_t i = n - 1; i-- > 0;)
        r = r * RatPoly({Rat(-xs[i]), Rat(1)}) + RatPoly::constant(d[i]);
    return r;
}

/* Res_y(f(y), f(c - y)) */
static Int pair_resultant_at(IntPoly const& f, Int const& c)
{
    IntPoly cy({c, Int(-1)});
    return resultant(f, f.compose(cy));
}

IntPoly pair_sum_polynomial(IntPoly const& f)
{
    int n = f.degree();
    if (n < 2)
        throw resolvent_error("degree must be at least 2");
    if (!is_squarefree(f))
        throw resolvent_error("polynomial is not squarefree");
    int D = n * n;
    std::vector<Int> xs, ys;
    for (int k = 0; k <= D; k++) {
        xs.push_back(Int(k));
        ys.push_back(pair_resultant_at(f, Int(k)));
    }
    RatPoly R = interpolate(xs, ys);
    /* R = lc^(2n) prod_i (x - 2 a_i) * Q^2, prod_i (x - 2 a_i) = 2^n f(x/2) / lc */
    RatPoly diag;
    {
        std::vector<Rat> c(n + 1);
        for (int i = 0; i <= n; i++) {
            Rat v(f.c[i]);
            /* 2^n (x/2)^i = 2^(n-i) x^i */
            Int p2 = 1;
            mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), n - i);
            c[i] = v * Rat(p2) / Rat(f.lc());
            c[i].canonicalize();
        }
        diag = RatPoly(c);
    }
    Int lc2n;
    mpz_pow_ui(lc2n.get_mpz_t(), f.lc().get_mpz_t(), 2 * n);
    auto [q2, rem] = divrem(R, diag * Rat(lc2n));
    if (!rem.is_zero())
        throw resolvent_error("internal: diagonal factor does not divide");
    RatPoly Q;
    try {
        Q = exact_sqrt(q2);
    } catch (arith_error const&) {
        throw resolvent_error("degenerate pair sums - apply Tschirnhaus shift");
    }
    IntPoly P = primitive_integer(Q);
    if (P.lc() < 0)
        P = -P;
    if (!is_squarefree(P))
        throw resolvent_error("degenerate pair sums - apply Tschirnhaus shift");
    return P;
}

IntPoly tschirnhaus(IntPoly const& f, long c)
{
    /* Res_x(f(x), y - x^2 - c x) as a polynomial in y, by interpolation */
    int n = f.degree();
    std::vector<Int> xs, ys;
    for (int k = 0; k <= n; k++) {
        Int y = k;
        IntPoly g({y, Int(-c), Int(-1)});
        xs.push_back(y);
        ys.push_back(resultant(f, g));
    }
    IntPoly P = primitive_integer(interpolate(xs, ys));
    if (P.lc() < 0)
        P = -P;
    return P;
}

PairResolvent pair_resolvent_polynomial(IntPoly const& f)
{
    PairResolvent r;
    try {
        r.minpoly = pair_sum_polynomial(f);
        return r;
    } catch (resolvent_error const& e) {
        if (std::string(e.what()).find("degenerate") == std::string::npos)
            throw;
    }
    for (long c = 1; c <= 12; c++) {
        IntPoly g = tschirnhaus(f, c);
        if (g.degree() != f.degree() || !is_squarefree(g))
            continue;
        try {
            r.minpoly = pair_sum_polynomial(g);
            r.transform = c;
            return r;
        } catch (resolvent_error const&) {
        }
    }
    throw resolvent_error("degenerate pair sums - no Tschirnhaus transform separated them");
}

int resolvent_r1_formula(int r1)
{
    int r2 = (7 - r1) / 2;
    return r1 * (r1 - 1) / 2 + r2;
}

IntPoly ratio_trace_polynomial(IntPoly const& f)
{
    int n = f.degree();
    if (n < 2 || f.c[0] == 0)
        throw resolvent_error("ratio polynomial needs degree >= 2 and nonzero roots");
    /* Res_y(f(y), f(x y)) = c prod_{i,j} (x - a_j / a_i) */
    int D = n * n;
    std::vector<Int> xs, ys;
    for (int k = 0; k <= D; k++) {
        Int x = k + 2;
        std::vector<Int> c(f.c.begin(), f.c.end());
        Int xp = 1;
        for (auto& ci : c) {
            ci *= xp;
            xp *= x;
        }
        xs.push_back(x);
        ys.push_back(resultant(f, IntPoly(c)));
    }
    RatPoly R = interpolate(xs, ys);
    RatPoly lin({Rat(-1), Rat(1)});
    for (int i = 0; i < n; i++) {
        auto [q, rem] = divrem(R, lin);
        if (!rem.is_zero())
            throw resolvent_error("internal: diagonal ratio factor missing");
        R = q;
    }
    /* R(x) = x^m T(x + 1/x), m = n(n-1)/2 */
    int m = n * (n - 1) / 2;
    if (R.degree() != 2 * m)
        throw resolvent_error("internal: ratio polynomial degree");
    RatPoly T;
    {
        std::vector<Rat> rv, tv;
        for (int k = 0; k <= m; k++) {
            Rat x(k + 2);
            Rat val = 0;
            for (int i = R.degree(); i >= 0; i--)
                val = val * x + R.c[i];
            Rat xm = 1;
            for (int i = 0; i < m; i++)
                xm *= x;
            val /= xm;
            Rat r = x + Rat(1) / x;
            r.canonicalize();
            val.canonicalize();
            rv.push_back(r);
            tv.push_back(val);
        }
        /* Newton interpolation with rational nodes */
        size_t N = rv.size();
        std::vector<Rat> d(tv);
        for (size_t j = 1; j < N; j++)
            for (size_t i = N - 1; i >= j; i--) {
                d[i] = (d[i] - d[i - 1]) / (rv[i] - rv[i - j]);
                d[i].canonicalize();
            }
        T = RatPoly::constant(d[N - 1]);
        for (size_t i = N - 1; i-- > 0;)
            T = T * RatPoly({-rv[i], Rat(1)}) + RatPoly::constant(d[i]);
    }
    IntPoly P = primitive_integer(T);
    if (P.lc() < 0)
        P = -P;
    return P;
}

static std::string f2_poly_string(ModpRing::poly const& p)
{
    std::ostringstream os;
    bool first = true;
    for (int i = ModpRing::degree(p); i >= 0; i--) {
        if (!p[i])
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0)
            os << "1";
        else if (i == 1)
            os << "x";
        else
            os << "x^" << i;
    }
    return first ? "0" : os.str();
}

TwoAdicCertificate two_adic_certificate(IntPoly const& parent, IntPoly const& minpoly)
{
    TwoAdicCertificate c;
    NewtonPolygon np = newton_polygon(to_rat(minpoly), Int(2));
    c.polygon = np.to_string();
    if (!np.single_slope()) {
        c.report = "Newton polygon at 2 has several slopes: " + c.polygon;
        return c;
    }
    auto const& s = np.segments[0];
    if (s.ramification() != 7) {
        c.report = "slope denominator " + std::to_string(s.ramification()) + " is not 7";
        return c;
    }
    if (minpoly.degree() != 21) {
        c.report = "degree is not 21";
        return c;
    }
    IntPoly T = ratio_trace_polynomial(parent);
    NewtonPolygon tp = newton_polygon(to_rat(T), Int(2));
    if (!(tp.single_slope() && tp.segments[0].slope == 0)) {
        c.report = "ratio traces are not 2-adic units: " + tp.to_string();
        return c;
    }
    ModpRing F2(2);
    auto t = F2.reduce(T);
    ModpRing::poly x8x(9, 0);
    x8x[8] = 1;
    x8x[1] = 1;
    auto g = F2.gcd(t, x8x);
    c.residue_factor = f2_poly_string(g);
    uint64_t at1 = 0;
    for (auto x : t)
        at1 ^= x;
    if (t.empty() || t[0] == 0 || at1 == 0) {
        c.report = "ratio trace residue in F_2";
        return c;
    }
    c.ok = true;
    c.e = 7;
    c.f = 3;
    return c;
}

ShapeAtN shape_at_N(IntPoly const& minpoly, Int const& N, Int const& disc_parent)
{
    if (disc_parent % N != 0)
        throw resolvent_error("N does not divide the discriminant of the parent");
    ShapeAtN s;
    if (!N.fits_ulong_p() || N >= Int("9223372036854775808"))
        throw resolvent_error("N too large for the modular arithmetic");
    ModpRing R(N.get_ui());
    if (minpoly.lc() % N == 0) {
        s.report = "shape unverifiable from polynomial: leading coefficient divisible by N";
        return s;
    }
    auto P = R.reduce(minpoly);
    auto sq = R.squarefree_decomposition(P);
    for (size_t k = 1; k < sq.size(); k++) {
        int d = ModpRing::degree(sq[k]);
        if (d <= 0)
            continue;
        if (k == 1) {
            s.simple_degree = d;
            s.simple_factor_degrees = R.factor_degrees(sq[k]);
        } else if (k == 2) {
            s.square_degree = d;
            s.square_factor_degrees = R.factor_degrees(sq[k]);
        } else {
            s.report = "shape unverifiable from polynomial: factor of multiplicity " + std::to_string(k) +
                       " (index divisible by N)";
            return s;
        }
    }
    if (s.simple_degree == s.exp_a && s.square_degree == s.exp_b) {
        s.verified = true;
    } else {
        std::ostringstream os;
        os << "shape unverifiable from polynomial: squarefree part degree " << s.simple_degree
           << ", square part degree " << s.square_degree;
        s.report = os.str();
    }
    return s;
}

Rat too_real_bound(int r1, int ck2_rank)
{
    const int g = 3, f = 3;
    Rat b = Rat(ck2_rank + (g - f) * (g + 1)) + Rat((r1 - 1) * (r1 - 1), 4);
    b.canonicalize();
    return b;
}

ResolventField make_resolvent_field(FavorableRecord const& rec)
{
    ResolventField K;
    K.parent = rec;
    K.resolvent = pair_resolvent_polynomial(rec.h);
    K.r1_K = count_real_roots(K.resolvent.minpoly);
    K.two_adic = two_adic_certificate(rec.h, K.resolvent.minpoly);
    K.shape = shape_at_N(K.resolvent.minpoly, rec.N, rec.disc);
    return K;
}

}  // namespace favor7
