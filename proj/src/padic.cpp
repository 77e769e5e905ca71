#include "favor7/padic.hpp"

#include <sstream>

namespace favor7 {

std::string NewtonPolygon::to_string() const
{
    std::ostringstream os;
    for (size_t i = 0; i < segments.size(); i++) {
        if (i)
            os << ", ";
        os << "slope " << segments[i].slope.get_str() << " x" << segments[i].length;
    }
    return os.str();
}

static NewtonPolygon hull(std::vector<std::pair<int, long>> const& pts)
{
    NewtonPolygon np;
    if (pts.empty())
        throw padic_error("zero polynomial");
    /* lower hull, points sorted by abscissa */
    std::vector<std::pair<int, long>> h;
    for (auto const& P : pts) {
        while (h.size() >= 2) {
            auto const& A = h[h.size() - 2];
            auto const& B = h.back();
            /* drop B if it lies on or above segment A-P */
            __int128 lhs = (__int128)(B.second - A.second) * (P.first - A.first);
            __int128 rhs = (__int128)(P.second - A.second) * (B.first - A.first);
            if (lhs >= rhs)
                h.pop_back();
            else
                break;
        }
        h.push_back(P);
    }
    np.vertices = h;
    for (size_t i = 0; i + 1 < h.size(); i++) {
        NewtonSegment s;
        s.start = h[i].first;
        s.height = h[i].second;
        s.length = h[i + 1].first - h[i].first;
        s.slope = Rat(h[i + 1].second - h[i].second, s.length);
        s.slope.canonicalize();
        np.segments.push_back(s);
    }
    return np;
}

NewtonPolygon newton_polygon(IntPoly const& f, Int const& prime)
{
    return newton_polygon(to_rat(f), prime);
}

NewtonPolygon newton_polygon(RatPoly const& f, Int const& prime)
{
    if (prime < 2)
        throw padic_error("prime must be >= 2");
    std::vector<std::pair<int, long>> pts;
    for (int i = 0; i <= f.degree(); i++)
        if (f.c[i] != 0)
            pts.emplace_back(i, valuation(f.c[i], prime));
    return hull(pts);
}

std::vector<uint64_t> residual_polynomial(RatPoly const& f, Int const& prime, NewtonSegment const& seg)
{
    long e = seg.ramification();
    long h = seg.slope.get_num().get_si();
    int d = seg.residual_degree();
    std::vector<uint64_t> out(d + 1, 0);
    for (int k = 0; k <= d; k++) {
        int i = seg.start + (int)(k * e);
        Rat a = f.coeff(i);
        if (a == 0)
            continue;
        long target = seg.height + k * h;
        if (valuation(a, prime) != target)
            continue;
        /* a / prime^target is a unit; reduce it */
        Rat u = a;
        Int pp;
        mpz_pow_ui(pp.get_mpz_t(), prime.get_mpz_t(), (unsigned long)std::labs(target));
        if (target > 0)
            u /= pp;
        else
            u *= pp;
        Int num = u.get_num(), den = u.get_den(), inv, r;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
        r = num * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), prime.get_mpz_t());
        out[k] = r.get_ui();
    }
    return out;
}

FracRing::FracRing(Rat o) : ord_d(std::move(o))
{
    if (ord_d >= 1)
        throw padic_error("modulus element must have ord(d) < 1");
}

FracElt FracElt::of(FracRing const& R, Rat const& o)
{
    FracElt x{R};
    if (o >= R.modulus_ord()) {
        x.zero = true;
        x.ord = R.modulus_ord();
    } else {
        x.ord = o;
    }
    return x;
}

FracElt FracElt::zero_class(FracRing const& R)
{
    FracElt x{R};
    x.zero = true;
    x.ord = R.modulus_ord();
    return x;
}

std::string FracElt::to_string() const
{
    if (zero)
        return "0 in R_d, ord(d) = " + ring.ord_d.get_str();
    return std::string(exact ? "ord " : "ord >= ") + ord.get_str() + " in R_d, ord(d) = " + ring.ord_d.get_str();
}

FracElt fracring_pow_q(FracElt const& x, unsigned long q)
{
    if (x.zero)
        return x;
    if (Rat(1) + Rat((long)q - 1) * x.ord < 0)
        throw padic_error("power not well-defined in R_d (p x^(q-1) not integral)");
    FracElt r = FracElt::of(x.ring, Rat((long)q) * x.ord);
    r.exact = r.zero || x.exact;
    return r;
}

FracElt fracring_add(FracElt const& x, FracElt const& y)
{
    if (x.ring.ord_d != y.ring.ord_d)
        throw padic_error("elements live in different rings R_d");
    if (x.zero)
        return y;
    if (y.zero)
        return x;
    if (x.exact && y.exact && x.ord != y.ord)
        return FracElt::of(x.ring, x.ord < y.ord ? x.ord : y.ord);
    FracElt r = FracElt::of(x.ring, x.ord < y.ord ? x.ord : y.ord);
    r.exact = r.zero;
    return r;
}

FracElt fracring_add_freshman(FracElt const& x, FracElt const& y, unsigned long q)
{
    if (x.ring.ord_d != y.ring.ord_d)
        throw padic_error("elements live in different rings R_d");
    for (auto const* z : {&x, &y}) {
        if (z->zero)
            continue;
        if (Rat(1) + Rat((long)q - 1) * z->ord < 0)
            throw padic_error("freshman rule: p x^(q-1) not integral (rule B2)");
        if (z->ring.ord_d + Rat((long)q) * z->ord < 0)
            throw padic_error("freshman rule: d x^q not integral (rule B3)");
    }
    /* cross terms of (x+y)^q have ord >= 1 + q min(ord x, ord y), which
     * is >= ord(p/d) by the B3 condition */
    Rat m = x.zero ? y.ord : (y.zero ? x.ord : (x.ord < y.ord ? x.ord : y.ord));
    if (!x.zero || !y.zero)
        if (Rat(1) + Rat((long)q) * m < x.ring.modulus_ord())
            throw padic_error("internal: cross terms survive in R_d");
    return fracring_add(fracring_pow_q(x, q), fracring_pow_q(y, q));
}

FracElt fracring_project(FracElt const& x, FracRing const& target)
{
    if (x.ring.ord_d > target.ord_d)
        throw padic_error("projection R_d -> R_d' needs ord(d) <= ord(d')");
    if (x.zero)
        return FracElt::zero_class(target);
    FracElt r = FracElt::of(target, x.ord);
    r.exact = r.zero || x.exact;
    return r;
}

AsData as_conductor(long vF_C, long eF, unsigned long p, unsigned n)
{
    if (vF_C >= 0)
        throw padic_error("AS formula needs v_F(C) < 0");
    unsigned long q = 1;
    for (unsigned i = 0; i < n; i++)
        q *= p;
    /* ord_p(C) = vF_C / eF > q/(1-q) */
    if (!((__int128)vF_C * (long)(q - 1) > -(__int128)q * eF))
        throw padic_error("AS formula needs ord_p(C) > q/(1-q)");
    long k = -vF_C;
    int m = 0;
    while (k % (long)p == 0) {
        k /= (long)p;
        m++;
    }
    if (m >= (int)n)
        throw padic_error("AS formula needs m < n");
    return AsData{m, k, k + 1};
}

}  // namespace favor7
