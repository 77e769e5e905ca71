#include "favor7/favorable.hpp"
#include "favor7/padic.hpp"

#include <sstream>
#include <thread>

namespace favor7 {

IntPoly curve_polynomial(CurveCoeffs const& g)
{
    std::vector<Int> c(8);
    c[7] = 4;
    for (int i = 0; i < 7; i++)
        c[6 - i] = 4 * Int(g[i]);
    c[0] += 1;
    return IntPoly(c);
}

std::optional<CurveCoeffs> curve_coefficients(IntPoly const& h)
{
    if (h.degree() != 7 || h.lc() != 4)
        return std::nullopt;
    CurveCoeffs g;
    for (int i = 0; i < 7; i++) {
        Int c = h.c[6 - i];
        if (i == 6)
            c -= 1;
        if (c % 4 != 0 || !c.fits_slong_p())
            return std::nullopt;
        g[i] = Int(c / 4).get_si();
    }
    return g;
}

char const* rejection_name(Rejection r)
{
    switch (r) {
    case Rejection::none:
        return "none";
    case Rejection::degree:
        return "degree";
    case Rejection::not_squarefree:
        return "not-squarefree";
    case Rejection::newton:
        return "newton";
    case Rejection::disc_shape:
        return "disc-shape";
    case Rejection::up_to_index:
        return "favorable-up-to-index";
    case Rejection::not_prime:
        return "not-prime";
    case Rejection::n_star_mod4:
        return "n-star-mod-4";
    }
    return "?";
}

static FavorableResult reject(Rejection r, std::string d)
{
    FavorableResult res;
    res.reason = r;
    res.detail = std::move(d);
    return res;
}

FavorableResult verify_favorable_heptic(IntPoly const& h)
{
    if (h.degree() != 7)
        return reject(Rejection::degree, "degree " + std::to_string(h.degree()) + ", expected 7");
    FavorableRecord rec;
    rec.h = h;
    rec.g = curve_coefficients(h);
    rec.disc = discriminant(h);
    if (rec.disc == 0)
        return reject(Rejection::not_squarefree, "discriminant vanishes");

    NewtonPolygon np = newton_polygon(h, Int(2));
    if (!np.single_slope() || np.segments[0].ramification() != 7)
        return reject(Rejection::newton, "Newton polygon at 2: " + np.to_string());
    rec.newton_ok = true;

    Int ad = abs(rec.disc);
    long v2 = valuation(ad, Int(2));
    Int odd = ad;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), ad.get_mpz_t(), (unsigned long)v2);
    long want = rec.g ? 12 : 6;
    if (v2 != want) {
        if (!rec.g && v2 > 6 && v2 % 2 == 0)
            return reject(Rejection::up_to_index,
                          "ord_2(disc) = " + std::to_string(v2) + "; favorable up to index at most");
        return reject(Rejection::disc_shape,
                      "ord_2(disc) = " + std::to_string(v2) + ", expected " + std::to_string(want));
    }
    rec.disc_shape_ok = true;
    if (odd < 3 || !is_prime(odd))
        return reject(Rejection::not_prime, "odd part " + odd.get_str() + " of the discriminant is not prime");
    rec.prime_ok = true;
    rec.N = odd;
    rec.sign = sgn(rec.disc);
    Int ns = rec.n_star();
    Int m8 = ns % 8;
    if (m8 < 0)
        m8 += 8;
    if (m8 != 1 && m8 != 5)
        return reject(Rejection::n_star_mod4, "N* = " + ns.get_str() + " is not 1 mod 4");
    rec.frobenius_parity = m8 == 5 ? 1 : 0;
    rec.r1 = count_real_roots(h);
    FavorableResult res;
    res.record = rec;
    return res;
}

long CoeffBox::size() const
{
    long n = 1;
    for (auto const& [lo, hi] : range) {
        if (hi < lo)
            return 0;
        n *= hi - lo + 1;
    }
    return n;
}

CurveCoeffs CoeffBox::at(long idx) const
{
    CurveCoeffs g;
    for (int i = 6; i >= 0; i--) {
        long w = range[i].second - range[i].first + 1;
        g[i] = range[i].first + idx % w;
        idx /= w;
    }
    return g;
}

CoeffBox parse_box(std::string const& s)
{
    CoeffBox b;
    for (auto& r : b.range)
        r = {0, 0};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (item.size() < 4 || item[0] != 'a' || eq != 2 || item[1] < '0' || item[1] > '6')
            throw std::invalid_argument("bad box item '" + item + "'");
        int k = item[1] - '0';
        std::string v = item.substr(3);
        auto colon = v.find(':');
        try {
            if (colon == std::string::npos) {
                long x = std::stol(v);
                b.range[k] = {x, x};
            } else {
                b.range[k] = {std::stol(v.substr(0, colon)), std::stol(v.substr(colon + 1))};
            }
        } catch (std::logic_error const&) {
            throw std::invalid_argument("bad box item '" + item + "'");
        }
        if (b.range[k].second < b.range[k].first)
            throw std::invalid_argument("empty range in '" + item + "'");
    }
    return b;
}

std::vector<FavorableRecord> search_curves(CoeffBox const& box, std::optional<Int> const& n_max, int threads)
{
    long total = box.size();
    if (threads < 1)
        threads = 1;
    if (total < threads)
        threads = total > 0 ? (int)total : 1;
    std::vector<std::vector<FavorableRecord>> part(threads);
    auto work = [&](int t) {
        long lo = total * t / threads, hi = total * (t + 1) / threads;
        for (long i = lo; i < hi; i++) {
            auto res = verify_favorable_heptic(curve_polynomial(box.at(i)));
            if (!res.accepted())
                continue;
            if (n_max && res.record->N > *n_max)
                continue;
            part[t].push_back(std::move(*res.record));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; t++)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    std::vector<FavorableRecord> out;
    for (auto& p : part)
        for (auto& r : p)
            out.push_back(std::move(r));
    return out;
}

}  // namespace favor7
