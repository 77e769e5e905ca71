#include "favor7/witt.hpp"

namespace favor7 {

static constexpr int two_val = 7; /* pi-adic valuation of 2 */

Covector witt_add(Covector const& u, Covector const& v)
{
    if (u.c.empty() && v.c.empty())
        return {};
    LocalModel const& M = u.c.empty() ? v.c[0].model() : u.c[0].model();
    int prec = M.precision();
    LocalNumber zero = LocalNumber::zero(M, prec);
    auto pw = [](LocalNumber const& x, unsigned long e) { return x.pow(e); };
    auto half = [](LocalNumber const& x) { return x.half(); };
    Covector w;
    w.c = witt_add_generic(u.c, v.c, zero, 2, pw, half);
    for (auto const& x : w.c)
        if (x.abs_prec() < two_val)
            throw precision_error("raise precision");
    return w;
}

bool covector_equal(Covector const& a, Covector const& b)
{
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t j = 0; j < n; j++) {
        bool za = j >= a.c.size(), zb = j >= b.c.size();
        if (za && zb)
            continue;
        LocalModel const& M = za ? b.c[j].model() : a.c[j].model();
        LocalNumber x = za ? LocalNumber::zero(M, M.precision()) : a.c[j];
        LocalNumber y = zb ? LocalNumber::zero(M, M.precision()) : b.c[j];
        if (!x.equal_mod(y, two_val))
            return false;
    }
    return true;
}

LocalNumber hasse_witt(Covector const& u)
{
    if (u.c.empty())
        throw std::invalid_argument("empty covector");
    LocalNumber s = u.c[0];
    for (size_t j = 1; j < u.c.size(); j++) {
        LocalNumber t = u.c[j].pow(1ul << j);
        for (size_t i = 0; i < j; i++)
            t = t.half();
        s = s + t;
    }
    return s;
}

}  // namespace favor7
