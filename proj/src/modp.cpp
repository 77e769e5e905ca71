#include "favor7/modp.hpp"

#include <algorithm>

namespace favor7 {

using u128 = unsigned __int128;

ModpRing::ModpRing(uint64_t p) : p_(p)
{
    if (p < 2 || p >> 63)
        throw arith_error("modulus out of range");
}

uint64_t ModpRing::add(uint64_t a, uint64_t b) const
{
    uint64_t r = a + b;
    return r >= p_ ? r - p_ : r;
}

uint64_t ModpRing::sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

uint64_t ModpRing::mul(uint64_t a, uint64_t b) const { return (uint64_t)((u128)a * b % p_); }

uint64_t ModpRing::pow(uint64_t a, uint64_t e) const
{
    uint64_t r = 1 % p_;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
    }
    return r;
}

uint64_t ModpRing::inv(uint64_t a) const
{
    if (a % p_ == 0)
        throw arith_error("inverse of zero mod p");
    return pow(a, p_ - 2);
}

void ModpRing::trim(poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

ModpRing::poly ModpRing::reduce(IntPoly const& f) const
{
    poly r;
    Int m(std::to_string(p_));
    for (auto const& a : f.c) {
        Int t;
        mpz_fdiv_r(t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        r.push_back(std::stoull(t.get_str()));
    }
    trim(r);
    return r;
}

ModpRing::poly ModpRing::add(poly const& a, poly const& b) const
{
    poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++)
        r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

ModpRing::poly ModpRing::sub(poly const& a, poly const& b) const
{
    poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

ModpRing::poly ModpRing::mul(poly const& a, poly const& b) const
{
    if (a.empty() || b.empty())
        return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) {
            acc[i + j] += (u128)a[i] * b[j];
            if (acc[i + j] >> 126)
                acc[i + j] %= p_;
        }
    poly r(acc.size());
    for (size_t i = 0; i < acc.size(); i++)
        r[i] = (uint64_t)(acc[i] % p_);
    trim(r);
    return r;
}

ModpRing::poly ModpRing::derivative(poly const& a) const
{
    poly r;
    for (size_t i = 1; i < a.size(); i++)
        r.push_back(mul(a[i], i % p_));
    trim(r);
    return r;
}

ModpRing::poly ModpRing::make_monic(poly const& a) const
{
    if (a.empty())
        return a;
    uint64_t l = inv(a.back());
    poly r = a;
    for (auto& x : r)
        x = mul(x, l);
    return r;
}

std::pair<ModpRing::poly, ModpRing::poly> ModpRing::divrem(poly const& a, poly const& b) const
{
    if (b.empty())
        throw arith_error("division by zero polynomial mod p");
    poly r = a;
    trim(r);
    int db = degree(b);
    if (degree(r) < db)
        return {{}, r};
    uint64_t li = inv(b.back());
    poly q(degree(r) - db + 1, 0);
    for (int d = degree(r); d >= db; d--) {
        if (r[d] == 0)
            continue;
        uint64_t t = mul(r[d], li);
        q[d - db] = t;
        for (int i = 0; i <= db; i++)
            r[d - db + i] = sub(r[d - db + i], mul(t, b[i]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

ModpRing::poly ModpRing::gcd(poly a, poly b) const
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

ModpRing::poly ModpRing::mulmod(poly const& a, poly const& b, poly const& m) const
{
    return rem(mul(a, b), m);
}

ModpRing::poly ModpRing::powmod(poly const& base, Int const& e, poly const& m) const
{
    poly r = rem(poly{1}, m), b = rem(base, m);
    size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = nbits; i-- > 0;) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mulmod(r, b, m);
    }
    return r;
}

std::vector<ModpRing::poly> ModpRing::squarefree_decomposition(poly const& f0) const
{
    poly f = make_monic(f0);
    if ((uint64_t)degree(f) >= p_)
        throw arith_error("squarefree decomposition needs deg f < p");
    std::vector<poly> out(1);
    poly fp = derivative(f);
    poly a = gcd(f, fp);
    poly b = divrem(f, a).first;
    poly c = divrem(fp, a).first;
    poly d = sub(c, derivative(b));
    while (degree(b) > 0) {
        poly g = gcd(b, d);
        out.push_back(g);
        b = divrem(b, g).first;
        c = divrem(d, g).first;
        d = sub(c, derivative(b));
    }
    return out;
}

std::vector<std::pair<int, ModpRing::poly>> ModpRing::distinct_degree(poly const& f0) const
{
    std::vector<std::pair<int, poly>> out;
    poly f = make_monic(f0);
    poly xpoly{0, 1};
    poly h = rem(xpoly, f);
    Int pe(std::to_string(p_));
    for (int d = 1; 2 * d <= degree(f); d++) {
        h = powmod(h, pe, f);
        poly g = gcd(f, sub(h, xpoly));
        if (degree(g) > 0) {
            out.emplace_back(d, g);
            f = divrem(f, g).first;
            h = rem(h, f);
        }
    }
    if (degree(f) > 0)
        out.emplace_back(degree(f), f);
    return out;
}

std::vector<int> ModpRing::factor_degrees(poly const& f) const
{
    std::vector<int> degs;
    for (auto const& [d, g] : distinct_degree(f))
        for (int k = 0; k < degree(g) / d; k++)
            degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool ModpRing::is_irreducible(poly const& f) const
{
    if (degree(f) <= 0)
        return false;
    if (degree(f) == 1)
        return true;
    poly g = make_monic(f);
    if (degree(gcd(g, derivative(g))) > 0)
        return false;
    auto degs = factor_degrees(g);
    return degs.size() == 1;
}

}  // namespace favor7
