#ifndef FAVOR7_WITT_HPP_
#define FAVOR7_WITT_HPP_

#include "favor7/local_model.hpp"

#include <optional>
#include <vector>

namespace favor7 {

/* Phi_q(x, y) = ((x + y)^q - x^q - y^q) / q, q = p^e; div_p divides by p */
template <class T, class Pow, class DivP>
T witt_phi(T const& x, T const& y, unsigned p, unsigned e, Pow pow, DivP div_p)
{
    unsigned long q = 1;
    for (unsigned i = 0; i < e; i++)
        q *= p;
    T r = pow(x + y, q) - pow(x, q) - pow(y, q);
    for (unsigned i = 0; i < e; i++)
        r = div_p(r);
    return r;
}

/* (0, u4, u3, u2, u1, u0) + (0, v2, v1, v0): components listed from index
 * 0 upwards, u[j] = u_j.  Returns w with w[j] = u[j] for j >= 3,
 * w2 = u2 + v2 and w1, w0 from the covector addition law. */
template <class T, class Pow, class DivP>
std::vector<T> witt_add_generic(std::vector<T> u, std::vector<T> v, T const& zero, unsigned p, Pow pow, DivP div_p)
{
    if (v.size() > u.size())
        std::swap(u, v);
    if (v.size() > 3)
        throw std::invalid_argument("covector addition needs one summand of length <= 3");
    while (u.size() < 3)
        u.push_back(zero);
    while (v.size() < 3)
        v.push_back(zero);
    std::vector<T> w(u);
    T phi1 = witt_phi(u[2], v[2], p, 1, pow, div_p);
    T phi2 = witt_phi(u[2], v[2], p, 2, pow, div_p);
    w[2] = u[2] + v[2];
    w[1] = u[1] + v[1] - phi1;
    w[0] = u[0] + v[0] + div_p(pow(u[1], p) + pow(v[1], p)) - phi2 - div_p(pow(w[1], p));
    return w;
}

/* covectors over the truncated 2-adic model, entries taken modulo 2 */
struct Covector {
    std::vector<LocalNumber> c; /* c[j] is the entry of index -j */
};

/* throws precision_error("raise precision") when an output entry is not
 * determined modulo 2 */
Covector witt_add(Covector const& u, Covector const& v);
bool covector_equal(Covector const& a, Covector const& b);

/* Hasse-Witt exponential sum_j 2^-j c_j^(2^j) */
LocalNumber hasse_witt(Covector const& u);

}  // namespace favor7

#endif
