#include "favor7/local_model.hpp"

#include <cstdlib>
#include <sstream>

namespace favor7 {

int default_local_precision()
{
    if (char const* s = std::getenv("FAVOR7_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 4000)
            return (int)v;
    }
    return 28;
}

/* F_8 = F_2[z]/(z^3+z+1), elements as 3-bit codes */
static unsigned f8_mul(unsigned a, unsigned b)
{
    unsigned r = 0;
    for (int i = 0; i < 3; i++)
        if (b >> i & 1)
            r ^= a << i;
    for (int d = 4; d >= 3; d--)
        if (r >> d & 1)
            r ^= (0xbu << (d - 3)); /* z^3 = z + 1 */
    return r & 7;
}

LocalModel::LocalModel(int precision) : N_(precision)
{
    if (precision < 1)
        throw precision_error("precision must be positive");
    m_ = (N_ + 6) / 7;
    if (m_ > 64)
        throw precision_error("precision too large for the model");
    mask_ = m_ == 64 ? ~0ull : ((1ull << m_) - 1);

    /* A = (Z/2^m)[x]/(x^3+x+1), zeta = x^(8^m) */
    W xmod{0, 0, 0};
    cz_ = W{1, 1, 0}; /* x^3 + x + 1 while bootstrapping */
    xmod = W{0, 1, 0};
    W z = xmod;
    for (int i = 0; i < 3 * m_; i++)
        z = wmul(z, z);
    W z2 = wmul(z, z), z3 = wmul(z2, z), z4 = wmul(z2, z2);
    W z5 = wmul(z4, z), z6 = wmul(z3, z3);
    W e1 = wadd(wadd(z, z2), z4);
    W e2 = wadd(wadd(z3, z5), z6);
    if (e1[1] || e1[2] || e2[1] || e2[2])
        throw precision_error("internal: Teichmuller symmetric functions not constant");
    /* c(X) = X^3 - e1 X^2 + e2 X - 1 */
    cz_ = W{reduce((uint64_t)-1), e2[0], reduce((uint64_t)0 - e1[0])};
    zeta2_ = W{0, 0, 1};
    W zz{0, 1, 0};
    zeta4_ = wmul(wmul(zz, zz), wmul(zz, zz));
}

LocalModel::W LocalModel::wadd(W const& x, W const& y) const
{
    return W{reduce(x[0] + y[0]), reduce(x[1] + y[1]), reduce(x[2] + y[2])};
}

LocalModel::W LocalModel::wsub(W const& x, W const& y) const
{
    return W{reduce(x[0] - y[0]), reduce(x[1] - y[1]), reduce(x[2] - y[2])};
}

LocalModel::W LocalModel::wmul(W const& x, W const& y) const
{
    uint64_t p[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            p[i + j] += x[i] * y[j];
    /* X^3 = -(c2 X^2 + c1 X + c0) */
    for (int d = 4; d >= 3; d--) {
        uint64_t t = p[d];
        p[d - 1] -= cz_[2] * t;
        p[d - 2] -= cz_[1] * t;
        p[d - 3] -= cz_[0] * t;
    }
    return W{reduce(p[0]), reduce(p[1]), reduce(p[2])};
}

LocalModel::W LocalModel::wfrob(W const& x) const
{
    W r{x[0], 0, 0};
    for (int k = 0; k < 3; k++) {
        r[k] = reduce(r[k] + x[1] * zeta2_[k] + x[2] * zeta4_[k]);
    }
    r[0] = reduce(r[0]);
    return r;
}

int LocalModel::wval(W const& x) const
{
    int v = m_;
    for (auto c : x)
        if (c)
            v = std::min(v, __builtin_ctzll(c));
    return v;
}

LocalModel::Elt LocalModel::one() const { return from_int(1); }

LocalModel::Elt LocalModel::pi() const
{
    Elt e;
    e.a[1] = W{reduce(1), 0, 0};
    return e;
}

LocalModel::Elt LocalModel::zeta() const
{
    Elt e;
    e.a[0] = W{0, reduce(1), 0};
    return e;
}

LocalModel::Elt LocalModel::from_int(long v) const
{
    Elt e;
    e.a[0] = W{reduce((uint64_t)v), 0, 0};
    return e;
}

LocalModel::Elt LocalModel::from_w(W const& w) const
{
    Elt e;
    e.a[0] = W{reduce(w[0]), reduce(w[1]), reduce(w[2])};
    return e;
}

LocalModel::Elt LocalModel::teichmuller(unsigned code) const
{
    code &= 7;
    if (code == 0)
        return zero();
    unsigned zk = 1;
    Elt r = one(), z = zeta();
    for (int k = 0; k < 7; k++) {
        if (zk == code)
            return r;
        zk = f8_mul(zk, 2);
        r = mul(r, z);
    }
    throw precision_error("internal: F_8 code not found");
}

LocalModel::Elt LocalModel::add(Elt const& x, Elt const& y) const
{
    Elt r;
    for (int j = 0; j < 7; j++)
        r.a[j] = wadd(x.a[j], y.a[j]);
    return r;
}

LocalModel::Elt LocalModel::sub(Elt const& x, Elt const& y) const
{
    Elt r;
    for (int j = 0; j < 7; j++)
        r.a[j] = wsub(x.a[j], y.a[j]);
    return r;
}

LocalModel::Elt LocalModel::neg(Elt const& x) const { return sub(zero(), x); }

LocalModel::Elt LocalModel::mul(Elt const& x, Elt const& y) const
{
    Elt r;
    for (int i = 0; i < 7; i++) {
        if (!(x.a[i][0] | x.a[i][1] | x.a[i][2]))
            continue;
        for (int j = 0; j < 7; j++) {
            W t = wmul(x.a[i], y.a[j]);
            int k = i + j;
            if (k >= 7) {
                k -= 7;
                t = wadd(t, t); /* pi^7 = 2 */
            }
            r.a[k] = wadd(r.a[k], t);
        }
    }
    return r;
}

LocalModel::Elt LocalModel::pow(Elt const& x, unsigned long e) const
{
    Elt r = one(), b = x;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mul(r, b);
        if (e > 1)
            b = mul(b, b);
    }
    return r;
}

LocalModel::Elt LocalModel::mul_pi(Elt const& x, int k) const
{
    Elt r = x;
    for (int s = 0; s < k; s++) {
        Elt t;
        t.a[0] = wadd(r.a[6], r.a[6]);
        for (int j = 1; j < 7; j++)
            t.a[j] = r.a[j - 1];
        r = t;
    }
    return r;
}

LocalModel::Elt LocalModel::div_pi(Elt const& x, int k) const
{
    Elt r = x;
    for (int s = 0; s < k; s++) {
        if ((r.a[0][0] | r.a[0][1] | r.a[0][2]) & 1)
            throw precision_error("internal: division by pi of a unit");
        Elt t;
        for (int j = 0; j < 6; j++)
            t.a[j] = r.a[j + 1];
        t.a[6] = W{r.a[0][0] >> 1, r.a[0][1] >> 1, r.a[0][2] >> 1};
        r = t;
    }
    return r;
}

LocalModel::Elt LocalModel::inverse(Elt const& u) const
{
    unsigned r = residue(u);
    if (r == 0)
        throw precision_error("inverse of a non-unit");
    unsigned s = 1;
    while (f8_mul(r, s) != 1)
        s++;
    Elt x = teichmuller(s);
    Elt two = from_int(2);
    for (int prec = 1; prec < 7 * m_; prec *= 2)
        x = mul(x, sub(two, mul(u, x)));
    return x;
}

int LocalModel::val(Elt const& x) const
{
    int v = N_;
    for (int j = 0; j < 7; j++) {
        int w = wval(x.a[j]);
        if (w < m_)
            v = std::min(v, 7 * w + j);
    }
    return v;
}

bool LocalModel::eq_mod(Elt const& x, Elt const& y, int t) const
{
    if (t > N_)
        throw precision_error("raise precision: comparison modulo pi^" + std::to_string(t));
    return val(sub(x, y)) >= t;
}

unsigned LocalModel::residue(Elt const& x) const
{
    return (unsigned)((x.a[0][0] & 1) | (x.a[0][1] & 1) << 1 | (x.a[0][2] & 1) << 2);
}

LocalModel::Elt LocalModel::sigma(Elt const& x) const
{
    Elt r;
    W zj{1, 0, 0};
    W z{0, 1, 0};
    for (int j = 0; j < 7; j++) {
        r.a[j] = wmul(x.a[j], zj);
        zj = wmul(zj, z);
    }
    return r;
}

LocalModel::Elt LocalModel::tau(Elt const& x) const
{
    Elt r;
    for (int j = 0; j < 7; j++)
        r.a[j] = wfrob(x.a[j]);
    return r;
}

LocalModel::Elt LocalModel::random(std::mt19937_64& rng, int min_val) const
{
    Elt r;
    for (auto& w : r.a)
        for (auto& c : w)
            c = reduce(rng());
    return mul_pi(r, min_val);
}

std::string LocalModel::to_string(Elt const& x) const
{
    std::ostringstream os;
    os << "[";
    for (int j = 0; j < 7; j++) {
        if (j)
            os << "; ";
        os << x.a[j][0] << "," << x.a[j][1] << "," << x.a[j][2];
    }
    os << "]";
    return os.str();
}

/* ------------------------------------------------------------------ */

LocalNumber::LocalNumber(LocalModel const& M, LocalModel::Elt const& y, int shift) : M_(&M)
{
    zero_ = false;
    shift_ = shift;
    abs_ = shift + M.precision();
    y_ = y;
    normalize();
}

LocalNumber LocalNumber::zero(LocalModel const& M, int abs_prec)
{
    LocalNumber r(M);
    r.zero_ = true;
    r.abs_ = abs_prec;
    r.shift_ = abs_prec;
    return r;
}

void LocalNumber::normalize()
{
    if (zero_)
        return;
    int rel = abs_ - shift_;
    int v = M_->val(y_);
    if (v >= rel) {
        zero_ = true;
        shift_ = abs_;
        y_ = LocalModel::Elt{};
        return;
    }
    if (v > 0) {
        y_ = M_->div_pi(y_, v);
        shift_ += v;
    }
}

LocalNumber LocalNumber::operator+(LocalNumber const& b) const
{
    int a_abs = std::min(abs_, b.abs_);
    if (zero_ && b.zero_)
        return zero(*M_, a_abs);
    int s;
    if (zero_)
        s = b.shift_;
    else if (b.zero_)
        s = shift_;
    else
        s = std::min(shift_, b.shift_);
    if (s >= a_abs)
        return zero(*M_, a_abs);
    LocalModel::Elt y = M_->zero();
    if (!zero_)
        y = M_->add(y, M_->mul_pi(y_, shift_ - s));
    if (!b.zero_)
        y = M_->add(y, M_->mul_pi(b.y_, b.shift_ - s));
    LocalNumber r(*M_);
    r.zero_ = false;
    r.shift_ = s;
    r.abs_ = std::min(a_abs, s + M_->precision());
    r.y_ = y;
    r.normalize();
    return r;
}

LocalNumber LocalNumber::operator-() const
{
    LocalNumber r = *this;
    if (!zero_)
        r.y_ = M_->neg(y_);
    return r;
}

LocalNumber LocalNumber::operator-(LocalNumber const& b) const { return *this + (-b); }

LocalNumber LocalNumber::operator*(LocalNumber const& b) const
{
    if (zero_ || b.zero_) {
        int p = std::min(abs_ + b.val(), b.abs_ + val());
        return zero(*M_, p);
    }
    LocalNumber r(*M_);
    r.zero_ = false;
    r.shift_ = shift_ + b.shift_;
    r.abs_ = r.shift_ + std::min(abs_ - shift_, b.abs_ - b.shift_);
    r.y_ = M_->mul(y_, b.y_);
    r.normalize();
    return r;
}

LocalNumber LocalNumber::pow(unsigned long e) const
{
    LocalNumber r(*M_, M_->one());
    LocalNumber b = *this;
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * b;
        if (e > 1)
            b = b * b;
    }
    return r;
}

LocalNumber LocalNumber::half() const
{
    LocalNumber r = *this;
    r.shift_ -= 7;
    r.abs_ -= 7;
    return r;
}

LocalNumber LocalNumber::divide(LocalNumber const& b) const
{
    if (b.zero_)
        throw precision_error("raise precision: division by an element indistinguishable from zero");
    if (zero_)
        return zero(*M_, abs_ - b.shift_);
    LocalNumber r(*M_);
    r.zero_ = false;
    r.shift_ = shift_ - b.shift_;
    r.abs_ = r.shift_ + std::min(abs_ - shift_, b.abs_ - b.shift_);
    r.y_ = M_->mul(y_, M_->inverse(b.y_));
    r.normalize();
    return r;
}

LocalModel::Elt LocalNumber::reduce_mod(int t) const
{
    if (abs_ < t)
        throw precision_error("raise precision: value known modulo pi^" + std::to_string(abs_) + ", need pi^" +
                              std::to_string(t));
    if (zero_)
        return M_->zero();
    if (shift_ < 0)
        throw precision_error("value is not integral");
    return M_->mul_pi(y_, shift_);
}

bool LocalNumber::equal_mod(LocalNumber const& b, int t) const
{
    LocalNumber d = *this - b;
    if (d.abs_ < t)
        throw precision_error("raise precision: difference known modulo pi^" + std::to_string(d.abs_) +
                              ", need pi^" + std::to_string(t));
    return d.zero_ || d.shift_ >= t;
}

}  // namespace favor7
