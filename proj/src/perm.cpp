#include "favor7/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace favor7 {

Perm::Perm(int n) : p_(n)
{
    std::iota(p_.begin(), p_.end(), 0);
}

Perm::Perm(std::vector<int> img) : p_(std::move(img))
{
    std::vector<char> seen(p_.size(), 0);
    for (int x : p_) {
        if (x < 0 || x >= (int)p_.size() || seen[x])
            throw perm_error("not a permutation");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(int n, std::vector<std::vector<int>> const& cycles)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    for (auto const& c : cycles) {
        for (size_t i = 0; i < c.size(); i++) {
            int a = c[i] - 1, b = c[(i + 1) % c.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n || used[a])
                throw perm_error("bad cycle notation");
            used[a] = 1;
            img[a] = b;
        }
    }
    return Perm(img);
}

Perm Perm::parse_cycles(int n, std::string const& s)
{
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') {
            i++;
            continue;
        }
        if (s[i] != '(')
            throw perm_error("bad cycle notation: " + s);
        size_t j = s.find(')', i);
        if (j == std::string::npos)
            throw perm_error("bad cycle notation: " + s);
        std::string body = s.substr(i + 1, j - i - 1);
        std::vector<int> c;
        if (body.find(',') != std::string::npos) {
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ','))
                c.push_back(std::stoi(tok));
        } else {
            for (char ch : body)
                if (ch != ' ') {
                    if (ch < '0' || ch > '9')
                        throw perm_error("bad cycle notation: " + s);
                    c.push_back(ch - '0');
                }
        }
        cycles.push_back(c);
        i = j + 1;
    }
    return from_cycles(n, cycles);
}

Perm Perm::operator*(Perm const& b) const
{
    if (b.degree() != degree())
        throw perm_error("degree mismatch");
    std::vector<int> r(degree());
    for (int i = 0; i < degree(); i++)
        r[i] = p_[b.p_[i]];
    Perm out;
    out.p_ = std::move(r);
    return out;
}

Perm Perm::inverse() const
{
    std::vector<int> r(degree());
    for (int i = 0; i < degree(); i++)
        r[p_[i]] = i;
    Perm out;
    out.p_ = std::move(r);
    return out;
}

Perm Perm::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Perm r(degree()), b = *this;
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * b;
        if (e > 1)
            b = b * b;
    }
    return r;
}

bool Perm::is_identity() const
{
    for (int i = 0; i < degree(); i++)
        if (p_[i] != i)
            return false;
    return true;
}

long Perm::order() const
{
    long o = 1;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); i++) {
        if (seen[i])
            continue;
        long len = 0;
        for (int j = i; !seen[j]; j = p_[j]) {
            seen[j] = 1;
            len++;
        }
        o = std::lcm(o, len);
    }
    return o;
}

int Perm::fixed_points() const
{
    int f = 0;
    for (int i = 0; i < degree(); i++)
        f += p_[i] == i;
    return f;
}

int Perm::sign() const
{
    int s = 1;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); i++) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p_[j]) {
            seen[j] = 1;
            len++;
        }
        if (len % 2 == 0)
            s = -s;
    }
    return s;
}

std::string Perm::to_cycles() const
{
    std::ostringstream os;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); i++) {
        if (seen[i] || p_[i] == i)
            continue;
        os << "(";
        bool first = true;
        for (int j = i; !seen[j]; j = p_[j]) {
            seen[j] = 1;
            os << (first ? "" : ",") << j + 1;
            first = false;
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

/* ------------------------------------------------------------------ */

PermGroup::PermGroup(int degree, std::vector<Perm> const& gens) : n_(degree)
{
    if (degree < 1)
        throw perm_error("degree must be positive");
    add_generators(gens);
}

void PermGroup::rebuild_orbit(int l)
{
    Level& L = levels_[l];
    L.parent.assign(n_, -1);
    L.via.assign(n_, -1);
    L.orbit.clear();
    L.parent[L.base] = L.base;
    L.orbit.push_back(L.base);
    for (size_t k = 0; k < L.orbit.size(); k++) {
        int x = L.orbit[k];
        for (int gi : L.gens) {
            int y = strong_[gi](x);
            if (L.parent[y] < 0) {
                L.parent[y] = x;
                L.via[y] = gi;
                L.orbit.push_back(y);
            }
        }
    }
}

std::pair<Perm, int> PermGroup::strip(Perm g, int l) const
{
    for (int j = l; j < (int)levels_.size(); j++) {
        Level const& L = levels_[j];
        int b = g(L.base);
        if (L.parent[b] < 0)
            return {g, j};
        /* g <- u_b^-1 g, walking the Schreier tree */
        while (b != L.base) {
            g = strong_inv_[L.via[b]] * g;
            b = L.parent[b];
        }
    }
    return {g, (int)levels_.size()};
}

void PermGroup::add_strong(Perm const& g, int upto)
{
    if (upto == (int)levels_.size()) {
        int pt = 0;
        while (g(pt) == pt)
            pt++;
        Level L;
        L.base = pt;
        levels_.push_back(L);
        base_.push_back(pt);
    }
    int idx = (int)strong_.size();
    strong_.push_back(g);
    strong_inv_.push_back(g.inverse());
    for (int l = 0; l <= upto; l++)
        levels_[l].gens.push_back(idx);
}

void PermGroup::complete(int start)
{
    for (int l = 0; l < (int)levels_.size(); l++)
        rebuild_orbit(l);
    int i = start;
    while (i >= 0) {
        bool restarted = false;
        Level L = levels_[i];
        for (int x : L.orbit) {
            /* u_x */
            Perm ux(n_);
            for (int b = x; b != L.base; b = L.parent[b])
                ux = ux * strong_[L.via[b]];
            for (int gi : L.gens) {
                Perm sg = strong_[gi] * ux;
                auto [h, j] = strip(sg, i);
                if (h.is_identity())
                    continue;
                add_strong(h, j);
                for (int l = i + 1; l <= j; l++)
                    rebuild_orbit(l);
                i = j;
                restarted = true;
                break;
            }
            if (restarted)
                break;
        }
        if (!restarted)
            i--;
    }
}

void PermGroup::add_generators(std::vector<Perm> const& gs)
{
    bool changed = false;
    for (auto const& g : gs) {
        if (g.degree() != n_)
            throw perm_error("generator degree mismatch");
        gens_.push_back(g);
        if (g.is_identity())
            continue;
        if (!levels_.empty() && contains(g))
            continue;
        /* g goes to level 0, and to each level whose base prefix it fixes */
        int upto = 0;
        while (upto < (int)levels_.size() && g(levels_[upto].base) == levels_[upto].base)
            upto++;
        if (upto == (int)levels_.size())
            add_strong(g, upto);
        else
            add_strong(g, upto);
        changed = true;
        complete((int)levels_.size() - 1);
    }
    (void)changed;
}

Int PermGroup::order() const
{
    Int o = 1;
    for (auto const& L : levels_)
        o *= (unsigned long)L.orbit.size();
    return o;
}

bool PermGroup::contains(Perm const& g) const
{
    if (g.degree() != n_)
        return false;
    auto [h, j] = strip(g, 0);
    (void)j;
    return h.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const
{
    std::vector<char> seen(n_, 0);
    std::vector<int> orb{point};
    seen[point] = 1;
    for (size_t k = 0; k < orb.size(); k++)
        for (auto const& g : gens_) {
            int y = g(orb[k]);
            if (!seen[y]) {
                seen[y] = 1;
                orb.push_back(y);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

bool PermGroup::is_transitive() const { return (int)orbit(0).size() == n_; }

Perm PermGroup::random_element(std::mt19937_64& rng) const
{
    Perm g(n_);
    for (int l = (int)levels_.size() - 1; l >= 0; l--) {
        Level const& L = levels_[l];
        int x = L.orbit[rng() % L.orbit.size()];
        Perm ux(n_);
        for (int b = x; b != L.base; b = L.parent[b])
            ux = ux * strong_[L.via[b]];
        g = ux * g;
    }
    return g;
}

/* ------------------------------------------------------------------ */

PermGroup normal_closure(PermGroup const& ambient, std::vector<Perm> const& sub)
{
    PermGroup N(ambient.degree(), sub);
    std::vector<Perm> todo = sub;
    while (!todo.empty()) {
        Perm g = todo.back();
        todo.pop_back();
        for (auto const& x : ambient.generators()) {
            Perm c = x * g * x.inverse();
            if (!N.contains(c)) {
                N.add_generators({c});
                todo.push_back(c);
            }
        }
    }
    return N;
}

PermGroup derived_subgroup(PermGroup const& G)
{
    std::vector<Perm> comm;
    auto const& gs = G.generators();
    for (size_t i = 0; i < gs.size(); i++)
        for (size_t j = i + 1; j < gs.size(); j++) {
            Perm c = gs[i] * gs[j] * gs[i].inverse() * gs[j].inverse();
            if (!c.is_identity())
                comm.push_back(c);
        }
    return normal_closure(G, comm);
}

std::vector<int> minimal_block_system(std::vector<Perm> const& gens, int a, int b)
{
    int n = gens.empty() ? 0 : gens[0].degree();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> queue;
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return;
        parent[y] = x;
        queue.emplace_back(x, y);
    };
    unite(a, b);
    for (size_t k = 0; k < queue.size(); k++) {
        auto [x, y] = queue[k];
        for (auto const& g : gens)
            unite(g(x), g(y));
    }
    std::vector<int> label(n, -1), root_label(n, -1);
    int next = 0;
    for (int i = 0; i < n; i++) {
        int r = find(i);
        if (root_label[r] < 0)
            root_label[r] = next++;
        label[i] = root_label[r];
    }
    return label;
}

std::vector<Perm> block_action(std::vector<Perm> const& gens, std::vector<int> const& labels)
{
    int m = 0;
    for (int l : labels)
        m = std::max(m, l + 1);
    std::vector<Perm> out;
    for (auto const& g : gens) {
        std::vector<int> img(m, -1);
        for (size_t i = 0; i < labels.size(); i++) {
            int t = labels[g((int)i)];
            if (img[labels[i]] >= 0 && img[labels[i]] != t)
                throw perm_error("labels do not form a block system");
            img[labels[i]] = t;
        }
        out.emplace_back(img);
    }
    return out;
}

AbelRad abelianization_order_and_radical(PermGroup const& G)
{
    AbelRad r;
    Int ord = G.order();
    r.abelianization = ord / derived_subgroup(G).order();
    Int s7 = 5040;
    if (ord == s7) {
        r.radical = Int(1);
        return r;
    }
    if (ord % s7 != 0 || !G.is_transitive())
        return r;
    /* look for a block system on which the group acts with order 7! */
    int n = G.degree();
    for (int b = 1; b < n; b++) {
        auto labels = minimal_block_system(G.generators(), 0, b);
        int nb = *std::max_element(labels.begin(), labels.end()) + 1;
        if (nb == 1)
            continue;
        PermGroup Q(nb, block_action(G.generators(), labels));
        if (Q.order() == s7) {
            r.radical = ord / s7;
            return r;
        }
    }
    return r;
}

}  // namespace favor7
