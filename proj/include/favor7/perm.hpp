#ifndef FAVOR7_PERM_HPP_
#define FAVOR7_PERM_HPP_

#include "favor7/arith.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace favor7 {

struct perm_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* permutation of {0..n-1}; p[i] is the image of i.  Products act right to
 * left: (a * b)(i) = a(b(i)). */
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> img);
    /* disjoint cycles on {1..n}, e.g. "(1,2,3)(4,5)" or "(123)(45)" */
    static Perm parse_cycles(int n, std::string const& s);
    static Perm from_cycles(int n, std::vector<std::vector<int>> const& cycles_1based);

    int degree() const { return (int)p_.size(); }
    int operator()(int i) const { return p_[i]; }
    std::vector<int> const& images() const { return p_; }

    Perm operator*(Perm const& b) const;
    Perm inverse() const;
    Perm pow(long e) const;
    bool is_identity() const;
    bool operator==(Perm const& b) const { return p_ == b.p_; }
    bool operator!=(Perm const& b) const { return p_ != b.p_; }
    bool operator<(Perm const& b) const { return p_ < b.p_; }
    long order() const;
    int fixed_points() const;
    /* +1 / -1 */
    int sign() const;
    std::string to_cycles() const;

  private:
    std::vector<int> p_;
};

/* Schreier-Sims with Schreier vectors */
class PermGroup {
  public:
    explicit PermGroup(int degree, std::vector<Perm> const& gens = {});

    int degree() const { return n_; }
    std::vector<Perm> const& generators() const { return gens_; }
    /* adds generators, keeps the stabilizer chain complete */
    void add_generators(std::vector<Perm> const& gs);

    Int order() const;
    bool contains(Perm const& g) const;
    std::vector<int> const& base() const { return base_; }
    std::vector<int> orbit(int point) const;
    bool is_transitive() const;
    Perm random_element(std::mt19937_64& rng) const;

  private:
    struct Level {
        int base;
        std::vector<int> gens;      /* indices into strong_ */
        std::vector<int> parent;    /* -1 outside the orbit; point itself for base */
        std::vector<int> via;       /* generator index with via(parent) = point */
        std::vector<int> orbit;
    };
    int n_;
    std::vector<Perm> gens_;
    std::vector<Perm> strong_, strong_inv_;
    std::vector<Level> levels_;
    std::vector<int> base_;

    void rebuild_orbit(int l);
    /* sift from level l; returns residue and the level where it stopped */
    std::pair<Perm, int> strip(Perm g, int l) const;
    void add_strong(Perm const& g, int upto);
    void complete(int start);
};

/* normal closure of sub in the group generated by ambient */
PermGroup normal_closure(PermGroup const& ambient, std::vector<Perm> const& sub);
PermGroup derived_subgroup(PermGroup const& G);

/* minimal block containing points a and b (Atkinson); returns the block
 * label of each point */
std::vector<int> minimal_block_system(std::vector<Perm> const& gens, int a, int b);
/* action of gens on the blocks of a labelling */
std::vector<Perm> block_action(std::vector<Perm> const& gens, std::vector<int> const& labels);

struct AbelRad {
    Int abelianization;
    std::optional<Int> radical; /* kernel of a surjection onto S_7 */
};
AbelRad abelianization_order_and_radical(PermGroup const& G);

}  // namespace favor7

#endif
