#pragma once

#include "permpat/bigint.hpp"
#include "permpat/perm.hpp"
#include "permpat/rational.hpp"
#include "permpat/series.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace permpat {

// A permutation whose entries carry +, - or . decorations. Signed entries
// inflate to ascending/descending runs of any length (empty allowed in the
// inflation order), dotted entries to at most one point.
struct PegPerm {
    std::vector<int> ranks;  // underlying permutation, one-line
    std::string decs;        // '+', '-', '.' per entry

    PegPerm() = default;
    PegPerm(std::vector<int> r, std::string d);
    static PegPerm parse(const std::string& text);  // tokens like "+3 -1 .2 +4"

    int size() const { return static_cast<int>(ranks.size()); }
    std::string to_string() const;
    friend bool operator==(const PegPerm& a, const PegPerm& b) = default;
    friend auto operator<=>(const PegPerm& a, const PegPerm& b) = default;
};

using IntVector = std::vector<int>;

// One peg per line; '#' starts a comment.
std::vector<PegPerm> parse_peg_file(const std::string& contents);

// inflate by a vector: v[i] in {0,1} at dots, any nonnegative at signs
Permutation inflate_peg(const PegPerm& rho, const IntVector& v);

// peg pattern order: subsequence in the same relative order whose
// decorations match or are weakened to dots in tau
bool peg_contains(const PegPerm& tau, const PegPerm& rho);

// closure under entry deletion and sign -> dot weakening
std::set<PegPerm> complete(const std::set<PegPerm>& s);

bool is_compact(const PegPerm& rho);
std::set<PegPerm> compact_filter(const std::set<PegPerm>& s);

struct CleanResult {
    PegPerm peg;
    // per-coordinate cap from contracting a dotted run of that length;
    // 0 marks an unconstrained coordinate
    IntVector run_caps;
    bool trivial() const;  // no coordinate constrained
};
// contract maximal dotted monotone runs into signed entries; requires compact
CleanResult clean_peg(const PegPerm& rho);

IntVector min_fill(const PegPerm& rho);
bool fills(const Permutation& pi, const PegPerm& rho);
// unique when rho is compact; throws if pi does not fill rho
IntVector fill_vector(const Permutation& pi, const PegPerm& rho);
// the canonical compact clean peg a permutation fills, with its vector
std::pair<PegPerm, IntVector> greedy_peg(const Permutation& pi);

IntVector vec_join(const IntVector& a, const IntVector& b);
// minimal elements under componentwise order
std::vector<IntVector> antichain_min(std::vector<IntVector> vs);

// A downward-closed set of nonnegative integer vectors, stored by the
// antichain of minimal forbidden vectors. Empty basis means everything.
struct VectorDownset {
    int dimension = 0;
    std::vector<IntVector> forbidden_basis;

    bool contains(const IntVector& v) const;
    bool unrestricted() const { return forbidden_basis.empty(); }
};
VectorDownset downset_union(const VectorDownset& a, const VectorDownset& b);
VectorDownset downset_intersect(const VectorDownset& a, const VectorDownset& b);

struct RestrictedPegClass {
    PegPerm peg;            // clean and compact
    VectorDownset allowed;  // restriction on fill vectors
};

// Rational function numerator(z) / (1-z)^denom_pow with integer numerator.
struct RatGF {
    std::vector<BigInt> numer;
    int denom_pow = 0;

    Series to_series(int order) const;
    void normalize();  // cancel common (1-z) factors
    std::string to_string() const;
    friend bool operator==(const RatGF& a, const RatGF& b) = default;
};

// fill vectors of the class counted by weight, via inclusion-exclusion over
// the forbidden basis
RatGF restricted_gf(const RestrictedPegClass& cls);

struct ClassPolynomial {
    std::vector<BigInt> binomial_coeffs;  // coefficient of C(n,k)
    int threshold = 0;                    // agreement holds for n >= threshold
    std::vector<BigInt> exceptional;      // counts for 0 <= n < threshold
    RatGF gf;

    BigInt eval(long long n) const;  // the binomial-basis polynomial at n
    std::string polynomial_string() const;
};
// requires a (1-z)-power denominator; throws otherwise
ClassPolynomial to_binomial_basis(const RatGF& gf);

struct PolyclassResult {
    std::vector<RestrictedPegClass> partition;
    // very large runs keep the generating function but skip materializing
    // the partition; this flag says whether `partition` is complete
    bool partition_complete = true;
    size_t class_count = 0;
    RatGF gf;
    ClassPolynomial poly;
};
// complete -> compact -> clean with downset merging; the restricted classes
// partition the inflation class of the input set
PolyclassResult polyclass_enumerate(const std::set<PegPerm>& s);

// ground truth: distinct inflations of weight n across the set
long long brute_class_members(const std::set<PegPerm>& s, int n);
std::set<Permutation> brute_class_set(const std::set<PegPerm>& s, int n);

} // namespace permpat
