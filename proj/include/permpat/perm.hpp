#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permpat {

// A permutation of [n] in one-line notation. The empty permutation is a
// valid value, distinct from the length-1 permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);
    static Permutation identity(int n);
    // space- or comma-separated one-line values; rejects non-bijections
    // with a positioned error
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    // 0-based access
    int operator[](int i) const { return v_[i]; }
    // 1-based access, matching the usual combinatorial indexing
    int at1(int i) const { return v_[i - 1]; }
    const std::vector<int>& entries() const { return v_; }

    std::string to_string() const;  // e.g. "2 5 1 4 3"
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> v_;
};

// order-isomorphic relabelling onto 1..n; duplicates are rejected with the
// offending index pair
template <typename T>
Permutation standardize(const std::vector<T>& values);

enum class Sym { reverse, complement, inverse };

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation symmetry(const Permutation& p, Sym which);
// all eight images of p under the symmetry group, deduplicated
std::vector<Permutation> symmetry_orbit(const Permutation& p);

// number of subsequences of pi order-isomorphic to sigma
long long count_occurrences(const Permutation& sigma, const Permutation& pi);
bool contains(const Permutation& sigma, const Permutation& pi);
// first occurrence in lexicographic position order, 1-based indices
std::optional<std::vector<int>> find_occurrence(const Permutation& sigma, const Permutation& pi);

template <typename Range>
long long total_occurrences(const Permutation& sigma, const Range& set) {
    long long total = 0;
    for (const auto& p : set) total += count_occurrences(sigma, p);
    return total;
}

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

// all intervals as 1-based inclusive position ranges, singletons and the
// full range included
std::vector<std::pair<int, int>> intervals(const Permutation& p);
bool is_simple(const Permutation& p);

// blocks must all be nonempty and match |skeleton|
Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks);

struct Decomposition {
    Permutation skeleton;
    std::vector<Permutation> blocks;
};
// skeleton simple; for skeleton 12 (resp. 21) the first block is the maximal
// sum-(skew-)indecomposable prefix, which makes the result canonical
Decomposition substitution_decompose(const Permutation& p);

bool is_involution(const Permutation& p);
bool is_sum_decomposable(const Permutation& p);
bool is_skew_decomposable(const Permutation& p);

struct StatRecord {
    int ascents = 0;
    long long inversions = 0;
    int ltr_minima_count = 0;
    int rtl_maxima_count = 0;
    int fixed_points = 0;
    int bonds = 0;
    std::vector<int> ltr_minima_positions;  // 1-based
};
StatRecord stats(const Permutation& p);
std::vector<int> ltr_minima_positions(const Permutation& p);
std::vector<int> rtl_maxima_positions(const Permutation& p);
int bonds(const Permutation& p);

// delete the i-th entry (1-based) and standardize
Permutation del_entry(const Permutation& p, int i);
std::set<Permutation> del_set(const Permutation& p);
// distinct patterns obtainable by deleting k entries
long long del_k_count(const Permutation& p, int k);
// insert value j - 1/2 immediately left of position i (i, j in 1..n+1)
Permutation ins_entry(const Permutation& p, int i, int j);
std::set<Permutation> ins_set(const Permutation& p);
long long ins_set_size(const Permutation& p);

// taxicab distance |i-j| + |p_i-p_j| on the plot, 1-based indices
int pair_distance(const Permutation& p, int i, int j);

struct GapReport {
    int min_gap = 0;
    std::vector<std::pair<int, int>> witness_pairs;  // pairs at the minimum
    std::map<int, long long> pairs_at_distance;
};
GapReport gap_report(const Permutation& p);  // requires size >= 2
long long pairs_at_distance(const Permutation& p, int d);
// indices strictly between i and j horizontally or vertically; i != j
std::vector<int> span_indices(const Permutation& p, int i, int j);
bool is_k_plentiful(const Permutation& p, int k);

// the short large-gap construction; requires k >= 3
Permutation theta(int k);

} // namespace permpat
