#pragma once

#include "permpat/perm.hpp"
#include "permpat/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace permpat {

struct AvoidanceQuery {
    std::vector<Permutation> basis;  // nonempty
    bool involutions_only = false;   // basis auto-closed under inverse
    int n = 0;
};

struct OracleConfig {
    int max_n_plain = 14;        // hard budget; exceeding it is refused
    int workers = 1;
};

// Exact count of basis-avoiding permutations of length q.n, by depth-first
// insertion with prefix-pattern pruning. Optionally collects the members.
long long enumerate_class(const AvoidanceQuery& q, const OracleConfig& cfg = {},
                          std::vector<Permutation>* collect = nullptr);

// Involutions only, built from fixed points and 2-cycles directly.
long long enumerate_involutions(const AvoidanceQuery& q, const OracleConfig& cfg = {},
                                std::vector<Permutation>* collect = nullptr);

// total occurrences of sigma across the avoidance class at length n
long long occurrence_totals(const Permutation& sigma, const std::vector<Permutation>& basis,
                            int n, const OracleConfig& cfg = {});

// totals for every pattern of length k at once, keyed by pattern
std::map<Permutation, long long> occurrence_totals_all(const std::vector<Permutation>& basis,
                                                       int n, int k,
                                                       const OracleConfig& cfg = {});

// count of simple members; optional fixed-point filter applies to
// involution censuses
long long simple_census(const std::vector<Permutation>& basis, int n, bool involutions_only,
                        std::optional<int> fixed_points = std::nullopt,
                        const OracleConfig& cfg = {},
                        std::vector<Permutation>* collect = nullptr);

struct BondDistribution {
    std::vector<long long> count_by_bonds;  // index k: permutations with k bonds
    Rational mean;
    Rational variance;
};
BondDistribution bond_distribution(int n);  // exhaustive; n <= 10

// histogram of |del^k(pi)| over all pi of length n
std::map<long long, long long> distinct_pattern_distribution(int n, int k);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};
// the cross-class identity checks plus the plentiful-probability trend
std::vector<CheckResult> identity_suite(int n_max, const OracleConfig& cfg = {});

} // namespace permpat
