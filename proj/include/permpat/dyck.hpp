#pragma once

#include "permpat/perm.hpp"

#include <string>
#include <vector>

namespace permpat {

// A Dyck path as a u/d step string; never dips below the axis and returns
// to it.
class DyckPath {
public:
    DyckPath() = default;
    // validates balance and nonnegativity
    static DyckPath parse(const std::string& steps);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    const std::string& steps() const { return steps_; }
    std::string to_string() const { return steps_; }

    friend bool operator==(const DyckPath& a, const DyckPath& b) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) = default;

private:
    explicit DyckPath(std::string s) : steps_(std::move(s)) {}
    std::string steps_;
    friend DyckPath phi(const Permutation&);
    friend DyckPath phi_prime(const Permutation&);
    friend DyckPath phi_star(const Permutation&);
    friend std::vector<DyckPath> all_dyck(int);
};

// heights of the peaks (ud factors), sorted ascending
std::vector<int> peak_heights(const DyckPath& p);
std::vector<DyckPath> all_dyck(int semilength);

// recursive bijection Av_n(132) -> Dyck paths of semilength n,
// phi(pi) = u phi(pi1) d phi(pi2); throws naming a witness when pi has a 132
DyckPath phi(const Permutation& pi);
Permutation phi_inverse(const DyckPath& path);

// staircase bijection Av_n(123) -> Dyck paths of semilength n (the
// maximal-area monotone path hugging the left-to-right minima)
DyckPath phi_prime(const Permutation& pi);

// skew-indecomposable 123-avoiders of length n -> Dyck paths of semilength
// n-1; right-to-left maxima of span s map to peaks of height s
DyckPath phi_star(const Permutation& pi);

// number of entries left of and below position i (1-based)
int span_of_entry(const Permutation& pi, int i);

} // namespace permpat
