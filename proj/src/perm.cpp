#include "permpat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permpat {

Permutation::Permutation(std::vector<int> entries) : v_(std::move(entries)) {
    int n = static_cast<int>(v_.size());
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (v_[i] < 1 || v_[i] > n || seen[v_[i]])
            throw std::invalid_argument("Permutation: entry at position " + std::to_string(i + 1) +
                                        " breaks the bijection on [" + std::to_string(n) + "]");
        seen[v_[i]] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        try {
            size_t pos = 0;
            int x = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("trailing junk");
            v.push_back(x);
        } catch (const std::exception&) {
            throw std::invalid_argument("Permutation::parse: token " + std::to_string(v.size() + 1) +
                                        " ('" + tok + "') is not an integer");
        }
    }
    int n = static_cast<int>(v.size());
    std::vector<int> where(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (v[i] < 1 || v[i] > n)
            throw std::invalid_argument("Permutation::parse: value " + std::to_string(v[i]) +
                                        " at position " + std::to_string(i + 1) + " is outside 1.." +
                                        std::to_string(n));
        if (where[v[i]])
            throw std::invalid_argument("Permutation::parse: value " + std::to_string(v[i]) +
                                        " repeated at positions " + std::to_string(where[v[i]]) +
                                        " and " + std::to_string(i + 1));
        where[v[i]] = i + 1;
    }
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v_[i]);
    }
    return s;
}

template <typename T>
Permutation standardize(const std::vector<T>& values) {
    int n = static_cast<int>(values.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });
    for (int r = 1; r < n; ++r)
        if (!(values[idx[r - 1]] < values[idx[r]]))
            throw std::invalid_argument("standardize: duplicate values at positions " +
                                        std::to_string(std::min(idx[r - 1], idx[r]) + 1) + " and " +
                                        std::to_string(std::max(idx[r - 1], idx[r]) + 1));
    std::vector<int> out(n);
    for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
    return Permutation(std::move(out));
}

template Permutation standardize<int>(const std::vector<int>&);
template Permutation standardize<long long>(const std::vector<long long>&);
template Permutation standardize<double>(const std::vector<double>&);

Permutation reverse(const Permutation& p) {
    std::vector<int> v(p.entries().rbegin(), p.entries().rend());
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
    int n = p.size();
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - p[i] + 1;
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    int n = p.size();
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[p[i] - 1] = i + 1;
    return Permutation(std::move(v));
}

Permutation symmetry(const Permutation& p, Sym which) {
    switch (which) {
        case Sym::reverse: return reverse(p);
        case Sym::complement: return complement(p);
        case Sym::inverse: return inverse(p);
    }
    throw std::logic_error("symmetry: bad selector");
}

std::vector<Permutation> symmetry_orbit(const Permutation& p) {
    std::set<Permutation> out{p};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> cur(out.begin(), out.end());
        for (const auto& q : cur)
            for (Sym s : {Sym::reverse, Sym::complement, Sym::inverse})
                grew |= out.insert(symmetry(q, s)).second;
    }
    return {out.begin(), out.end()};
}

namespace {

// Count subsequences matching sigma by backtracking over positions; a partial
// choice is extended only while it stays order-isomorphic to the prefix of
// sigma, which prunes heavily for short patterns.
long long count_rec(const std::vector<int>& sig, const std::vector<int>& pi,
                    std::vector<int>& chosen, int depth, int start) {
    int k = static_cast<int>(sig.size());
    int n = static_cast<int>(pi.size());
    if (depth == k) return 1;
    long long total = 0;
    for (int i = start; i <= n - (k - depth); ++i) {
        bool ok = true;
        for (int t = 0; t < depth && ok; ++t)
            ok = (pi[chosen[t]] < pi[i]) == (sig[t] < sig[depth]);
        if (!ok) continue;
        chosen[depth] = i;
        total += count_rec(sig, pi, chosen, depth + 1, i + 1);
    }
    return total;
}

bool find_rec(const std::vector<int>& sig, const std::vector<int>& pi,
              std::vector<int>& chosen, int depth, int start) {
    int k = static_cast<int>(sig.size());
    int n = static_cast<int>(pi.size());
    if (depth == k) return true;
    for (int i = start; i <= n - (k - depth); ++i) {
        bool ok = true;
        for (int t = 0; t < depth && ok; ++t)
            ok = (pi[chosen[t]] < pi[i]) == (sig[t] < sig[depth]);
        if (!ok) continue;
        chosen[depth] = i;
        if (find_rec(sig, pi, chosen, depth + 1, i + 1)) return true;
    }
    return false;
}

} // namespace

long long count_occurrences(const Permutation& sigma, const Permutation& pi) {
    if (sigma.empty()) throw std::invalid_argument("count_occurrences: empty pattern");
    if (sigma.size() > pi.size()) return 0;
    std::vector<int> chosen(sigma.size());
    return count_rec(sigma.entries(), pi.entries(), chosen, 0, 0);
}

bool contains(const Permutation& sigma, const Permutation& pi) {
    return find_occurrence(sigma, pi).has_value();
}

std::optional<std::vector<int>> find_occurrence(const Permutation& sigma, const Permutation& pi) {
    if (sigma.empty()) return std::vector<int>{};
    if (sigma.size() > pi.size()) return std::nullopt;
    std::vector<int> chosen(sigma.size());
    if (!find_rec(sigma.entries(), pi.entries(), chosen, 0, 0)) return std::nullopt;
    for (int& c : chosen) ++c;  // 1-based for reporting
    return chosen;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v = a.entries();
    v.reserve(a.size() + b.size());
    for (int x : b.entries()) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(a.size() + b.size());
    for (int x : a.entries()) v.push_back(x + b.size());
    for (int x : b.entries()) v.push_back(x);
    return Permutation(std::move(v));
}

std::vector<std::pair<int, int>> intervals(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        int lo = p[i], hi = p[i];
        for (int j = i; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            if (hi - lo == j - i) out.emplace_back(i + 1, j + 1);
        }
    }
    return out;
}

bool is_simple(const Permutation& p) {
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        int lo = p[i], hi = p[i];
        for (int j = i + 1; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            int len = j - i + 1;
            if (len == n) break;
            if (hi - lo == j - i) return false;
        }
    }
    return true;
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
    if (static_cast<int>(blocks.size()) != skeleton.size())
        throw std::invalid_argument("inflate: block count does not match skeleton length");
    int m = skeleton.size();
    std::vector<int> offset(m + 1, 0);  // offset by skeleton VALUE
    for (int v = 1; v <= m; ++v) {
        int pos = -1;
        for (int i = 0; i < m; ++i)
            if (skeleton[i] == v) { pos = i; break; }
        if (blocks[pos].empty())
            throw std::invalid_argument("inflate: empty block at position " + std::to_string(pos + 1));
        offset[v] = offset[v - 1] + blocks[pos].size();
    }
    std::vector<int> out;
    for (int i = 0; i < m; ++i) {
        int base = offset[skeleton[i] - 1];
        for (int x : blocks[i].entries()) out.push_back(base + x);
    }
    return Permutation(std::move(out));
}

namespace {

// first sum-component length, or n when sum-indecomposable
int first_sum_component(const Permutation& p) {
    int hi = 0;
    for (int i = 0; i < p.size(); ++i) {
        hi = std::max(hi, p[i]);
        if (hi == i + 1) return i + 1;
    }
    return p.size();
}

int first_skew_component(const Permutation& p) {
    int n = p.size();
    int lo = n + 1;
    for (int i = 0; i < n; ++i) {
        lo = std::min(lo, p[i]);
        if (lo == n - i) return i + 1;
    }
    return n;
}

Permutation slice_std(const Permutation& p, int from, int to) {  // [from, to) 0-based
    std::vector<int> v(p.entries().begin() + from, p.entries().begin() + to);
    return standardize(v);
}

} // namespace

bool is_sum_decomposable(const Permutation& p) {
    return p.size() >= 2 && first_sum_component(p) < p.size();
}

bool is_skew_decomposable(const Permutation& p) {
    return p.size() >= 2 && first_skew_component(p) < p.size();
}

bool is_involution(const Permutation& p) { return inverse(p) == p; }

Decomposition substitution_decompose(const Permutation& p) {
    int n = p.size();
    if (n == 0) throw std::invalid_argument("substitution_decompose: empty permutation");
    if (n == 1) return {Permutation({1}), {p}};
    if (int c = first_sum_component(p); c < n) {
        return {Permutation({1, 2}), {slice_std(p, 0, c), slice_std(p, c, n)}};
    }
    if (int c = first_skew_component(p); c < n) {
        return {Permutation({2, 1}), {slice_std(p, 0, c), slice_std(p, c, n)}};
    }
    // Indecomposable both ways: blocks are the maximal proper intervals, and
    // the quotient is a simple permutation of length >= 4.
    std::vector<std::pair<int, int>> all = intervals(p);
    std::vector<std::pair<int, int>> maximal;
    for (const auto& iv : all) {
        if (iv.second - iv.first + 1 == n) continue;
        bool contained = false;
        for (const auto& other : all) {
            if (other == iv || other.second - other.first + 1 == n) continue;
            if (other.first <= iv.first && iv.second <= other.second) { contained = true; break; }
        }
        if (!contained) maximal.push_back(iv);
    }
    std::sort(maximal.begin(), maximal.end());
    std::vector<Permutation> blocks;
    std::vector<int> reps;
    int cursor = 1;
    for (const auto& iv : maximal) {
        if (iv.first != cursor)
            throw std::logic_error("substitution_decompose: maximal intervals do not tile");
        blocks.push_back(slice_std(p, iv.first - 1, iv.second));
        reps.push_back(p.at1(iv.first));
        cursor = iv.second + 1;
    }
    if (cursor != n + 1)
        throw std::logic_error("substitution_decompose: maximal intervals do not tile");
    std::vector<int> repv(reps.begin(), reps.end());
    Permutation skel = standardize(repv);
    return {skel, blocks};
}

std::vector<int> ltr_minima_positions(const Permutation& p) {
    std::vector<int> out;
    int best = p.size() + 1;
    for (int i = 0; i < p.size(); ++i)
        if (p[i] < best) { best = p[i]; out.push_back(i + 1); }
    return out;
}

std::vector<int> rtl_maxima_positions(const Permutation& p) {
    std::vector<int> out;
    int best = 0;
    for (int i = p.size() - 1; i >= 0; --i)
        if (p[i] > best) { best = p[i]; out.push_back(i + 1); }
    std::reverse(out.begin(), out.end());
    return out;
}

int bonds(const Permutation& p) {
    int b = 0;
    for (int i = 0; i + 1 < p.size(); ++i)
        if (std::abs(p[i] - p[i + 1]) == 1) ++b;
    return b;
}

StatRecord stats(const Permutation& p) {
    StatRecord r;
    int n = p.size();
    for (int i = 0; i + 1 < n; ++i)
        if (p[i] < p[i + 1]) ++r.ascents;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] > p[j]) ++r.inversions;
    r.ltr_minima_positions = ltr_minima_positions(p);
    r.ltr_minima_count = static_cast<int>(r.ltr_minima_positions.size());
    r.rtl_maxima_count = static_cast<int>(rtl_maxima_positions(p).size());
    for (int i = 0; i < n; ++i)
        if (p[i] == i + 1) ++r.fixed_points;
    r.bonds = bonds(p);
    return r;
}

Permutation del_entry(const Permutation& p, int i) {
    if (i < 1 || i > p.size()) throw std::out_of_range("del_entry: index out of range");
    std::vector<int> v;
    v.reserve(p.size() - 1);
    for (int j = 0; j < p.size(); ++j)
        if (j != i - 1) v.push_back(p[j]);
    return standardize(v);
}

std::set<Permutation> del_set(const Permutation& p) {
    std::set<Permutation> out;
    for (int i = 1; i <= p.size(); ++i) out.insert(del_entry(p, i));
    return out;
}

long long del_k_count(const Permutation& p, int k) {
    int n = p.size();
    if (k < 0 || k > n) throw std::out_of_range("del_k_count: k out of range");
    std::set<Permutation> seen;
    std::vector<int> pick(k);
    // iterate k-subsets of positions
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<int> v;
        v.reserve(n - k);
        int t = 0;
        for (int j = 0; j < n; ++j) {
            if (t < k && pick[t] == j) { ++t; continue; }
            v.push_back(p[j]);
        }
        seen.insert(standardize(v));
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return static_cast<long long>(seen.size());
}

Permutation ins_entry(const Permutation& p, int i, int j) {
    int n = p.size();
    if (i < 1 || i > n + 1 || j < 1 || j > n + 1)
        throw std::out_of_range("ins_entry: index out of range");
    std::vector<int> v;
    v.reserve(n + 1);
    for (int t = 0; t < n; ++t) {
        if (t == i - 1) v.push_back(j);
        v.push_back(p[t] >= j ? p[t] + 1 : p[t]);
    }
    if (i == n + 1) v.push_back(j);
    return Permutation(std::move(v));
}

std::set<Permutation> ins_set(const Permutation& p) {
    std::set<Permutation> out;
    for (int i = 1; i <= p.size() + 1; ++i)
        for (int j = 1; j <= p.size() + 1; ++j) out.insert(ins_entry(p, i, j));
    return out;
}

long long ins_set_size(const Permutation& p) { return static_cast<long long>(ins_set(p).size()); }

int pair_distance(const Permutation& p, int i, int j) {
    return std::abs(i - j) + std::abs(p.at1(i) - p.at1(j));
}

GapReport gap_report(const Permutation& p) {
    int n = p.size();
    if (n < 2) throw std::invalid_argument("gap_report: needs length >= 2");
    GapReport r;
    r.min_gap = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int d = pair_distance(p, i, j);
            ++r.pairs_at_distance[d];
            if (r.min_gap == 0 || d < r.min_gap) r.min_gap = d;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pair_distance(p, i, j) == r.min_gap) r.witness_pairs.emplace_back(i, j);
    return r;
}

long long pairs_at_distance(const Permutation& p, int d) {
    long long c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (pair_distance(p, i, j) == d) ++c;
    return c;
}

std::vector<int> span_indices(const Permutation& p, int i, int j) {
    if (i == j) throw std::invalid_argument("span_indices: i != j required");
    std::set<int> out;
    int lo = std::min(i, j), hi = std::max(i, j);
    for (int k = lo + 1; k < hi; ++k) out.insert(k);
    int vlo = std::min(p.at1(i), p.at1(j)), vhi = std::max(p.at1(i), p.at1(j));
    for (int k = 1; k <= p.size(); ++k)
        if (p.at1(k) > vlo && p.at1(k) < vhi) out.insert(k);
    return {out.begin(), out.end()};
}

bool is_k_plentiful(const Permutation& p, int k) {
    if (p.size() < 2) return true;
    return gap_report(p).min_gap >= k + 2;
}

Permutation theta(int k) {
    if (k < 3) throw std::invalid_argument("theta: requires k >= 3");
    int side = k - 1;
    std::vector<int> full(side * side);
    for (int i = 0; i <= side - 1; ++i)
        for (int j = 0; j <= side - 1; ++j) full[i * side + j] = i + j * side + 1;
    std::vector<int> inner(full.begin() + 1, full.end() - 1);
    return standardize(inner);
}

} // namespace permpat
