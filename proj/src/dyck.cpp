#include "permpat/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace permpat {

DyckPath DyckPath::parse(const std::string& steps) {
    int h = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == 'u') ++h;
        else if (steps[i] == 'd') --h;
        else throw std::invalid_argument("DyckPath: bad step '" + std::string(1, steps[i]) +
                                         "' at index " + std::to_string(i + 1));
        if (h < 0) throw std::invalid_argument("DyckPath: dips below the axis at step " +
                                               std::to_string(i + 1));
    }
    if (h != 0) throw std::invalid_argument("DyckPath: does not return to the axis");
    return DyckPath(steps);
}

std::vector<int> peak_heights(const DyckPath& p) {
    std::vector<int> out;
    int h = 0;
    const std::string& s = p.steps();
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'u') {
            ++h;
            if (i + 1 < s.size() && s[i + 1] == 'd') out.push_back(h);
        } else --h;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen(std::string& cur, int ups, int downs, int n, std::vector<std::string>& out) {
    if (static_cast<int>(cur.size()) == 2 * n) { out.push_back(cur); return; }
    if (ups < n) {
        cur.push_back('u');
        gen(cur, ups + 1, downs, n, out);
        cur.pop_back();
    }
    if (downs < ups) {
        cur.push_back('d');
        gen(cur, ups, downs + 1, n, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<DyckPath> all_dyck(int semilength) {
    std::vector<std::string> raw;
    std::string cur;
    gen(cur, 0, 0, semilength, raw);
    std::vector<DyckPath> out;
    out.reserve(raw.size());
    for (auto& s : raw) out.push_back(DyckPath(std::move(s)));
    return out;
}

namespace {

void phi_rec(const std::vector<int>& vals, std::string& out) {
    if (vals.empty()) return;
    int n = static_cast<int>(vals.size());
    int mx = 0, pos = -1;
    for (int i = 0; i < n; ++i)
        if (vals[i] > mx) { mx = vals[i]; pos = i; }
    std::vector<int> left(vals.begin(), vals.begin() + pos);
    std::vector<int> right(vals.begin() + pos + 1, vals.end());
    out.push_back('u');
    phi_rec(left, out);
    out.push_back('d');
    phi_rec(right, out);
}

} // namespace

DyckPath phi(const Permutation& pi) {
    static const Permutation p132({1, 3, 2});
    if (auto w = find_occurrence(p132, pi))
        throw std::invalid_argument("phi: input contains 132 at positions " +
                                    std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                                    std::to_string((*w)[2]));
    std::string out;
    phi_rec(pi.entries(), out);
    return DyckPath::parse(out);
}

namespace {

// inverse of the first-return recursion; consumes s[from, to)
std::vector<int> phi_inv_rec(const std::string& s, int from, int to) {
    if (from == to) return {};
    // s[from] must be 'u'; find its matching 'd'
    int h = 0, match = -1;
    for (int i = from; i < to; ++i) {
        h += s[i] == 'u' ? 1 : -1;
        if (h == 0) { match = i; break; }
    }
    std::vector<int> left = phi_inv_rec(s, from + 1, match);
    std::vector<int> right = phi_inv_rec(s, match + 1, to);
    // pi = (left + max) skew-above right
    int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
    std::vector<int> out;
    out.reserve(nl + nr + 1);
    for (int x : left) out.push_back(x + nr);
    out.push_back(nl + nr + 1);
    for (int x : right) out.push_back(x);
    return out;
}

} // namespace

Permutation phi_inverse(const DyckPath& path) {
    std::vector<int> v = phi_inv_rec(path.steps(), 0, 2 * path.semilength());
    return Permutation(std::move(v));
}

DyckPath phi_prime(const Permutation& pi) {
    static const Permutation p123({1, 2, 3});
    if (auto w = find_occurrence(p123, pi))
        throw std::invalid_argument("phi_prime: input contains 123 at positions " +
                                    std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                                    std::to_string((*w)[2]));
    // The tightest monotone staircase below-left of the plot steps down to
    // the running prefix minimum before passing each column.
    int n = pi.size();
    std::string out;
    int prev = n + 1;
    int m = n + 1;
    for (int i = 1; i <= n; ++i) {
        m = std::min(m, pi.at1(i));
        out.append(prev - m, 'u');
        out.push_back('d');
        prev = m;
    }
    return DyckPath::parse(out);
}

int span_of_entry(const Permutation& pi, int i) {
    int s = 0;
    for (int j = 1; j < i; ++j)
        if (pi.at1(j) < pi.at1(i)) ++s;
    return s;
}

DyckPath phi_star(const Permutation& pi) {
    static const Permutation p123({1, 2, 3});
    if (pi.size() < 2) throw std::invalid_argument("phi_star: needs length >= 2");
    if (auto w = find_occurrence(p123, pi))
        throw std::invalid_argument("phi_star: input contains 123 at positions " +
                                    std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                                    std::to_string((*w)[2]));
    if (is_skew_decomposable(pi))
        throw std::invalid_argument("phi_star: input is skew decomposable");
    // Mirror staircase: hug the right-to-left maxima from above; suffix
    // maxima give the crossing heights.
    int n = pi.size();
    std::vector<int> h(n + 2);
    h[n + 1] = 1;
    h[n] = pi.at1(n);
    for (int x = n - 1; x >= 1; --x) h[x] = std::max(h[x + 1], pi.at1(x));
    std::string out;
    for (int x = 2; x <= n; ++x) {
        out.push_back('u');
        out.append(h[x] - h[x + 1], 'd');
    }
    return DyckPath::parse(out);
}

} // namespace permpat
