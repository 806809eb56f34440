#include "permpat/pegperm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permpat {

PegPerm::PegPerm(std::vector<int> r, std::string d) : ranks(std::move(r)), decs(std::move(d)) {
    if (ranks.size() != decs.size())
        throw std::invalid_argument("PegPerm: rank/decoration length mismatch");
    Permutation check{std::vector<int>(ranks)};  // validates the bijection
    for (char c : decs)
        if (c != '+' && c != '-' && c != '.')
            throw std::invalid_argument("PegPerm: bad decoration '" + std::string(1, c) + "'");
}

PegPerm PegPerm::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> ranks;
    std::string decs;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-' && tok[0] != '.'))
            throw std::invalid_argument("PegPerm::parse: token '" + tok +
                                        "' must look like +3, -1 or .2");
        decs.push_back(tok[0]);
        ranks.push_back(std::stoi(tok.substr(1)));
    }
    if (ranks.empty()) throw std::invalid_argument("PegPerm::parse: empty peg permutation");
    return PegPerm(std::move(ranks), std::move(decs));
}

std::string PegPerm::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += decs[i];
        out += std::to_string(ranks[i]);
    }
    return out;
}

std::vector<PegPerm> parse_peg_file(const std::string& contents) {
    std::vector<PegPerm> out;
    std::istringstream in(contents);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (blank) continue;
        out.push_back(PegPerm::parse(line));
    }
    return out;
}

Permutation inflate_peg(const PegPerm& rho, const IntVector& v) {
    int m = rho.size();
    if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("inflate_peg: vector dimension mismatch");
    for (int i = 0; i < m; ++i) {
        if (v[i] < 0) throw std::invalid_argument("inflate_peg: negative component");
        if (rho.decs[i] == '.' && v[i] > 1)
            throw std::invalid_argument("inflate_peg: dotted coordinate " + std::to_string(i + 1) +
                                        " inflated by " + std::to_string(v[i]));
    }
    // value offsets by rank
    std::vector<int> sizes_by_rank(m + 1, 0);
    for (int i = 0; i < m; ++i) sizes_by_rank[rho.ranks[i]] = v[i];
    std::vector<int> offset(m + 1, 0);
    for (int r = 1; r <= m; ++r) offset[r] = offset[r - 1] + sizes_by_rank[r];
    std::vector<int> out;
    out.reserve(offset[m]);
    for (int i = 0; i < m; ++i) {
        int base = offset[rho.ranks[i] - 1];
        if (rho.decs[i] == '-')
            for (int t = v[i]; t >= 1; --t) out.push_back(base + t);
        else
            for (int t = 1; t <= v[i]; ++t) out.push_back(base + t);
    }
    return Permutation(std::move(out));
}

namespace {

bool peg_match_rec(const PegPerm& tau, const PegPerm& rho, std::vector<int>& chosen, int depth) {
    int k = tau.size(), m = rho.size();
    if (depth == k) return true;
    int start = depth == 0 ? 0 : chosen[depth - 1] + 1;
    for (int i = start; i <= m - (k - depth); ++i) {
        if (tau.decs[depth] != '.' && tau.decs[depth] != rho.decs[i]) continue;
        bool ok = true;
        for (int t = 0; t < depth && ok; ++t)
            ok = (rho.ranks[chosen[t]] < rho.ranks[i]) == (tau.ranks[t] < tau.ranks[depth]);
        if (!ok) continue;
        chosen[depth] = i;
        if (peg_match_rec(tau, rho, chosen, depth + 1)) return true;
    }
    return false;
}

} // namespace

bool peg_contains(const PegPerm& tau, const PegPerm& rho) {
    if (tau.size() > rho.size()) return false;
    std::vector<int> chosen(tau.size());
    return peg_match_rec(tau, rho, chosen, 0);
}

namespace {

PegPerm delete_entry(const PegPerm& p, int i) {
    std::vector<int> r;
    std::string d;
    for (int j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        r.push_back(p.ranks[j]);
        d.push_back(p.decs[j]);
    }
    // re-rank
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    for (int& x : r) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
    return PegPerm(std::move(r), std::move(d));
}

} // namespace

std::set<PegPerm> complete(const std::set<PegPerm>& s) {
    if (s.empty()) throw std::invalid_argument("complete: empty input set");
    std::set<PegPerm> seen = s;
    std::vector<PegPerm> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
        std::vector<PegPerm> next;
        for (const auto& p : frontier) {
            for (int i = 0; i < p.size(); ++i) {
                if (p.size() > 1) {
                    PegPerm q = delete_entry(p, i);
                    if (seen.insert(q).second) next.push_back(q);
                }
                if (p.decs[i] != '.') {
                    PegPerm q = p;
                    q.decs[i] = '.';
                    if (seen.insert(q).second) next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

bool is_compact(const PegPerm& rho) {
    // forbidden length-2 monotone intervals: adjacent positions, adjacent
    // ranks, decorations able to merge into one monotone run
    for (int i = 0; i + 1 < rho.size(); ++i) {
        char a = rho.decs[i], b = rho.decs[i + 1];
        if (rho.ranks[i + 1] == rho.ranks[i] + 1) {  // ascending pair
            if ((a == '+' || a == '.') && (b == '+' || b == '.') && !(a == '.' && b == '.'))
                return false;
        }
        if (rho.ranks[i + 1] == rho.ranks[i] - 1) {  // descending pair
            if ((a == '-' || a == '.') && (b == '-' || b == '.') && !(a == '.' && b == '.'))
                return false;
        }
    }
    return true;
}

std::set<PegPerm> compact_filter(const std::set<PegPerm>& s) {
    std::set<PegPerm> out;
    for (const auto& p : s)
        if (is_compact(p)) out.insert(p);
    return out;
}

bool CleanResult::trivial() const {
    return std::all_of(run_caps.begin(), run_caps.end(), [](int c) { return c == 0; });
}

CleanResult clean_peg(const PegPerm& rho) {
    if (!is_compact(rho)) throw std::invalid_argument("clean_peg: input must be compact");
    int m = rho.size();
    std::vector<int> r;
    std::string d;
    IntVector caps;
    int i = 0;
    while (i < m) {
        if (rho.decs[i] != '.') {
            r.push_back(rho.ranks[i]);
            d.push_back(rho.decs[i]);
            caps.push_back(0);
            ++i;
            continue;
        }
        // maximal dotted monotone run starting at i
        int j = i;
        int dir = 0;
        while (j + 1 < m && rho.decs[j + 1] == '.') {
            int step = rho.ranks[j + 1] - rho.ranks[j];
            if (step != 1 && step != -1) break;
            if (dir == 0) dir = step;
            else if (step != dir) break;
            ++j;
        }
        int len = j - i + 1;
        if (len == 1) {
            r.push_back(rho.ranks[i]);
            d.push_back('.');
            caps.push_back(0);
        } else {
            // the contracted entry represents the run's whole value range
            r.push_back(dir > 0 ? rho.ranks[i] : rho.ranks[j]);  // min rank of the run
            d.push_back(dir > 0 ? '+' : '-');
            caps.push_back(len);
        }
        i = j + 1;
    }
    // re-rank after contraction (rank -> order among kept representatives)
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    for (int& x : r) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
    return {PegPerm(std::move(r), std::move(d)), std::move(caps)};
}

IntVector min_fill(const PegPerm& rho) {
    IntVector v(rho.size());
    for (int i = 0; i < rho.size(); ++i) v[i] = rho.decs[i] == '.' ? 1 : 2;
    return v;
}

std::pair<PegPerm, IntVector> greedy_peg(const Permutation& pi) {
    if (pi.empty()) throw std::invalid_argument("greedy_peg: empty permutation");
    // maximal bond-runs; each run becomes one entry
    int n = pi.size();
    std::vector<int> r;
    std::string d;
    IntVector v;
    int i = 0;
    while (i < n) {
        int j = i, dir = 0;
        while (j + 1 < n) {
            int step = pi[j + 1] - pi[j];
            if (step != 1 && step != -1) break;
            if (dir == 0) dir = step;
            else if (step != dir) break;
            ++j;
        }
        int len = j - i + 1;
        r.push_back(std::min(pi[i], pi[j]));
        d.push_back(len == 1 ? '.' : (dir > 0 ? '+' : '-'));
        v.push_back(len);
        i = j + 1;
    }
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    for (int& x : r) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
    return {PegPerm(std::move(r), std::move(d)), std::move(v)};
}

bool fills(const Permutation& pi, const PegPerm& rho) {
    if (pi.empty()) return false;
    if (is_compact(rho)) {
        auto [peg, v] = greedy_peg(pi);
        return peg == rho;
    }
    // general (non-compact) case: try all length assignments, verify by inflating
    IntVector v(rho.size(), 0);
    std::function<bool(int, int)> rec2 = [&](int idx, int remaining) -> bool {
        if (idx == rho.size()) {
            if (remaining != 0) return false;
            return inflate_peg(rho, v) == pi;
        }
        int lo = rho.decs[idx] == '.' ? 1 : 2;
        int hi = rho.decs[idx] == '.' ? 1 : remaining;
        for (int len = lo; len <= hi; ++len) {
            v[idx] = len;
            if (rec2(idx + 1, remaining - len)) return true;
        }
        return false;
    };
    return rec2(0, pi.size());
}

IntVector fill_vector(const Permutation& pi, const PegPerm& rho) {
    if (!is_compact(rho)) throw std::invalid_argument("fill_vector: peg must be compact");
    auto [peg, v] = greedy_peg(pi);
    if (!(peg == rho)) throw std::invalid_argument("fill_vector: permutation does not fill the peg");
    return v;
}

IntVector vec_join(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_join: dimension mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

namespace {

bool dominates(const IntVector& a, const IntVector& b) {  // b <= a componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

} // namespace

std::vector<IntVector> antichain_min(std::vector<IntVector> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<IntVector> out;
    for (size_t i = 0; i < vs.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < vs.size() && minimal; ++j)
            if (i != j && dominates(vs[i], vs[j]) && vs[i] != vs[j]) minimal = false;
        if (minimal) out.push_back(vs[i]);
    }
    return out;
}

bool VectorDownset::contains(const IntVector& v) const {
    if (static_cast<int>(v.size()) != dimension)
        throw std::invalid_argument("VectorDownset::contains: dimension mismatch");
    for (const auto& b : forbidden_basis)
        if (dominates(v, b)) return false;
    return true;
}

VectorDownset downset_union(const VectorDownset& a, const VectorDownset& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("downset_union: dimension mismatch");
    if (a.unrestricted() || b.unrestricted()) return {a.dimension, {}};
    std::vector<IntVector> joins;
    for (const auto& x : a.forbidden_basis)
        for (const auto& y : b.forbidden_basis) joins.push_back(vec_join(x, y));
    return {a.dimension, antichain_min(std::move(joins))};
}

VectorDownset downset_intersect(const VectorDownset& a, const VectorDownset& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("downset_intersect: dimension mismatch");
    std::vector<IntVector> all = a.forbidden_basis;
    all.insert(all.end(), b.forbidden_basis.begin(), b.forbidden_basis.end());
    return {a.dimension, antichain_min(std::move(all))};
}

Series RatGF::to_series(int order) const {
    Series num(order);
    for (int i = 0; i <= order && i < static_cast<int>(numer.size()); ++i)
        num.coeff(i) = Rational(numer[i]);
    Series den = Series::constant(Rational(1), order);
    // (1-z)^denom_pow
    Series base(order);
    base.coeff(0) = Rational(1);
    if (order >= 1) base.coeff(1) = Rational(-1);
    den = ps_pow(base, static_cast<unsigned>(denom_pow));
    return num / den;
}

void RatGF::normalize() {
    while (!numer.empty() && numer.back().is_zero()) numer.pop_back();
    // cancel (1-z) factors: numer divisible by (1-z) iff numer(1) == 0
    while (denom_pow > 0) {
        BigInt at1(0);
        for (const auto& c : numer) at1 += c;
        if (!at1.is_zero()) break;
        // synthetic division by (1-z): q_0 = n_0, q_i = n_i + q_{i-1}
        std::vector<BigInt> q;
        if (!numer.empty()) {
            q.assign(numer.size() - 1, BigInt(0));
            BigInt acc(0);
            for (size_t i = 0; i + 1 < numer.size(); ++i) {
                acc = (i == 0) ? numer[0] : acc + numer[i];
                q[i] = acc;
            }
        }
        numer = std::move(q);
        --denom_pow;
        while (!numer.empty() && numer.back().is_zero()) numer.pop_back();
    }
}

std::string RatGF::to_string() const {
    std::string num;
    bool first = true;
    for (size_t i = 0; i < numer.size(); ++i) {
        if (numer[i].is_zero()) continue;
        std::string c = numer[i].to_string();
        if (!first && c[0] != '-') num += "+";
        num += c + "*z^" + std::to_string(i);
        first = false;
    }
    if (first) num = "0";
    return "(" + num + ") / (1-z)^" + std::to_string(denom_pow);
}

RatGF restricted_gf(const RestrictedPegClass& cls) {
    const PegPerm& rho = cls.peg;
    int m = rho.size();
    if (cls.allowed.dimension != m)
        throw std::invalid_argument("restricted_gf: downset dimension mismatch");
    int s = 0;
    for (char c : rho.decs)
        if (c != '.') ++s;
    IntVector mf = min_fill(rho);
    const auto& basis = cls.allowed.forbidden_basis;
    size_t nb = basis.size();
    if (nb > 24) throw std::runtime_error("restricted_gf: forbidden basis too large");

    // gf accumulates sum over subsets B of (-1)^|B| z^{wt(m v join(B))} (1-z)^{-s};
    // joins that exceed a dotted cap contribute nothing
    std::map<int, long long> signed_weights;  // weight -> signed multiplicity
    for (size_t mask = 0; mask < (size_t{1} << nb); ++mask) {
        IntVector w = mf;
        for (size_t t = 0; t < nb; ++t)
            if (mask >> t & 1) w = vec_join(w, basis[t]);
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i)
            if (rho.decs[i] == '.' && w[i] > 1) dead = true;
        if (dead) continue;
        int weight = std::accumulate(w.begin(), w.end(), 0);
        signed_weights[weight] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }
    RatGF gf;
    gf.denom_pow = s;
    for (const auto& [w, mult] : signed_weights) {
        if (mult == 0) continue;
        if (static_cast<int>(gf.numer.size()) <= w) gf.numer.resize(w + 1, BigInt(0));
        gf.numer[w] += BigInt(mult);
    }
    return gf;
}

namespace {

RatGF gf_add(const RatGF& a, const RatGF& b) {
    // common denominator (1-z)^max
    RatGF out;
    out.denom_pow = std::max(a.denom_pow, b.denom_pow);
    auto scaled = [&](const RatGF& g) {
        // numer * (1-z)^(out.denom_pow - g.denom_pow)
        std::vector<BigInt> cur = g.numer;
        for (int t = 0; t < out.denom_pow - g.denom_pow; ++t) {
            std::vector<BigInt> next(cur.size() + 1, BigInt(0));
            for (size_t i = 0; i < cur.size(); ++i) {
                next[i] += cur[i];
                next[i + 1] -= cur[i];
            }
            cur = std::move(next);
        }
        return cur;
    };
    std::vector<BigInt> na = scaled(a), nb = scaled(b);
    out.numer.assign(std::max(na.size(), nb.size()), BigInt(0));
    for (size_t i = 0; i < na.size(); ++i) out.numer[i] += na[i];
    for (size_t i = 0; i < nb.size(); ++i) out.numer[i] += nb[i];
    while (!out.numer.empty() && out.numer.back().is_zero()) out.numer.pop_back();
    return out;
}

} // namespace

BigInt ClassPolynomial::eval(long long n) const {
    BigInt total(0);
    for (size_t k = 0; k < binomial_coeffs.size(); ++k)
        total += binomial_coeffs[k] * BigInt::binomial(n, static_cast<long long>(k));
    return total;
}

std::string ClassPolynomial::polynomial_string() const {
    std::string out;
    for (size_t k = 0; k < binomial_coeffs.size(); ++k) {
        if (binomial_coeffs[k].is_zero()) continue;
        std::string c = binomial_coeffs[k].to_string();
        if (!out.empty() && c[0] != '-') out += " + ";
        else if (!out.empty()) { out += " - "; c = c.substr(1); }
        out += c + "*C(n," + std::to_string(k) + ")";
    }
    return out.empty() ? "0" : out;
}

ClassPolynomial to_binomial_basis(const RatGF& gf_in) {
    RatGF gf = gf_in;
    gf.normalize();
    ClassPolynomial out;
    out.gf = gf;
    int d = gf.denom_pow;  // series is eventually a polynomial of degree d-1
    int w = static_cast<int>(gf.numer.size());
    int window = std::max(w + d + 2, d + 2);
    Series s = gf.to_series(window + d + 2);

    // Newton forward differences anchored at n0 = window give the polynomial;
    // shift the expansion to the C(n,k) basis at 0 via Vandermonde.
    int n0 = window;
    std::vector<Rational> delta(d > 0 ? d : 1);
    {
        std::vector<Rational> row;
        for (int i = 0; i < (d > 0 ? d : 1); ++i) row.push_back(s.coeff(n0 + i));
        for (size_t k = 0; k < delta.size(); ++k) {
            delta[k] = row[0];
            for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
            row.pop_back();
        }
    }
    // p(n) = sum_j delta_j C(n - n0, j); C(n - n0, j) = sum_k C(n,k) C(-n0, j-k)
    int deg = static_cast<int>(delta.size());
    std::vector<Rational> coeffs(deg, Rational(0));
    for (int j = 0; j < deg; ++j) {
        if (delta[j].is_zero()) continue;
        for (int k = 0; k <= j; ++k) {
            // C(-n0, j-k) = (-1)^(j-k) C(n0 + j - k - 1, j - k)
            BigInt c = BigInt::binomial(n0 + j - k - 1, j - k);
            Rational term = delta[j] * Rational((j - k) % 2 == 0 ? c : -c);
            coeffs[k] += term;
        }
    }
    for (int k = 0; k < deg; ++k) {
        if (!coeffs[k].is_integer())
            throw std::runtime_error("to_binomial_basis: non-integer coefficient of C(n," +
                                     std::to_string(k) + ")");
        out.binomial_coeffs.push_back(coeffs[k].num());
    }
    while (!out.binomial_coeffs.empty() && out.binomial_coeffs.back().is_zero())
        out.binomial_coeffs.pop_back();

    // minimal threshold from which the polynomial matches the series
    int t = window;
    while (t > 0) {
        BigInt want = out.eval(t - 1);
        Rational have = s.coeff(t - 1);
        if (!(have.is_integer() && have.num() == want)) break;
        --t;
    }
    out.threshold = t;
    for (int i = 0; i < t; ++i) {
        Rational c = s.coeff(i);
        if (!c.is_integer()) throw std::runtime_error("to_binomial_basis: non-integer count");
        out.exceptional.push_back(c.num());
    }
    return out;
}

namespace {

// ------------------------------------------------------------------
// Streaming pipeline for large inputs. Pegs of length <= 10 pack into a
// single 64-bit key: 4 bits of length, then 6 bits per entry (rank-1 and
// decoration). The downset closure is walked breadth-first over packed
// keys, each compact member is cleaned on the fly, and the cleaned
// (key, caps) records are sorted so groups can be swept without a map.

constexpr int kPackMax = 10;

struct SmallPeg {
    int len = 0;
    int rank[kPackMax];
    char dec[kPackMax];
};

uint64_t pack_small(const SmallPeg& p) {
    uint64_t code = static_cast<uint64_t>(p.len);
    for (int i = 0; i < p.len; ++i) {
        uint64_t d = p.dec[i] == '+' ? 1 : p.dec[i] == '-' ? 2 : 3;
        code |= ((static_cast<uint64_t>(p.rank[i] - 1) << 2) | d) << (4 + 6 * i);
    }
    return code;
}

SmallPeg unpack_small(uint64_t code) {
    SmallPeg p;
    p.len = static_cast<int>(code & 0xf);
    for (int i = 0; i < p.len; ++i) {
        uint64_t e = (code >> (4 + 6 * i)) & 0x3f;
        p.rank[i] = static_cast<int>(e >> 2) + 1;
        p.dec[i] = "?+-."[e & 3];
    }
    return p;
}

SmallPeg to_small(const PegPerm& p) {
    SmallPeg s;
    s.len = p.size();
    for (int i = 0; i < s.len; ++i) {
        s.rank[i] = p.ranks[i];
        s.dec[i] = p.decs[i];
    }
    return s;
}

PegPerm from_small(const SmallPeg& p) {
    return PegPerm(std::vector<int>(p.rank, p.rank + p.len),
                   std::string(p.dec, p.dec + p.len));
}

bool small_compact(const SmallPeg& p) {
    for (int i = 0; i + 1 < p.len; ++i) {
        char a = p.dec[i], b = p.dec[i + 1];
        if (p.rank[i + 1] == p.rank[i] + 1 &&
            (a == '+' || a == '.') && (b == '+' || b == '.') && !(a == '.' && b == '.'))
            return false;
        if (p.rank[i + 1] == p.rank[i] - 1 &&
            (a == '-' || a == '.') && (b == '-' || b == '.') && !(a == '.' && b == '.'))
            return false;
    }
    return true;
}

// contract dotted monotone runs; returns cleaned peg and packed caps
// (4 bits per coordinate, 0 = unconstrained)
void small_clean(const SmallPeg& p, SmallPeg& out, uint64_t& caps) {
    int repr[kPackMax];
    out.len = 0;
    caps = 0;
    int i = 0;
    while (i < p.len) {
        if (p.dec[i] != '.') {
            repr[out.len] = p.rank[i];
            out.dec[out.len] = p.dec[i];
            ++out.len;
            ++i;
            continue;
        }
        int j = i, dir = 0;
        while (j + 1 < p.len && p.dec[j + 1] == '.') {
            int step = p.rank[j + 1] - p.rank[j];
            if (step != 1 && step != -1) break;
            if (dir == 0) dir = step;
            else if (step != dir) break;
            ++j;
        }
        int len = j - i + 1;
        if (len == 1) {
            repr[out.len] = p.rank[i];
            out.dec[out.len] = '.';
        } else {
            repr[out.len] = dir > 0 ? p.rank[i] : p.rank[j];
            out.dec[out.len] = dir > 0 ? '+' : '-';
            caps |= static_cast<uint64_t>(len) << (4 * out.len);
        }
        ++out.len;
        i = j + 1;
    }
    // re-rank the representatives
    for (int a = 0; a < out.len; ++a) {
        int r = 1;
        for (int b = 0; b < out.len; ++b)
            if (repr[b] < repr[a]) ++r;
        out.rank[a] = r;
    }
}

struct Flat64Set {
    int log2 = 20;
    size_t count = 0;
    std::vector<uint64_t> slots;

    Flat64Set() : slots(size_t{1} << log2, 0) {}
    size_t probe(uint64_t key) const {
        return (key * 0x9e3779b97f4a7c15ull) >> (64 - log2);
    }
    bool insert(uint64_t key) {
        if (count * 2 >= slots.size()) grow();
        size_t mask = slots.size() - 1;
        size_t h = probe(key);
        while (slots[h]) {
            if (slots[h] == key) return false;
            h = (h + 1) & mask;
        }
        slots[h] = key;
        ++count;
        return true;
    }
    void grow() {
        std::vector<uint64_t> old = std::move(slots);
        ++log2;
        slots.assign(size_t{1} << log2, 0);
        count = 0;
        for (uint64_t k : old)
            if (k) insert(k);
    }
};

PolyclassResult polyclass_stream(const std::set<PegPerm>& s) {
    // 1. downset closure over packed keys, cleaning compact members as met
    Flat64Set seen;
    std::vector<uint64_t> frontier;
    std::vector<std::pair<uint64_t, uint64_t>> records;  // (cleaned key, caps)
    auto visit = [&](uint64_t code) {
        if (!seen.insert(code)) return;
        frontier.push_back(code);
        SmallPeg p = unpack_small(code);
        if (!small_compact(p)) return;
        SmallPeg cleaned;
        uint64_t caps;
        small_clean(p, cleaned, caps);
        records.emplace_back(pack_small(cleaned), caps);
    };
    for (const auto& p : s) visit(pack_small(to_small(p)));
    std::vector<uint64_t> next;
    while (!frontier.empty()) {
        next.clear();
        std::swap(frontier, next);
        for (uint64_t code : next) {
            SmallPeg p = unpack_small(code);
            // dot one sign
            for (int i = 0; i < p.len; ++i) {
                if (p.dec[i] == '.') continue;
                char keep = p.dec[i];
                p.dec[i] = '.';
                visit(pack_small(p));
                p.dec[i] = keep;
            }
            // delete one entry
            if (p.len > 1)
                for (int i = 0; i < p.len; ++i) {
                    SmallPeg q;
                    q.len = p.len - 1;
                    int t = 0;
                    for (int j = 0; j < p.len; ++j) {
                        if (j == i) continue;
                        q.rank[t] = p.rank[j] - (p.rank[j] > p.rank[i] ? 1 : 0);
                        q.dec[t] = p.dec[j];
                        ++t;
                    }
                    visit(pack_small(q));
                }
        }
    }
    seen.slots.clear();
    seen.slots.shrink_to_fit();

    // 2. group by cleaned key
    std::sort(records.begin(), records.end());
    records.erase(std::unique(records.begin(), records.end()), records.end());

    // 3. sweep: per group, union the cap boxes and add the
    //    inclusion-exclusion terms into (weight, signs) cells
    constexpr int kWMax = 64;
    std::vector<std::array<long long, kPackMax + 1>> cells(kWMax + 1);
    for (auto& row : cells) row.fill(0);
    PolyclassResult out;
    out.partition_complete = true;
    size_t run_begin = 0;
    auto flush_group = [&](size_t lo, size_t hi) {
        SmallPeg peg = unpack_small(records[lo].first);
        int signs = 0;
        for (int i = 0; i < peg.len; ++i)
            if (peg.dec[i] != '.') ++signs;
        IntVector mf(peg.len);
        for (int i = 0; i < peg.len; ++i) mf[i] = peg.dec[i] == '.' ? 1 : 2;
        VectorDownset ds{peg.len, {}};
        bool unrestricted = false;
        for (size_t t = lo; t < hi && !unrestricted; ++t) {
            if (records[t].second == 0) { unrestricted = true; break; }
            VectorDownset box{peg.len, {}};
            for (int i = 0; i < peg.len; ++i) {
                int cap = static_cast<int>((records[t].second >> (4 * i)) & 0xf);
                if (cap == 0) continue;
                IntVector b(peg.len, 0);
                b[i] = cap + 1;
                box.forbidden_basis.push_back(std::move(b));
            }
            ds = (t == lo) ? box : downset_union(ds, box);
        }
        if (unrestricted) ds.forbidden_basis.clear();
        size_t nb = ds.forbidden_basis.size();
        for (size_t mask = 0; mask < (size_t{1} << nb); ++mask) {
            IntVector w = mf;
            for (size_t t = 0; t < nb; ++t)
                if (mask >> t & 1) w = vec_join(w, ds.forbidden_basis[t]);
            bool dead = false;
            int weight = 0;
            for (int i = 0; i < peg.len; ++i) {
                if (peg.dec[i] == '.' && w[i] > 1) { dead = true; break; }
                weight += w[i];
            }
            if (dead) continue;
            if (weight > kWMax) throw std::logic_error("polyclass_stream: weight bound exceeded");
            cells[weight][signs] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
        }
        ++out.class_count;
        if (out.partition.size() < (1u << 17))
            out.partition.push_back({from_small(peg), std::move(ds)});
        else
            out.partition_complete = false;
    };
    for (size_t t = 1; t <= records.size(); ++t) {
        if (t == records.size() || records[t].first != records[run_begin].first) {
            flush_group(run_begin, t);
            run_begin = t;
        }
    }
    if (!out.partition_complete) {
        out.partition.clear();
        out.partition.shrink_to_fit();
    }

    // 4. assemble the rational function over the common denominator
    int dmax = 0;
    for (int w = 0; w <= kWMax; ++w)
        for (int s2 = 0; s2 <= kPackMax; ++s2)
            if (cells[w][s2] != 0) dmax = std::max(dmax, s2);
    out.gf.denom_pow = dmax;
    for (int w = 0; w <= kWMax; ++w)
        for (int s2 = 0; s2 <= kPackMax; ++s2) {
            long long c = cells[w][s2];
            if (c == 0) continue;
            // c * z^w * (1-z)^(dmax - s2)
            int e = dmax - s2;
            for (int j = 0; j <= e; ++j) {
                BigInt term = BigInt(c) * BigInt::binomial(e, j);
                if (j % 2) term = -term;
                size_t idx = static_cast<size_t>(w + j);
                if (out.gf.numer.size() <= idx) out.gf.numer.resize(idx + 1, BigInt(0));
                out.gf.numer[idx] += term;
            }
        }
    out.gf.normalize();
    out.poly = to_binomial_basis(out.gf);
    return out;
}

} // namespace

PolyclassResult polyclass_enumerate(const std::set<PegPerm>& s) {
    if (s.empty()) throw std::invalid_argument("polyclass_enumerate: empty input");
    bool packable = true;
    for (const auto& p : s)
        if (p.size() > kPackMax) packable = false;
    if (packable) return polyclass_stream(s);

    std::set<PegPerm> full = complete(s);
    std::set<PegPerm> compact = compact_filter(full);

    // clean each compact member and merge the allowed downsets per key
    std::map<PegPerm, VectorDownset> groups;
    for (const auto& rho : compact) {
        CleanResult cr = clean_peg(rho);
        VectorDownset ds;
        ds.dimension = cr.peg.size();
        for (int i = 0; i < cr.peg.size(); ++i) {
            if (cr.run_caps[i] == 0) continue;
            IntVector b(cr.peg.size(), 0);
            b[i] = cr.run_caps[i] + 1;
            ds.forbidden_basis.push_back(std::move(b));
        }
        auto it = groups.find(cr.peg);
        if (it == groups.end()) groups.emplace(cr.peg, std::move(ds));
        else it->second = downset_union(it->second, ds);
    }

    PolyclassResult out;
    out.gf.denom_pow = 0;
    for (auto& [peg, ds] : groups) {
        RestrictedPegClass cls{peg, ds};
        RatGF g = restricted_gf(cls);
        out.gf = gf_add(out.gf, g);
        out.partition.push_back(std::move(cls));
    }
    out.class_count = out.partition.size();
    out.gf.normalize();
    out.poly = to_binomial_basis(out.gf);
    return out;
}

std::set<Permutation> brute_class_set(const std::set<PegPerm>& s, int n) {
    std::set<Permutation> out;
    for (const auto& rho : s) {
        int m = rho.size();
        IntVector v(m, 0);
        std::function<void(int, int)> rec = [&](int idx, int remaining) {
            if (idx == m) {
                if (remaining == 0) out.insert(inflate_peg(rho, v));
                return;
            }
            int hi = rho.decs[idx] == '.' ? std::min(1, remaining) : remaining;
            for (int len = 0; len <= hi; ++len) {
                v[idx] = len;
                rec(idx + 1, remaining - len);
            }
        };
        rec(0, n);
    }
    return out;
}

long long brute_class_members(const std::set<PegPerm>& s, int n) {
    return static_cast<long long>(brute_class_set(s, n).size());
}

} // namespace permpat
