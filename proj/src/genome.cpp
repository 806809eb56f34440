#include "permpat/genome.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace permpat {

BlockOp block_op_from_string(const std::string& name) {
    if (name == "block_reversal") return BlockOp::block_reversal;
    if (name == "block_transposition") return BlockOp::block_transposition;
    if (name == "block_interchange") return BlockOp::block_interchange;
    if (name == "prefix_transposition") return BlockOp::prefix_transposition;
    if (name == "prefix_reversal") return BlockOp::prefix_reversal;
    if (name == "cut_paste") return BlockOp::cut_paste;
    throw std::invalid_argument("unknown block operation '" + name + "'");
}

std::string to_string(BlockOp op) {
    switch (op) {
        case BlockOp::block_reversal: return "block_reversal";
        case BlockOp::block_transposition: return "block_transposition";
        case BlockOp::block_interchange: return "block_interchange";
        case BlockOp::prefix_transposition: return "prefix_transposition";
        case BlockOp::prefix_reversal: return "prefix_reversal";
        case BlockOp::cut_paste: return "cut_paste";
    }
    throw std::logic_error("to_string(BlockOp)");
}

std::vector<BlockOp> all_block_ops() {
    return {BlockOp::block_reversal,     BlockOp::block_transposition,
            BlockOp::block_interchange,  BlockOp::prefix_transposition,
            BlockOp::prefix_reversal,    BlockOp::cut_paste};
}

namespace {

struct Seg {
    int rank;
    char dec;
};

// Merge adjacent same-direction pieces whose value ranges touch; this keeps
// the peg representation canonical without changing its inflation class.
void canonical_merge(std::vector<Seg>& segs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < segs.size(); ++i) {
            char a = segs[i].dec, b = segs[i + 1].dec;
            int ra = segs[i].rank, rb = segs[i + 1].rank;
            bool asc = rb == ra + 1 && (a == '+' || a == '.') && (b == '+' || b == '.') &&
                       !(a == '.' && b == '.');
            bool desc = rb == ra - 1 && (a == '-' || a == '.') && (b == '-' || b == '.') &&
                        !(a == '.' && b == '.');
            if (!asc && !desc) continue;
            int keep = std::min(ra, rb), drop = std::max(ra, rb);
            segs[i] = {keep, asc ? '+' : '-'};
            segs.erase(segs.begin() + i + 1);
            for (auto& s : segs)
                if (s.rank > drop) --s.rank;
            changed = true;
            break;
        }
    }
}

PegPerm to_peg(const std::vector<Seg>& segs) {
    std::vector<int> r(segs.size());
    std::string d(segs.size(), '.');
    for (size_t i = 0; i < segs.size(); ++i) {
        r[i] = segs[i].rank;
        d[i] = segs[i].dec;
    }
    return PegPerm(std::move(r), std::move(d));
}

// A cut point in "c-space": even c -> the boundary before segment c/2;
// odd c -> a cut inside segment (c-1)/2 (signed segments only). Several cuts
// may land inside the same segment; they map to consecutive refined
// boundaries in sorted order.
struct Refined {
    std::vector<Seg> segs;
    std::vector<int> bnd;  // refined boundary index per input cut
};

bool refine(const PegPerm& rho, const std::vector<int>& cuts, Refined& out) {
    int m = rho.size();
    std::vector<int> inner(m, 0);
    for (int c : cuts) {
        if (c % 2 == 1) {
            int s = (c - 1) / 2;
            if (rho.decs[s] == '.') return false;  // a dot cannot be split
            ++inner[s];
        }
    }
    // refined ranks: each original rank expands into a run of piece ranks
    std::vector<int> pieces_by_rank(m + 1, 0), offset(m + 1, 0);
    for (int s = 0; s < m; ++s) pieces_by_rank[rho.ranks[s]] = inner[s] + 1;
    for (int r = 1; r <= m; ++r) offset[r] = offset[r - 1] + pieces_by_rank[r];

    out.segs.clear();
    std::vector<int> base(m + 1, 0);  // refined index of the boundary before segment s
    for (int s = 0; s < m; ++s) {
        base[s] = static_cast<int>(out.segs.size());
        int p = inner[s] + 1;
        for (int j = 0; j < p; ++j) {
            int local = rho.decs[s] == '-' ? (p - 1 - j) : j;
            out.segs.push_back({offset[rho.ranks[s] - 1] + local + 1, rho.decs[s]});
        }
    }
    base[m] = static_cast<int>(out.segs.size());

    // map each cut (processed in sorted order) to its refined boundary
    out.bnd.assign(cuts.size(), 0);
    std::vector<int> used(m, 0);
    for (size_t t = 0; t < cuts.size(); ++t) {
        int c = cuts[t];
        if (c % 2 == 0) out.bnd[t] = base[c / 2];
        else {
            int s = (c - 1) / 2;
            out.bnd[t] = base[s] + (++used[s]);
        }
    }
    return true;
}

void flip_range(std::vector<Seg>& segs, int from, int to) {  // [from, to)
    std::reverse(segs.begin() + from, segs.begin() + to);
    for (int i = from; i < to; ++i) {
        if (segs[i].dec == '+') segs[i].dec = '-';
        else if (segs[i].dec == '-') segs[i].dec = '+';
    }
}

std::vector<Seg> move_block(const std::vector<Seg>& segs, int b1, int b2, int ins, bool flip) {
    // remove [b1, b2), reinsert at boundary ins (ins <= b1 or ins >= b2)
    std::vector<Seg> block(segs.begin() + b1, segs.begin() + b2);
    if (flip) {
        std::reverse(block.begin(), block.end());
        for (auto& s : block) {
            if (s.dec == '+') s.dec = '-';
            else if (s.dec == '-') s.dec = '+';
        }
    }
    std::vector<Seg> rest;
    rest.insert(rest.end(), segs.begin(), segs.begin() + b1);
    rest.insert(rest.end(), segs.begin() + b2, segs.end());
    int at = ins <= b1 ? ins : ins - (b2 - b1);
    std::vector<Seg> out;
    out.insert(out.end(), rest.begin(), rest.begin() + at);
    out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), rest.begin() + at, rest.end());
    return out;
}

void emit(std::set<PegPerm>& out, std::vector<Seg> segs, const BallConfig& cfg) {
    canonical_merge(segs);
    out.insert(to_peg(segs));
    if (out.size() > cfg.max_set_size)
        throw std::runtime_error("apply_to_pegset: peg set exceeded the configured cap");
}

void moves_of(const PegPerm& rho, BlockOp op, std::set<PegPerm>& out, const BallConfig& cfg) {
    int m = rho.size();
    int cmax = 2 * m;
    Refined R;

    auto reversal_like = [&](bool prefix_only) {
        for (int c1 = 0; c1 <= cmax; ++c1) {
            if (prefix_only && c1 != 0) break;
            for (int c2 = c1; c2 <= cmax; ++c2) {
                if (c1 == c2 && c1 % 2 == 0) continue;  // empty block
                if (!refine(rho, {c1, c2}, R)) continue;
                int b1 = R.bnd[0], b2 = R.bnd[1];
                if (b1 >= b2) continue;
                std::vector<Seg> segs = R.segs;
                flip_range(segs, b1, b2);
                emit(out, std::move(segs), cfg);
            }
        }
    };

    auto transposition_like = [&](bool prefix_only, bool allow_flip, bool allow_plain) {
        for (int c1 = 0; c1 <= cmax; ++c1) {
            if (prefix_only && c1 != 0) break;
            for (int c2 = c1; c2 <= cmax; ++c2)
                for (int c3 = c2; c3 <= cmax; ++c3) {
                    // roles: block (c1, c2) with insertion c3, or insertion c1
                    // with block (c2, c3)
                    for (int role = 0; role < 2; ++role) {
                        if (prefix_only && role == 1) continue;
                        if (!refine(rho, {c1, c2, c3}, R)) continue;
                        int b1, b2, ins;
                        if (role == 0) { b1 = R.bnd[0]; b2 = R.bnd[1]; ins = R.bnd[2]; }
                        else           { ins = R.bnd[0]; b1 = R.bnd[1]; b2 = R.bnd[2]; }
                        if (b1 >= b2) continue;
                        if (ins > b1 && ins < b2) continue;
                        if (ins == b1 || ins == b2) {  // block does not move
                            if (!allow_flip) continue;
                            std::vector<Seg> segs = R.segs;
                            flip_range(segs, b1, b2);
                            emit(out, std::move(segs), cfg);
                            continue;
                        }
                        if (allow_plain) emit(out, move_block(R.segs, b1, b2, ins, false), cfg);
                        if (allow_flip) emit(out, move_block(R.segs, b1, b2, ins, true), cfg);
                    }
                }
        }
    };

    switch (op) {
        case BlockOp::block_reversal:
            reversal_like(false);
            break;
        case BlockOp::prefix_reversal:
            reversal_like(true);
            break;
        case BlockOp::block_transposition:
            transposition_like(false, false, true);
            break;
        case BlockOp::prefix_transposition:
            transposition_like(true, false, true);
            break;
        case BlockOp::cut_paste:
            transposition_like(false, true, true);
            break;
        case BlockOp::block_interchange: {
            for (int c1 = 0; c1 <= cmax; ++c1)
                for (int c2 = c1; c2 <= cmax; ++c2)
                    for (int c3 = c2; c3 <= cmax; ++c3)
                        for (int c4 = c3; c4 <= cmax; ++c4) {
                            if (!refine(rho, {c1, c2, c3, c4}, R)) continue;
                            int b1 = R.bnd[0], b2 = R.bnd[1], b3 = R.bnd[2], b4 = R.bnd[3];
                            if (b1 >= b2 || b3 >= b4 || b2 > b3) continue;
                            // swap [b1,b2) and [b3,b4)
                            std::vector<Seg> segs;
                            segs.insert(segs.end(), R.segs.begin(), R.segs.begin() + b1);
                            segs.insert(segs.end(), R.segs.begin() + b3, R.segs.begin() + b4);
                            segs.insert(segs.end(), R.segs.begin() + b2, R.segs.begin() + b3);
                            segs.insert(segs.end(), R.segs.begin() + b1, R.segs.begin() + b2);
                            segs.insert(segs.end(), R.segs.begin() + b4, R.segs.end());
                            emit(out, std::move(segs), cfg);
                        }
            break;
        }
    }
}

} // namespace

std::set<PegPerm> apply_to_pegset(BlockOp op, const std::set<PegPerm>& s, const BallConfig& cfg) {
    std::set<PegPerm> out;
    for (const auto& rho : s) moves_of(rho, op, out, cfg);
    return out;
}

std::set<PegPerm> ball_pegset(BlockOp op, int k, const BallConfig& cfg) {
    std::set<PegPerm> all{PegPerm({1}, "+")};
    std::set<PegPerm> frontier = all;
    for (int level = 1; level <= k; ++level) {
        std::set<PegPerm> next = apply_to_pegset(op, frontier, cfg);
        frontier.clear();
        for (const auto& p : next)
            if (all.insert(p).second) frontier.insert(p);
        if (all.size() > cfg.max_set_size)
            throw std::runtime_error("ball_pegset: peg set exceeded the configured cap");
        if (frontier.empty()) break;
    }
    return all;
}

PolyclassResult ball_polynomial(BlockOp op, int k, const BallConfig& cfg) {
    return polyclass_enumerate(ball_pegset(op, k, cfg));
}

std::vector<Permutation> op_neighbours(const Permutation& pi, BlockOp op) {
    int n = pi.size();
    std::vector<Permutation> out;
    const std::vector<int>& v = pi.entries();

    auto push_reversals = [&](bool prefix_only) {
        for (int a = 0; a < n; ++a) {
            if (prefix_only && a != 0) break;
            for (int b = a + 1; b < n; ++b) {
                std::vector<int> w = v;
                std::reverse(w.begin() + a, w.begin() + b + 1);
                out.push_back(Permutation(std::move(w)));
            }
        }
    };
    auto push_moves = [&](bool prefix_only, bool with_flip, bool with_plain) {
        for (int a = 0; a < n; ++a) {
            if (prefix_only && a != 0) break;
            for (int b = a; b < n; ++b) {
                std::vector<int> rest;
                for (int i = 0; i < n; ++i)
                    if (i < a || i > b) rest.push_back(v[i]);
                std::vector<int> block(v.begin() + a, v.begin() + b + 1);
                std::vector<int> flipped(block.rbegin(), block.rend());
                int rl = static_cast<int>(rest.size());
                for (int t = 0; t <= rl; ++t) {
                    bool same_spot = (t == a);
                    for (int f = 0; f < 2; ++f) {
                        if (f == 0 && (!with_plain || same_spot)) continue;
                        if (f == 1 && !with_flip) continue;
                        const std::vector<int>& blk = f ? flipped : block;
                        std::vector<int> w;
                        w.insert(w.end(), rest.begin(), rest.begin() + t);
                        w.insert(w.end(), blk.begin(), blk.end());
                        w.insert(w.end(), rest.begin() + t, rest.end());
                        out.push_back(Permutation(std::move(w)));
                    }
                }
            }
        }
    };

    switch (op) {
        case BlockOp::block_reversal: push_reversals(false); break;
        case BlockOp::prefix_reversal: push_reversals(true); break;
        case BlockOp::block_transposition: push_moves(false, false, true); break;
        case BlockOp::prefix_transposition: push_moves(true, false, true); break;
        case BlockOp::cut_paste: push_moves(false, true, true); break;
        case BlockOp::block_interchange: {
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c; d < n; ++d) {
                            std::vector<int> w;
                            w.insert(w.end(), v.begin(), v.begin() + a);
                            w.insert(w.end(), v.begin() + c, v.begin() + d + 1);
                            w.insert(w.end(), v.begin() + b + 1, v.begin() + c);
                            w.insert(w.end(), v.begin() + a, v.begin() + b + 1);
                            w.insert(w.end(), v.begin() + d + 1, v.end());
                            out.push_back(Permutation(std::move(w)));
                        }
            break;
        }
    }
    return out;
}

namespace {

uint64_t encode(const Permutation& p) {
    uint64_t code = 0;
    for (int i = 0; i < p.size(); ++i) code |= static_cast<uint64_t>(p[i]) << (4 * i);
    return code;
}

} // namespace

long long bfs_ball(BlockOp op, int k, int n) {
    if (n > 12) throw std::runtime_error("bfs_ball: n too large for exhaustive search");
    Permutation id = Permutation::identity(n);
    std::unordered_set<uint64_t> seen{encode(id)};
    std::vector<Permutation> frontier{id};
    for (int level = 1; level <= k && !frontier.empty(); ++level) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (auto& q : op_neighbours(p, op))
                if (seen.insert(encode(q)).second) next.push_back(std::move(q));
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

int op_distance(const Permutation& pi, BlockOp op) {
    int n = pi.size();
    if (n > 12) throw std::runtime_error("op_distance: n too large for exhaustive search");
    Permutation id = Permutation::identity(n);
    if (pi == id) return 0;
    uint64_t target = encode(pi);
    std::unordered_set<uint64_t> seen{encode(id)};
    std::vector<Permutation> frontier{id};
    for (int level = 1; !frontier.empty(); ++level) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (auto& q : op_neighbours(p, op)) {
                uint64_t code = encode(q);
                if (code == target) return level;
                if (seen.insert(code).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    throw std::logic_error("op_distance: target unreachable");
}

} // namespace permpat
