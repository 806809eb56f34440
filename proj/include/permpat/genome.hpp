#pragma once

#include "permpat/pegperm.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace permpat {

enum class BlockOp {
    block_reversal,
    block_transposition,
    block_interchange,
    prefix_transposition,
    prefix_reversal,
    cut_paste,
};

BlockOp block_op_from_string(const std::string& name);
std::string to_string(BlockOp op);
std::vector<BlockOp> all_block_ops();

struct BallConfig {
    size_t max_set_size = 4'000'000;  // guard against combinatorial blow-up
};

// All peg permutations reachable by one operation applied to members of the
// set, each canonically merged. Cut points may fall inside signed entries,
// splitting them into same-sign pieces.
std::set<PegPerm> apply_to_pegset(BlockOp op, const std::set<PegPerm>& s,
                                  const BallConfig& cfg = {});

// union of 0..k applications starting from {+1}
std::set<PegPerm> ball_pegset(BlockOp op, int k, const BallConfig& cfg = {});

// enumerate the radius-k ball around the identity
PolyclassResult ball_polynomial(BlockOp op, int k, const BallConfig& cfg = {});

// breadth-first search over S_n from the identity; exact ball sizes
long long bfs_ball(BlockOp op, int k, int n);
int op_distance(const Permutation& pi, BlockOp op);

// concrete single-move neighbours, used by the BFS oracle
std::vector<Permutation> op_neighbours(const Permutation& pi, BlockOp op);

} // namespace permpat
