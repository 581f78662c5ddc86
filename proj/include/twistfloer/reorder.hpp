#ifndef TWISTFLOER_REORDER_HPP
#define TWISTFLOER_REORDER_HPP

#include "twistfloer/twist.hpp"

#include <vector>

namespace twistfloer {

/// One legal move on a circular arrangement of twist labels: swapping two
/// circle-neighbors that are not adjacent in the intersection graph.
/// interior_swap exchanges positions (p, p+1) of the current linear
/// arrangement; wrap_swap exchanges positions (1, n). Positions are 1-based.
struct ReorderMove {
    enum Kind { interior_swap, wrap_swap } kind = interior_swap;
    int pos1 = 0, pos2 = 0;
};

/// Exhaustive breadth-first search over circular arrangements (equality up to
/// rotation only — the moves preserve the circle's orientation). Labels are
/// 0-based curve indices; adjacency is the forest G. Returns the legal move
/// sequence transforming start into target as circular arrangements.
/// Tie-break: interior swaps by position, then wrap; FIFO order.
/// Throws bound_error for n > 10 and internal_error if the search space is
/// exhausted without success (the reordering lemma rules that out for
/// forests, so it would signal a bug).
std::vector<ReorderMove> reorder_moves(const std::vector<std::vector<char>>& adjacency,
                                       const std::vector<int>& start,
                                       const std::vector<int>& target);

/// Replay moves from the start arrangement; returns every intermediate
/// arrangement (history.front() == start, history.back() == final).
/// Throws input_error on an illegal move.
std::vector<std::vector<int>> replay_moves(const std::vector<std::vector<char>>& adjacency,
                                           const std::vector<int>& start,
                                           const std::vector<ReorderMove>& moves);

/// The conjugating word accumulated move by move: interior swaps contribute
/// nothing (the swapped twists commute); a wrap_swap with element i at
/// position 1 and j at position n contributes the factor
/// f_{i,j} = T_i o T_j^{-1}. Factors compose in move order (first move's
/// factor applied first). Labels in the returned word are curve indices
/// resolved through `names`.
TwistWord conjugator_word(const std::vector<ReorderMove>& moves,
                          const std::vector<std::vector<int>>& history,
                          const std::vector<std::string>& names);

/// Full reorder-and-conjugate pipeline between linear arrangements: BFS to the
/// circular class of `target`, the lemma's wrap-swap factors, plus one
/// rotation conjugator T_{L1} per residual left-rotation of the final
/// arrangement (T_{rot(L)} = T_{L1} o T_L o T_{L1}^{-1}), appended after the
/// move factors. The returned word F satisfies
///   word_matrix(T_target) = F * word_matrix(T_start) * F^{-1}
/// exactly; `verified` records that identity's outcome.
struct ConjugationResult {
    std::vector<ReorderMove> moves;
    std::vector<std::vector<int>> history;
    TwistWord word;          // move factors then rotation factors
    int residual_rotation = 0;
    bool verified = false;
    IntMatrix start_matrix, target_matrix, conjugator_matrix;
};
ConjugationResult conjugate_reorder(const CurveSystem& sys,
                                    const std::vector<int>& start,
                                    const std::vector<int>& target);

}  // namespace twistfloer

#endif
