#include "twistfloer/reorder.hpp"

#include "twistfloer/errors.hpp"
#include "twistfloer/linalg.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace twistfloer {

namespace {

std::vector<int> rotate_left(std::vector<int> v, int s) {
    std::rotate(v.begin(), v.begin() + s, v.end());
    return v;
}

// Lexicographically least rotation: the canonical representative of a circular
// arrangement (orientation preserved, so reflections are distinct).
std::vector<int> canonical_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (int s = 1; s < static_cast<int>(v.size()); ++s)
        best = std::min(best, rotate_left(v, s));
    return best;
}

void check_same_labels(const std::vector<int>& start, const std::vector<int>& target) {
    std::vector<int> a = start, b = target;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw input_error("reorder: arrangements are not permutations of "
                                  "the same labels");
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw input_error("reorder: repeated label in arrangement");
}

bool legal_swap(const std::vector<std::vector<char>>& adjacency, int x, int y) {
    return adjacency.at(x).at(y) == 0;
}

std::vector<int> apply_move(const std::vector<std::vector<char>>& adjacency,
                            const std::vector<int>& arr, const ReorderMove& m) {
    const int n = static_cast<int>(arr.size());
    auto bad = [&m](const std::string& why) {
        return input_error("illegal move at positions (" + std::to_string(m.pos1) + ", " +
                           std::to_string(m.pos2) + "): " + why);
    };
    std::vector<int> out = arr;
    if (m.kind == ReorderMove::interior_swap) {
        if (m.pos1 < 1 || m.pos1 >= n || m.pos2 != m.pos1 + 1)
            throw bad("interior swap must exchange consecutive positions");
        if (!legal_swap(adjacency, arr[m.pos1 - 1], arr[m.pos2 - 1]))
            throw bad("labels are adjacent in the intersection graph");
        std::swap(out[m.pos1 - 1], out[m.pos2 - 1]);
    } else {
        if (m.pos1 != 1 || m.pos2 != n)
            throw bad("wrap swap must exchange the first and last positions");
        if (!legal_swap(adjacency, arr.front(), arr.back()))
            throw bad("labels are adjacent in the intersection graph");
        std::swap(out.front(), out.back());
    }
    return out;
}

}  // namespace

std::vector<ReorderMove> reorder_moves(const std::vector<std::vector<char>>& adjacency,
                                       const std::vector<int>& start,
                                       const std::vector<int>& target) {
    const int n = static_cast<int>(start.size());
    if (n > 10)
        throw bound_error("reorder: arrangements longer than 10 are not supported");
    check_same_labels(start, target);
    if (n <= 1) return {};

    const std::vector<int> goal = canonical_rotation(target);
    if (canonical_rotation(start) == goal) return {};

    struct Node {
        std::vector<int> linear;
        int parent;
        ReorderMove move;
    };
    std::vector<Node> nodes{{start, -1, {}}};
    std::map<std::vector<int>, char> visited{{canonical_rotation(start), 1}};

    for (size_t head = 0; head < nodes.size(); ++head) {
        // Candidate moves in the frozen tie-break order: interior swaps by
        // position, then the wrap swap.
        std::vector<ReorderMove> candidates;
        for (int p = 1; p < n; ++p)
            candidates.push_back({ReorderMove::interior_swap, p, p + 1});
        candidates.push_back({ReorderMove::wrap_swap, 1, n});

        const std::vector<int> current = nodes[head].linear;
        for (const ReorderMove& m : candidates) {
            const int x = (m.kind == ReorderMove::interior_swap) ? current[m.pos1 - 1]
                                                                 : current.front();
            const int y = (m.kind == ReorderMove::interior_swap) ? current[m.pos2 - 1]
                                                                 : current.back();
            if (!legal_swap(adjacency, x, y)) continue;
            std::vector<int> next = apply_move(adjacency, current, m);
            std::vector<int> canon = canonical_rotation(next);
            if (!visited.emplace(canon, 1).second) continue;
            nodes.push_back({std::move(next), static_cast<int>(head), m});
            if (canon == goal) {
                std::vector<ReorderMove> path;
                for (int at = static_cast<int>(nodes.size()) - 1; at > 0;
                     at = nodes[at].parent)
                    path.push_back(nodes[at].move);
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    throw internal_error("reorder: target circular class unreachable "
                         "(expected impossible when the intersection graph is a forest)");
}

std::vector<std::vector<int>> replay_moves(const std::vector<std::vector<char>>& adjacency,
                                           const std::vector<int>& start,
                                           const std::vector<ReorderMove>& moves) {
    std::vector<std::vector<int>> history{start};
    for (const ReorderMove& m : moves)
        history.push_back(apply_move(adjacency, history.back(), m));
    return history;
}

TwistWord conjugator_word(const std::vector<ReorderMove>& moves,
                          const std::vector<std::vector<int>>& history,
                          const std::vector<std::string>& names) {
    if (history.size() != moves.size() + 1)
        throw input_error("conjugator_word: history does not match the move list");
    TwistWord word;
    for (size_t t = 0; t < moves.size(); ++t) {
        if (moves[t].kind != ReorderMove::wrap_swap) continue;  // commuting swap
        const std::vector<int>& before = history[t];
        const int i = before.front();
        const int j = before.back();
        // factor T_i o T_j^{-1}, first-applied-first
        word.push_back({names.at(j), -1});
        word.push_back({names.at(i), +1});
    }
    return word;
}

ConjugationResult conjugate_reorder(const CurveSystem& sys,
                                    const std::vector<int>& start,
                                    const std::vector<int>& target) {
    const int n = sys.size();
    auto check_perm = [n](const std::vector<int>& arr, const std::string& which) {
        if (static_cast<int>(arr.size()) != n)
            throw input_error(which + " arrangement must list every curve exactly once");
        std::vector<char> seen(n, 0);
        for (int i : arr) {
            if (i < 0 || i >= n || seen[i])
                throw input_error(which + " arrangement is not a permutation of the curves");
            seen[i] = 1;
        }
    };
    check_perm(start, "start");
    check_perm(target, "target");

    std::vector<std::string> names;
    for (const Curve& c : sys.curves) names.push_back(c.name);
    const auto adjacency = sys.adjacency();

    ConjugationResult res;
    res.moves = reorder_moves(adjacency, start, target);
    res.history = replay_moves(adjacency, start, res.moves);
    res.word = conjugator_word(res.moves, res.history, names);

    // The BFS lands in target's circular class; align the representative by
    // left rotations, each conjugating by its current leading twist
    // (T_{rot(L)} = T_{L1} o T_L o T_{L1}^{-1}).
    std::vector<int> final_arr = res.history.back();
    int s = 0;
    while (s < n && final_arr != target) {
        res.word.push_back({names.at(final_arr.front()), +1});
        final_arr = rotate_left(final_arr, 1);
        ++s;
    }
    if (n > 0 && final_arr != target)
        throw internal_error("conjugate_reorder: rotation alignment failed");
    res.residual_rotation = s;

    res.start_matrix = word_matrix(positive_word(sys, start), sys);
    res.target_matrix = word_matrix(positive_word(sys, target), sys);
    res.conjugator_matrix = word_matrix(res.word, sys);
    // target = F start F^{-1}, checked multiplicatively as target F = F start
    res.verified = matrices_equal(res.target_matrix * res.conjugator_matrix,
                                  res.conjugator_matrix * res.start_matrix);
    return res;
}

}  // namespace twistfloer
