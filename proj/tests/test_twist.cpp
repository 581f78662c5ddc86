// Transvection matrices, twist-word actions, Lefschetz numbers, and the
// circular reordering/conjugation pipeline.

#include "twistfloer/curves.hpp"
#include "twistfloer/errors.hpp"
#include "twistfloer/linalg.hpp"
#include "twistfloer/reorder.hpp"
#include "twistfloer/surface.hpp"
#include "twistfloer/twist.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace twistfloer;
using helpers::curve;
using helpers::make_matrix;
using helpers::make_vector;
using helpers::system_of;
using helpers::touch;

TEST_CASE("transvection matrix on the genus-2 interleaved basis") {
    AlgebraicSurface s = standard_surface(2);
    IntMatrix t = transvection_matrix(make_vector({1, 0, 0, 0}), +1, s);
    // x -> x + <x, a1> a1 sends b1 to b1 - a1 and fixes a1, a2, b2
    CHECK(matrices_equal(t, make_matrix({{1, -1, 0, 0},
                                         {0, 1, 0, 0},
                                         {0, 0, 1, 0},
                                         {0, 0, 0, 1}})));
    CHECK(matrices_equal(IntMatrix(t * make_vector({0, 1, 0, 0})),
                         IntMatrix(make_vector({-1, 1, 0, 0}))));

    // zero class: the pairing vanishes identically
    CHECK(matrices_equal(transvection_matrix(make_vector({0, 0, 0, 0}), +1, s),
                         IntMatrix(IntMatrix::Identity(4, 4))));

    // +1 and -1 twists about the same class invert each other
    IntMatrix u = transvection_matrix(make_vector({2, -1, 3, 5}), +1, s);
    IntMatrix v = transvection_matrix(make_vector({2, -1, 3, 5}), -1, s);
    CHECK(matrices_equal(u * v, IntMatrix::Identity(4, 4)));

    CHECK_THROWS_AS(transvection_matrix(make_vector({1, 0}), +1, s), input_error);
    CHECK_THROWS_AS(transvection_matrix(make_vector({1, 0, 0, 0}), 2, s), input_error);
}

TEST_CASE("word matrices compose first-letter-first") {
    CurveSystem sys = system_of(1, {curve("a", {1, 0}), curve("b", {0, 1})},
                                {touch("a", "b", 1)});
    IntMatrix ta = word_matrix({{"a", +1}}, sys);
    IntMatrix tb = word_matrix({{"b", +1}}, sys);
    CHECK(matrices_equal(ta, make_matrix({{1, -1}, {0, 1}})));
    CHECK(matrices_equal(tb, make_matrix({{1, 0}, {1, 1}})));

    // word [+a, +b]: apply T_a first, then T_b => matrix T_b * T_a
    IntMatrix w = word_matrix({{"a", +1}, {"b", +1}}, sys);
    CHECK(matrices_equal(w, IntMatrix(tb * ta)));
    CHECK(matrices_equal(w, make_matrix({{1, -1}, {1, 0}})));

    CHECK(matrices_equal(word_matrix({}, sys), IntMatrix::Identity(2, 2)));
    CHECK(matrices_equal(word_matrix({{"a", +1}, {"a", -1}}, sys),
                         IntMatrix::Identity(2, 2)));
    CHECK_THROWS_AS(word_matrix({{"ghost", +1}}, sys), input_error);
}

TEST_CASE("positive_word orders") {
    CurveSystem sys = system_of(2, {curve("x", {1, 0, 0, 0}), curve("y", {0, 1, 0, 0})},
                                {touch("x", "y", 1)});
    TwistWord w = positive_word(sys);
    REQUIRE(w.size() == 2);
    CHECK(w[0].curve == "x");
    CHECK(w[1].curve == "y");
    CHECK(w[0].sign == +1);

    TwistWord rev = positive_word(sys, {1, 0});
    CHECK(rev[0].curve == "y");
    CHECK(rev[1].curve == "x");

    CHECK_THROWS_AS(positive_word(sys, {0, 0}), input_error);
    CHECK_THROWS_AS(positive_word(sys, {0}), input_error);
    CHECK_THROWS_AS(positive_word(sys, {0, 2}), input_error);
}

TEST_CASE("lefschetz numbers") {
    CHECK(lefschetz_number(IntMatrix::Identity(4, 4)) == -2);
    CHECK(lefschetz_number(IntMatrix::Identity(6, 6)) == -4);
    CHECK(lefschetz_number(make_matrix({{0, 1}, {1, 0}})) == 2);
    CHECK_THROWS_AS(lefschetz_number(make_matrix({{1, 2, 3}, {4, 5, 6}})), input_error);
}

TEST_CASE("random words stay in the symplectic group with determinant one") {
    std::mt19937_64 rng(0x5F3759DF);
    std::uniform_int_distribution<int> coeff(-3, 3), len(0, 12), signd(0, 1), genus(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int g = genus(rng);
        AlgebraicSurface s = standard_surface(g);
        CurveSystem sys;
        sys.surface = s;
        for (int i = 0; i < 3; ++i) {
            IntVector cls(2 * g);
            bool zero = true;
            for (int k = 0; k < 2 * g; ++k) {
                cls(k) = coeff(rng);
                zero = zero && cls(k) == 0;
            }
            if (zero) cls(0) = 1;
            Curve c;
            c.name = "c" + std::to_string(i);
            c.cls = cls;
            sys.curves.push_back(c);
        }
        TwistWord w;
        for (int i = 0, L = len(rng); i < L; ++i)
            w.push_back({"c" + std::to_string(rng() % 3), signd(rng) ? +1 : -1});
        IntMatrix m = word_matrix(w, sys);
        CHECK(preserves_form(m, s.J));
        CHECK(det_bareiss(m) == 1);
    }
}

TEST_CASE("reorder moves on circular arrangements") {
    // path graph 0-1-2: 1 may never sit next to nobody; only the 0-2
    // adjacency is free
    std::vector<std::vector<char>> path = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};

    SECTION("already equal as circular classes: empty move list") {
        CHECK(reorder_moves(path, {0, 1, 2}, {0, 1, 2}).empty());
        // rotations are the same circular arrangement
        CHECK(reorder_moves(path, {0, 1, 2}, {2, 0, 1}).empty());
    }
    SECTION("swapping the free pair") {
        std::vector<ReorderMove> moves = reorder_moves(path, {0, 2, 1}, {2, 0, 1});
        CHECK_FALSE(moves.empty());
        auto history = replay_moves(path, {0, 2, 1}, moves);
        CHECK(oracles::canonical_rotation(history.back()) ==
              oracles::canonical_rotation({2, 0, 1}));
    }
    SECTION("oracle agreement on exhaustive 4-element arrangements") {
        std::vector<std::vector<char>> star = {
            {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}};
        std::vector<int> target = {0, 1, 2, 3};
        std::vector<int> arr = target;
        std::sort(arr.begin(), arr.end());
        do {
            bool oracle_says = oracles::reachable(star, arr, target);
            bool lib_says;
            std::vector<int> reached;
            try {
                auto moves = reorder_moves(star, arr, target);
                auto history = replay_moves(star, arr, moves);
                reached = history.back();
                lib_says = true;
            } catch (const internal_error&) {
                lib_says = false;
            }
            CHECK(lib_says == oracle_says);
            if (lib_says)
                CHECK(oracles::canonical_rotation(reached) ==
                      oracles::canonical_rotation(target));
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
    SECTION("bounds and misuse") {
        std::vector<std::vector<char>> big(11, std::vector<char>(11, 0));
        std::vector<int> id(11);
        std::iota(id.begin(), id.end(), 0);
        CHECK_THROWS_AS(reorder_moves(big, id, id), bound_error);
        CHECK_THROWS_AS(reorder_moves(path, {0, 1, 2}, {0, 1, 1}), input_error);
        CHECK_THROWS_AS(reorder_moves(path, {0, 1}, {1, 0, 2}), input_error);
    }
}

TEST_CASE("illegal moves are rejected during replay") {
    std::vector<std::vector<char>> path = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    ReorderMove swap_adjacent{ReorderMove::interior_swap, 1, 2};  // 0 and 1 are G-adjacent
    CHECK_THROWS_AS(replay_moves(path, {0, 1, 2}, {swap_adjacent}), input_error);
}

TEST_CASE("conjugation pipeline verifies the matrix identity") {
    // path system x - y - z on genus 2
    CurveSystem sys = system_of(2,
                                {curve("x", {1, 0, 0, 0}), curve("y", {0, 1, 0, 0}),
                                 curve("z", {1, 0, 1, 0})},
                                {touch("x", "y", 1), touch("y", "z", -1)});

    SECTION("identity permutation: empty conjugator") {
        ConjugationResult res = conjugate_reorder(sys, {0, 1, 2}, {0, 1, 2});
        CHECK(res.moves.empty());
        CHECK(res.word.empty());
        CHECK(res.residual_rotation == 0);
        CHECK(res.verified);
    }
    SECTION("pure rotation: conjugator from rotation factors only") {
        ConjugationResult res = conjugate_reorder(sys, {0, 1, 2}, {1, 2, 0});
        CHECK(res.moves.empty());
        CHECK(res.verified);
        IntMatrix f = res.conjugator_matrix;
        CHECK(matrices_equal(res.target_matrix * f, f * res.start_matrix));
    }
    SECTION("wrap swap of the free endpoints") {
        ConjugationResult res = conjugate_reorder(sys, {0, 1, 2}, {2, 1, 0});
        CHECK(res.verified);
        CHECK(matrices_equal(res.target_matrix * res.conjugator_matrix,
                             res.conjugator_matrix * res.start_matrix));
    }
    SECTION("all permutations of a star system") {
        CurveSystem star = system_of(2,
                                     {curve("c", {1, 0, 1, 0}), curve("p", {0, 1, 0, 0}),
                                      curve("q", {0, 0, 0, 1})},
                                     {touch("c", "p"), touch("c", "q")});
        std::vector<int> target = {0, 1, 2};
        do {
            ConjugationResult res = conjugate_reorder(star, {0, 1, 2}, target);
            CHECK(res.verified);
        } while (std::next_permutation(target.begin(), target.end()));
    }
    SECTION("the permutation must hit every curve once") {
        CHECK_THROWS_AS(conjugate_reorder(sys, {0, 1, 2}, {0, 1, 1}), input_error);
        CHECK_THROWS_AS(conjugate_reorder(sys, {0, 0, 2}, {0, 1, 2}), input_error);
    }
}

TEST_CASE("trace is invariant across twist orders") {
    CurveSystem sys = system_of(2,
                                {curve("x", {1, 0, 0, 0}), curve("y", {0, 1, 0, 0}),
                                 curve("z", {1, 0, 1, 0})},
                                {touch("x", "y", 1), touch("y", "z", -1)});
    std::vector<int> order = {0, 1, 2};
    Int t = word_matrix(positive_word(sys), sys).trace();
    do {
        CHECK(word_matrix(positive_word(sys, order), sys).trace() == t);
    } while (std::next_permutation(order.begin(), order.end()));
}
