#include <doctest.h>

#include "greenseq/green_search.hpp"
#include "support/fixtures.hpp"
#include "support/naive_search.hpp"
#include "support/properties.hpp"

using namespace greenseq;
namespace fx = greenseq::fixtures;

namespace {

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

SearchOptions to_depth(int d, SearchStrategy strategy = SearchStrategy::Bfs) {
    SearchOptions o;
    o.max_depth = d;
    o.strategy = strategy;
    return o;
}

using Ints = std::vector<int>;
using Blocks = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("GreenState bookkeeping") {
    const auto b = find_symmetrizer(fx::cycle3());
    GreenState s(b);
    CHECK(s.greens() == Ints{1, 2, 3});
    CHECK(s.reds().empty());
    CHECK_FALSE(s.all_red());
    s = s.advance(2);
    CHECK(s.greens() == Ints{1, 3});
    CHECK(s.reds() == Ints{2});
    CHECK(s.history() == MutationSequence{2});
    CHECK(s.c() == IntMatrix{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}});
    for (int k : {3, 1, 2}) s = s.advance(k);
    CHECK(s.reds() == Ints{1, 2, 3});
    CHECK(s.all_red());
    CHECK(s.extended().data() == fx::cycle3_trace()[4]);

    const auto gr = green_indices(s);
    CHECK(gr.greens.empty());
    CHECK(gr.reds == Ints{1, 2, 3});
    CHECK(green_indices(IntMatrix::identity(2)).greens == Ints{1, 2});
    CHECK(kind_of([] { (void)green_indices(IntMatrix{{1, 0}, {-1, 1}}); }) == ErrorKind::InternalSignViolation);
    CHECK(kind_of([] { (void)green_indices(IntMatrix{{0, 1}, {0, 1}}); }) == ErrorKind::InternalSignViolation);
    CHECK(kind_of([&] { (void)s.advance(4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("verify_sequence") {
    const auto b = find_symmetrizer(fx::cycle3());
    auto v = verify_sequence(b, {2, 3, 1, 2});
    CHECK(v.is_green_sequence);
    CHECK(v.is_green_to_red);
    CHECK(v.is_maximal_green);
    CHECK_FALSE(v.first_violation);

    v = verify_sequence(b, {1, 1});
    CHECK_FALSE(v.is_green_sequence);
    CHECK_FALSE(v.is_maximal_green);
    REQUIRE(v.first_violation);
    CHECK(v.first_violation->step == 2);
    CHECK(v.first_violation->index == 1);
    CHECK(v.first_violation->sign == ColumnSign::Red);

    v = verify_sequence(b, {2});
    CHECK(v.is_green_sequence);
    CHECK_FALSE(v.is_green_to_red);
    REQUIRE(v.first_violation);
    CHECK(v.first_violation->step == 1);
    CHECK(v.first_violation->index == 1);
    CHECK(v.first_violation->sign == ColumnSign::Green);

    const auto path = find_symmetrizer(fx::path2());
    v = verify_sequence(path, {2, 1});
    CHECK(v.is_maximal_green);
    CHECK(mutate_sequence(frame(path), {2, 1}).attached() == IntMatrix{{-1, 0}, {0, -1}});
    CHECK(mutate_sequence(frame(path), {1, 2}).attached() == IntMatrix{{0, -1}, {1, -1}});
    CHECK_FALSE(verify_sequence(path, {1, 2}).is_green_to_red);

    CHECK(verify_sequence(find_symmetrizer(fx::rank2_pair()), {1, 2}).is_maximal_green);
    CHECK(verify_sequence(find_symmetrizer(fx::five_vertex()), {2, 3, 1, 2, 4, 5}).is_maximal_green);
    CHECK(verify_sequence(find_symmetrizer(IntMatrix(0, 0)), {}).is_maximal_green);
    CHECK(kind_of([&] { (void)verify_sequence(b, {4}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("find_sequence: known answers") {
    for (auto strategy : {SearchStrategy::Bfs, SearchStrategy::Iddfs}) {
        CAPTURE(to_string(strategy));
        auto o = find_sequence(find_symmetrizer(fx::cycle3()), SearchTarget::MaximalGreen, to_depth(4, strategy));
        REQUIRE(o.found());
        CHECK(*o.sequence == MutationSequence{1, 2, 3, 1});
        CHECK(o.depth == 4);
        CHECK(o.states_visited > 0);

        o = find_sequence(find_symmetrizer(fx::path2()), SearchTarget::MaximalGreen, to_depth(3, strategy));
        REQUIRE(o.found());
        CHECK(*o.sequence == MutationSequence{2, 1});

        o = find_sequence(find_symmetrizer(fx::rank2_pair()), SearchTarget::MaximalGreen, to_depth(3, strategy));
        REQUIRE(o.found());
        CHECK(*o.sequence == MutationSequence{1, 2});

        o = find_sequence(find_symmetrizer(fx::weighted_cycle3()), SearchTarget::MaximalGreen, to_depth(6, strategy));
        REQUIRE(o.found());
        CHECK(*o.sequence == MutationSequence{1, 2, 3, 1, 2});

        o = find_sequence(find_symmetrizer(fx::cycle3()), SearchTarget::MaximalGreen, to_depth(3, strategy));
        CHECK(o.status == SearchStatus::ExhaustedToDepth);
        CHECK_FALSE(o.sequence);

        o = find_sequence(find_symmetrizer(fx::markov3()), SearchTarget::MaximalGreen, to_depth(6, strategy));
        CHECK(o.status == SearchStatus::ExhaustedToDepth);
        CHECK(o.depth == 6);

        o = find_sequence(find_symmetrizer(IntMatrix(0, 0)), SearchTarget::MaximalGreen, to_depth(0, strategy));
        REQUIRE(o.found());
        CHECK(o.sequence->empty());
    }
    CHECK(kind_of([] { (void)find_sequence(find_symmetrizer(fx::path2()), SearchTarget::MaximalGreen, to_depth(-1)); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("find_sequence: budgets") {
    SearchOptions o = to_depth(8);
    o.max_states = 5;
    CHECK(find_sequence(find_symmetrizer(fx::markov3()), SearchTarget::MaximalGreen, o).status == SearchStatus::OutOfBudget);
    o.strategy = SearchStrategy::Iddfs;
    CHECK(find_sequence(find_symmetrizer(fx::markov3()), SearchTarget::MaximalGreen, o).status == SearchStatus::OutOfBudget);
    o = to_depth(30);
    o.timeout = std::chrono::milliseconds(0);
    CHECK(find_sequence(find_symmetrizer(fx::markov3()), SearchTarget::GreenToRed, o).status == SearchStatus::OutOfBudget);
}

TEST_CASE("find_sequence: thread count does not change results") {
    testing::Rng rng(401);
    for (int i = 0; i < 100; ++i) {
        const auto b = find_symmetrizer(testing::random_skew_symmetrizable(rng, testing::random_size(rng, 2, 4), 2));
        SearchOptions one = to_depth(6), four = to_depth(6);
        four.threads = 4;
        const auto a = find_sequence(b, SearchTarget::MaximalGreen, one);
        const auto c = find_sequence(b, SearchTarget::MaximalGreen, four);
        CHECK(a.status == c.status);
        CHECK(a.sequence == c.sequence);
        CHECK(a.states_visited == c.states_visited);
    }
}

TEST_CASE("find_sequence agrees with brute-force enumeration") {
    testing::Rng rng(402);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::random_size(rng, 1, 3);
        const IntMatrix raw = testing::random_skew_symmetrizable(rng, n, 2);
        const auto b = find_symmetrizer(raw);
        const int d = testing::uniform(rng, 1, 5);
        for (auto target : {SearchTarget::MaximalGreen, SearchTarget::GreenToRed}) {
            const auto expected = testing::naive_first_sequence(raw, d, target == SearchTarget::MaximalGreen);
            const auto bfs = find_sequence(b, target, to_depth(d));
            const auto iddfs = find_sequence(b, target, to_depth(d, SearchStrategy::Iddfs));
            INFO(to_string(raw), " target ", to_string(target), " depth ", d);
            REQUIRE(bfs.status != SearchStatus::OutOfBudget);
            CHECK(bfs.found() == expected.has_value());
            CHECK(iddfs.found() == expected.has_value());
            if (expected) {
                CHECK(bfs.sequence->indices() == *expected);
                CHECK(iddfs.sequence->indices() == *expected);
            }
        }
    }
}

TEST_CASE("compose_mgs and split_mgs") {
    const auto five = find_symmetrizer(fx::five_vertex());
    const auto composed = compose_mgs(five, 3, {2, 3, 1, 2}, {1, 2});
    CHECK(composed == MutationSequence{2, 3, 1, 2, 4, 5});
    CHECK(verify_sequence(five, composed).is_maximal_green);
    const auto [left, right] = split_mgs(five, 3, composed);
    CHECK(left == MutationSequence{2, 3, 1, 2});
    CHECK(right == MutationSequence{1, 2});

    CHECK(kind_of([&] { (void)compose_mgs(five, 0, {}, {1}); }) == ErrorKind::InvalidSplit);
    CHECK(kind_of([&] { (void)compose_mgs(five, 5, {1}, {}); }) == ErrorKind::InvalidSplit);
    CHECK(kind_of([&] { (void)compose_mgs(five, 3, {2, 3, 1}, {1, 2}); }) == ErrorKind::InvalidInputSequence);
    CHECK(kind_of([&] { (void)compose_mgs(five, 3, {2, 3, 1, 2}, {2, 1}); }) == ErrorKind::InvalidInputSequence);
    CHECK(kind_of([&] { (void)compose_mgs(five, 3, {2, 3, 1, 2}, {1, 3}); }) == ErrorKind::InvalidInputSequence);

    // Reversed order puts the negative block below the diagonal.
    const int reversed[] = {4, 5, 1, 2, 3};
    const auto flipped = relabel(five, reversed);
    CHECK(kind_of([&] { (void)compose_mgs(flipped, 2, {1, 2}, {2, 3, 1, 2}); }) == ErrorKind::NonNegativityViolation);

    CHECK(kind_of([&] { (void)split_mgs(five, 3, {4, 2, 3, 1, 2, 5}); }) == ErrorKind::ShapeViolation);
    CHECK(kind_of([&] { (void)split_mgs(five, 3, {2, 3, 1, 2, 5, 4}); }) == ErrorKind::InvalidInputSequence);

    // Green-to-red sequences compose the same way.
    const auto g2r = compose_mgs(five, 3, {2, 3, 1, 2}, {1, 2}, SearchTarget::GreenToRed);
    CHECK(verify_sequence(five, g2r).is_green_to_red);
}

TEST_CASE("compose_mgs on block-diagonal matrices") {
    const auto diag = find_symmetrizer({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 3, 0}});
    const auto seq = compose_mgs(diag, 2, {2, 1}, {1, 2});
    CHECK(seq == MutationSequence{2, 1, 3, 4});
    CHECK(verify_sequence(diag, seq).is_maximal_green);
    const auto [a, c] = split_mgs(diag, 2, seq);
    CHECK(a == MutationSequence{2, 1});
    CHECK(c == MutationSequence{1, 2});
}

TEST_CASE("compose and split are mutually inverse on random block matrices") {
    testing::Rng rng(403);
    int composed = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::random_size(rng, 2, 5);
        const std::size_t split = testing::random_size(rng, 1, n - 1);
        const auto b = find_symmetrizer(testing::random_with_nonnegative_lower_left(rng, n, split, 2));
        std::vector<int> top, bottom;
        for (std::size_t j = 1; j <= n; ++j) (j <= split ? top : bottom).push_back(static_cast<int>(j));
        const auto s1 = find_sequence(principal_submatrix(b, top), SearchTarget::MaximalGreen, to_depth(6));
        const auto s2 = find_sequence(principal_submatrix(b, bottom), SearchTarget::MaximalGreen, to_depth(6));
        if (!s1.found() || !s2.found()) continue;
        ++composed;
        const auto seq = compose_mgs(b, split, *s1.sequence, *s2.sequence);
        CHECK(verify_sequence(b, seq).is_maximal_green);
        const auto [a, c] = split_mgs(b, split, seq);
        CHECK(a == *s1.sequence);
        CHECK(c == *s2.sequence);
        CHECK(compose_mgs(b, split, a, c) == seq);
    }
    CHECK(composed > 100);
}

TEST_CASE("reduce_and_search") {
    const auto five = find_symmetrizer(fx::five_vertex());
    auto r = reduce_and_search(five, SearchTarget::MaximalGreen, to_depth(4));
    REQUIRE(r.outcome.found());
    CHECK(*r.outcome.sequence == MutationSequence{1, 2, 3, 1, 4, 5});
    CHECK(verify_sequence(five, *r.outcome.sequence).is_maximal_green);
    CHECK(r.decomposition.blocks == Blocks{{1, 2, 3}, {4}, {5}});
    CHECK(r.block_outcomes.size() == 3);
    CHECK_FALSE(r.failing_block);

    r = reduce_and_search(find_symmetrizer(fx::path2()));
    REQUIRE(r.outcome.found());
    CHECK(*r.outcome.sequence == MutationSequence{2, 1});

    r = reduce_and_search(find_symmetrizer(fx::markov3()), SearchTarget::MaximalGreen, to_depth(6));
    CHECK(r.outcome.status == SearchStatus::ExhaustedToDepth);
    REQUIRE(r.failing_block);
    CHECK(*r.failing_block == 0);
    CHECK(r.decomposition.blocks[0] == Ints{1, 2, 3});

    // A permuted input maps the composed sequence back to the original labels.
    const int order[] = {5, 3, 4, 1, 2};
    const auto shuffled = relabel(five, order);
    r = reduce_and_search(shuffled, SearchTarget::MaximalGreen, to_depth(4));
    REQUIRE(r.outcome.found());
    CHECK(verify_sequence(shuffled, *r.outcome.sequence).is_maximal_green);

    r = reduce_and_search(five, SearchTarget::GreenToRed, to_depth(4));
    REQUIRE(r.outcome.found());
    CHECK(verify_sequence(five, *r.outcome.sequence).is_green_to_red);
}

TEST_CASE("acyclic matrices always reduce to a maximal green sequence") {
    testing::Rng rng(404);
    for (int i = 0; i < 200; ++i) {
        const auto b = find_symmetrizer(testing::random_acyclic(rng, testing::random_size(rng, 1, 5), 3));
        const auto r = reduce_and_search(b, SearchTarget::MaximalGreen, to_depth(1));
        INFO(to_string(b.matrix()));
        REQUIRE(r.outcome.found());
        CHECK(r.outcome.sequence->size() == b.size());
        CHECK(verify_sequence(b, *r.outcome.sequence).is_maximal_green);
    }
}

TEST_CASE("principal submatrices of examples with a maximal green sequence also have one") {
    for (const IntMatrix& raw : {fx::cycle3(), fx::weighted_cycle3(), fx::rank2_pair(), fx::path2(), fx::five_vertex()}) {
        const auto b = find_symmetrizer(raw);
        const auto whole = find_sequence(b, SearchTarget::MaximalGreen, to_depth(8));
        REQUIRE(whole.found());
        const int d = static_cast<int>(whole.sequence->size()) + 2;
        const std::size_t n = b.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> vertices;
            for (std::size_t v = 0; v < n; ++v)
                if (mask & (1u << v)) vertices.push_back(static_cast<int>(v + 1));
            const auto sub = find_sequence(principal_submatrix(b, vertices), SearchTarget::MaximalGreen, to_depth(d));
            INFO(to_string(raw), " mask ", mask);
            CHECK(sub.found());
        }
    }
}

TEST_CASE("property: green persistence during search") {
    testing::Rng rng(405);
    const auto report = testing::green_persistence_property(rng, 500);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
    CHECK(report.checks > 0);
}
