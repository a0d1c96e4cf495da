#include <doctest.h>

#include "greenseq/coherence.hpp"
#include "support/fixtures.hpp"
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

CoherenceOptions enumerate_to(int depth) {
    CoherenceOptions o;
    o.depth = depth;
    o.use_certificates = false;
    return o;
}

}  // namespace

TEST_CASE("column sign predicates") {
    CHECK(column_sign_coherent(IntMatrix{{1, 0}, {2, -3}}));
    CHECK_FALSE(column_sign_coherent(IntMatrix{{1, 0}, {-1, 0}}));
    CHECK(row_sign_coherent(IntMatrix{{1, 2}, {0, -3}}));
    CHECK_FALSE(row_sign_coherent(IntMatrix{{1, -2}}));

    for (int j = 1; j <= 3; ++j) CHECK(column_sign(IntMatrix::identity(3), j) == ColumnSign::Green);
    const IntMatrix c{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}};
    CHECK(column_sign(c, 2) == ColumnSign::Red);
    CHECK(column_sign(c, 3) == ColumnSign::Green);
    CHECK(column_sign(IntMatrix{{0, -1}, {1, -1}}, 1) == ColumnSign::Green);
    CHECK(column_sign(IntMatrix{{0}, {0}}, 1) == ColumnSign::Zero);
    CHECK(column_sign(IntMatrix{{1}, {-1}}, 1) == ColumnSign::Mixed);
    CHECK(kind_of([&] { (void)column_sign(c, 4); }) == ErrorKind::IndexOutOfRange);

    CHECK(epsilon(ColumnSign::Green) == 1);
    CHECK(epsilon(ColumnSign::Red) == -1);
    CHECK(kind_of([] { (void)epsilon(ColumnSign::Zero); }) == ErrorKind::InternalSignViolation);
    CHECK(kind_of([] { (void)epsilon(ColumnSign::Mixed); }) == ErrorKind::InternalSignViolation);
}

TEST_CASE("uniform sign-coherence: examples") {
    const auto b1 = find_symmetrizer(fx::cycle3());
    const IntMatrix b2{{1, 2, 0}, {0, 1, 1}};
    auto v = check_uniform_sign_coherence(b1, b2, enumerate_to(6));
    CHECK(v.status == CoherenceStatus::VerifiedToDepth);
    CHECK(v.depth == 6);
    CHECK(v.certificate == CoherenceCertificate::None);
    CHECK(v.states_visited > 1);

    CoherenceOptions fast;
    v = check_uniform_sign_coherence(b1, b2, fast);
    CHECK(v.verified());
    CHECK(v.certificate == CoherenceCertificate::Nonnegative);

    for (int d : {0, 1, 4}) CHECK(check_uniform_sign_coherence(b1, IntMatrix(2, 3), enumerate_to(d)).verified());

    CHECK(kind_of([] { (void)check_uniform_sign_coherence(find_symmetrizer({{0}}), IntMatrix{{1}, {-1}}); }) ==
          ErrorKind::NotSignCoherentInput);
    CHECK(kind_of([&] { (void)check_uniform_sign_coherence(b1, IntMatrix{{1, 2}}); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("uniform sign-coherence: counterexamples replay to a mixed column") {
    testing::Rng rng(301);
    int found = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = testing::random_size(rng, 2, 3);
        const auto b1 = find_symmetrizer(testing::random_skew_symmetrizable(rng, n, 2));
        const auto b2 = testing::random_coherent(rng, 2, n, 2);
        const auto v = check_uniform_sign_coherence(b1, b2, enumerate_to(4));
        if (v.status != CoherenceStatus::Counterexample) continue;
        ++found;
        const auto& cx = *v.counterexample;
        const auto m = mutate_sequence(stack(b1, b2), cx.sequence);
        CHECK(column_sign(m.attached(), cx.column) == ColumnSign::Mixed);
        CHECK(cx.sequence.size() <= 4);
        for (std::size_t s = 1; s < cx.sequence.size(); ++s) CHECK(cx.sequence[s] != cx.sequence[s - 1]);
        // No shorter prefix is already mixed.
        MutationSequence prefix;
        for (std::size_t s = 0; s + 1 < cx.sequence.size(); ++s) {
            prefix.push_back(cx.sequence[s]);
            CHECK(column_sign_coherent(mutate_sequence(stack(b1, b2), prefix).attached()));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("uniform sign-coherence: rank at most one") {
    testing::Rng rng(302);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::random_size(rng, 1, 4);
        const auto b1 = find_symmetrizer(testing::random_skew_symmetrizable(rng, n, 3));
        const auto b2 = testing::random_rank_one_coherent(rng, testing::random_size(rng, 1, 3), n, 2);
        REQUIRE(exact_rank(b2) <= 1);
        const auto v = check_uniform_sign_coherence(b1, b2, enumerate_to(5));
        INFO(to_string(b1.matrix()), to_string(b2));
        CHECK(v.verified());
        const auto cert = check_uniform_sign_coherence(b1, b2, CoherenceOptions{});
        CHECK(cert.verified());
        CHECK(cert.certificate != CoherenceCertificate::None);
    }
}

TEST_CASE("uniform sign-coherence: closed under nonnegative scaling") {
    testing::Rng rng(303);
    int verified = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::random_size(rng, 1, 3);
        const auto b1 = find_symmetrizer(testing::random_skew_symmetrizable(rng, n, 2));
        const auto b2 = testing::random_coherent(rng, 2, n, 2);
        if (!check_uniform_sign_coherence(b1, b2, enumerate_to(4)).verified()) continue;
        ++verified;
        const auto p = testing::random_nonnegative(rng, testing::random_size(rng, 1, 3), 2, 3);
        CHECK(check_uniform_sign_coherence(b1, multiply(p, b2), enumerate_to(4)).verified());
    }
    CHECK(verified > 0);
}

TEST_CASE("scaling commutation") {
    const auto b1 = find_symmetrizer(fx::cycle3());
    const IntMatrix p{{1, 2, 0}, {0, 1, 1}};
    for (int k = 1; k <= 3; ++k) CHECK(scaling_commutation_check(b1, IntMatrix::identity(3), p, k));

    // Lower blocks of mu_k([B1; P]) computed independently.
    const std::vector<IntMatrix> expected{{{-1, 3, 0}, {0, 1, 1}}, {{1, -2, 2}, {0, -1, 2}}, {{1, 2, 0}, {1, 1, -1}}};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(mutate(stack(b1, p), static_cast<int>(k + 1)).attached() == expected[k]);
    }

    const IntMatrix b2{{2, -1, 0}, {0, -3, 1}};
    for (int k = 1; k <= 3; ++k) CHECK(scaling_commutation_check(b1, b2, IntMatrix::identity(2), k));

    CHECK(kind_of([&] { (void)scaling_commutation_check(find_symmetrizer(fx::path2()), IntMatrix{{1, 0}, {-1, 0}},
                                                       IntMatrix::identity(2), 1); }) == ErrorKind::NotSignCoherentInput);
    CHECK(kind_of([&] { (void)scaling_commutation_check(b1, b2, IntMatrix{{1, -1}}, 1); }) ==
          ErrorKind::NonNegativityViolation);
    CHECK(kind_of([&] { (void)scaling_commutation_check(b1, b2, IntMatrix{{1, 1, 1}}, 1); }) == ErrorKind::ShapeMismatch);
    CHECK(kind_of([&] { (void)scaling_commutation_check(b1, b2, IntMatrix::identity(2), 4); }) ==
          ErrorKind::IndexOutOfRange);
}

TEST_CASE("block invariance") {
    const auto five = find_symmetrizer(fx::five_vertex());
    // Explicit replay: the lower-right block survives 2,3,1,2.
    const auto trace = fx::five_vertex_trace();
    const std::size_t rows[] = {3, 4};
    for (std::size_t step = 0; step <= 4; ++step) CHECK(trace[step].submatrix(rows, rows) == IntMatrix{{0, -2}, {1, 0}});

    auto v = block_invariance_check(five, 3, enumerate_to(6));
    CHECK(v.verified());
    CHECK(v.depth == 6);

    CHECK(kind_of([&] { (void)block_invariance_check(five, 0); }) == ErrorKind::InvalidSplit);
    CHECK(kind_of([&] { (void)block_invariance_check(five, 5); }) == ErrorKind::InvalidSplit);

    const auto diag = find_symmetrizer({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 1, 0}});
    for (int d : {1, 3, 6}) CHECK(block_invariance_check(diag, 2, enumerate_to(d)).verified());
}

TEST_CASE("block invariance tracks coherence of the lower-left block one step later") {
    testing::Rng rng(304);
    int changed = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::random_size(rng, 3, 5);
        const std::size_t split = testing::random_size(rng, 1, n - 1);
        const IntMatrix raw = testing::random_skew_symmetrizable(rng, n, 2);
        const auto b = find_symmetrizer(raw);
        std::vector<int> top(split), bottom(n - split);
        for (std::size_t j = 0; j < split; ++j) top[j] = static_cast<int>(j + 1);
        for (std::size_t j = split; j < n; ++j) bottom[j - split] = static_cast<int>(j + 1);
        IntMatrix b2(n - split, split);
        for (std::size_t r = split; r < n; ++r)
            for (std::size_t c = 0; c < split; ++c) b2(r - split, c) = raw(r, c);
        const int d = testing::uniform(rng, 0, 4);
        const bool invariant = block_invariance_check(b, split, enumerate_to(d + 1)).verified();
        bool coherent = false;
        if (column_sign_coherent(b2)) {
            coherent = check_uniform_sign_coherence(principal_submatrix(b, top), b2, enumerate_to(d)).verified();
        }
        INFO(to_string(raw), " split ", split, " depth ", d);
        CHECK(invariant == coherent);
        changed += !invariant;
    }
    CHECK(changed > 0);
}

TEST_CASE("property: C-matrices are column sign-coherent") {
    testing::Rng rng(305);
    const auto report = testing::c_matrix_coherence_property(rng, 500);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
    CHECK(report.checks > 500);
}

TEST_CASE("property: scaling commutation") {
    testing::Rng rng(306);
    const auto report = testing::scaling_commutation_property(rng, 500);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
}

TEST_CASE("property: nonnegative attachments stay coherent") {
    testing::Rng rng(307);
    const auto report = testing::nonnegative_coherence_property(rng, 500);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
}
