#include "doctest.h"

#include "cma/bezoutian.hpp"
#include "cma/similarity.hpp"
#include "cma/text_io.hpp"

#include "testutil.hpp"

#include <stdexcept>

using namespace cma;

namespace {

PolyVec pv(std::initializer_list<long> xs) {
    std::vector<Rat> c;
    for (long x : xs) c.emplace_back(x);
    return PolyVec(c);
}

const PolyVec U = pv({4, 3, 2, 1});

} // namespace

TEST_CASE("standard example reports") {
    ToeplitzBand t(3, parse_vector("0, 0, 1/4, -3/16, 1/64"));
    CHECK(check_theorem_2_1(t, U).all);

    /* the intermediate transformer of the worked example */
    ToeplitzBand t1(3, parse_vector("-1, 0, 0, 1/4, -3/16"));
    CHECK(t1.to_dense() ==
          parse_matrix("0, 0, -1; 1/4, 0, 0; -3/16, 1/4, 0;"));
    CHECK(check_theorem_2_1(t1, U).all);

    /* the identity is Toeplitz but does not commute the companions */
    ToeplitzBand id3 = detect_toeplitz(Mat::identity(3));
    SimilarityReport rep = check_theorem_2_1(id3, U);
    CHECK_FALSE(rep.stmt1);
    CHECK_FALSE(rep.stmt2);
    CHECK_FALSE(rep.stmt3);
    CHECK_FALSE(rep.all);
}

TEST_CASE("kernel criterion holds for constructed completions") {
    cmatest::Rng rng(71);
    for (int trial = 0; trial < 220; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        ToeplitzBand t = rng.kernel_band(u);
        SimilarityReport rep = check_theorem_2_1(t, u);
        CHECK(rep.stmt1);
        CHECK(rep.stmt2);
        CHECK(rep.stmt3);
        CHECK(rep.all);
        for (const auto& [k, ok] : rep.power_checks) {
            (void)k;
            CHECK(ok);
        }
    }
}

TEST_CASE("kernel criterion rejects perturbed bands, all statements together") {
    cmatest::Rng rng(72);
    for (int trial = 0; trial < 220; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        ToeplitzBand t = rng.kernel_band(u);
        for (long delta = 1;; ++delta) {
            std::vector<Rat> bad = t.band;
            bad.back() += Rat(delta);
            ToeplitzBand tbad(n, bad);
            if (mat_rank(tbad.to_dense()) != n) continue;
            SimilarityReport rep = check_theorem_2_1(tbad, u);
            /* the three statements are equivalent: they fail jointly */
            CHECK_FALSE(rep.stmt1);
            CHECK_FALSE(rep.stmt2);
            CHECK_FALSE(rep.stmt3);
            CHECK_FALSE(rep.all);
            break;
        }
    }
}

TEST_CASE("kernel criterion preconditions") {
    ToeplitzBand t(3, parse_vector("0, 0, 1/4, -3/16, 1/64"));
    CHECK_THROWS_AS(check_theorem_2_1(t, pv({0, 1, 2, 3})),
                    std::invalid_argument);
    ToeplitzBand z(3, std::vector<Rat>(5, Rat(0)));
    CHECK_THROWS_AS(check_theorem_2_1(z, U), std::domain_error);
    CHECK_THROWS_AS(check_theorem_2_1(t, pv({1, 2})), std::invalid_argument);
}

TEST_CASE("hankel criterion tracks the toeplitz one through the flip") {
    cmatest::Rng rng(73);
    int probe_a_held = 0, total = 0;
    for (int trial = 0; trial < 220; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        ToeplitzBand t = rng.kernel_band(u);
        HankelBand h(n, t.band);
        HankelSimilarityReport rep = check_corollary_2_2(h, u);
        CHECK(rep.stmt1);
        CHECK(rep.stmt2);
        CHECK(rep.stmt3);
        CHECK(rep.all);
        for (const auto& [k, ok] : rep.probe_b) {
            (void)k;
            CHECK(ok);
        }
        for (const auto& [k, ok] : rep.probe_c) {
            (void)k;
            CHECK(ok);
        }
        ++total;
        bool held = true;
        for (const auto& [k, ok] : rep.probe_a) {
            if (k != 0 && k != 1 && !ok) held = false;
        }
        if (held) ++probe_a_held;
    }
    /* finding: the probe-a power relation fails beyond trivial powers */
    MESSAGE("probe-a hankel power relation held beyond k in {0,1} in ",
            probe_a_held, "/", total, " instances");
}

TEST_CASE("hankel criterion hand case and negative") {
    /* n = 2, u = (1,1,1): the single constraint a_{-1} + a_0 + a_1 = 0 */
    HankelBand h(2, {Rat(1), Rat(1), Rat(-2)});
    HankelSimilarityReport rep = check_corollary_2_2(h, pv({1, 1, 1}));
    CHECK(rep.stmt1);
    CHECK(rep.all);

    /* the flip matrix J is Hankel but no generic u annihilates del(J) */
    HankelBand j3(3, {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(j3.to_dense() == Mat::identity(3).flip_cols());
    HankelSimilarityReport repj = check_corollary_2_2(j3, U);
    CHECK_FALSE(repj.stmt1);
    CHECK_FALSE(repj.all);
}

TEST_CASE("triangular factor conjugates companion powers") {
    cmatest::Rng rng(74);
    for (int trial = 0; trial < 220; ++trial) {
        const int n = rng.iuni(2, 6);
        const PolyVec u = rng.poly(n);
        Mat up = build_u_plus(u).to_dense();
        Mat upi = up.inverse();
        for (long k = -3; k <= 3; ++k) {
            CHECK(up * companion_power(u, CompanionKind::Top, k) * upi ==
                  companion_power(u, CompanionKind::Right, k));
        }
    }
}

TEST_CASE("shift transforms preserve the transformer property") {
    cmatest::Rng rng(75);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.iuni(2, 6);
        const PolyVec u = rng.poly(n);
        ToeplitzBand t = rng.kernel_band(u);
        Mat a = t.to_dense();
        /* iterate the closure property three times on each side */
        for (int step = 0; step < 3; ++step) {
            a = shift_transform(a, u, step % 2 == 0 ? ShiftSide::PreTop
                                                    : ShiftSide::PostRight);
            Mat ai = a.inverse();
            CHECK(ai * companion(u, CompanionKind::Top) * a ==
                  companion(u, CompanionKind::Right));
        }
    }
    CHECK_THROWS_AS(shift_transform(Mat(2, 2), pv({1, 1, 1}),
                                    ShiftSide::PreTop),
                    std::domain_error);
}

TEST_CASE("controllability and observability matrices") {
    Mat ct = companion(U, CompanionKind::Top);
    std::vector<Rat> e1{Rat(1), Rat(0), Rat(0)};
    Mat c = ctrb(ct, e1);
    CHECK(c.col(0) == e1);
    CHECK(c.col(1) == std::vector<Rat>{Rat(-2), Rat(1), Rat(0)});
    CHECK(c.col(2) == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});

    Mat o = obsv(e1, Mat::identity(3));
    for (int i = 0; i < 3; ++i) CHECK(o.row(i) == e1);
    CHECK(ctrb(Mat::identity(3), e1).col(2) == e1);
    CHECK_THROWS_AS(ctrb(Mat(2, 3), e1), std::invalid_argument);
}

TEST_CASE("canonical similarity between the two standard realizations") {
    /* pinned counterexample to the printed bezoutian cross-check */
    bool match = true;
    Mat q = canonical_q({Rat(2), Rat(-3), Rat(1)}, {Rat(1), Rat(5), Rat(-2)},
                        &match);
    CHECK(q == parse_matrix("1, 5, -2; 5, -2, -17; -2, -17, -52;"));
    CHECK_FALSE(match);

    /* scalar case: everything is 1x1 and the cross-check holds */
    Mat q1 = canonical_q({Rat(7)}, {Rat(3)}, &match);
    CHECK(q1.rows() == 1);
    CHECK(match);

    /* common factor between numerator and denominator: z^2 vs z
     * (coefficients a = (0,0), b = (1,0)) -> unobservable, reported.
     * Not every common-root pair degenerates: a = (2,1), b = (1,1)
     * (u = (z+1)^2, v = z+1) keeps all four Krylov matrices invertible
     * and the construction goes through. */
    CHECK_THROWS_AS(canonical_q({Rat(0), Rat(0)}, {Rat(1), Rat(0)}, nullptr),
                    std::domain_error);
    CHECK_NOTHROW(canonical_q({Rat(2), Rat(1)}, {Rat(1), Rat(1)}, nullptr));

    cmatest::Rng rng(76);
    int held = 0, total = 0;
    while (total < 60) {
        const int n = rng.iuni(1, 5);
        std::vector<Rat> a = rng.vec(n), b = rng.vec(n);
        try {
            bool m = false;
            Mat qq = canonical_q(a, b, &m);
            (void)qq;
            ++total;
            if (m) ++held;
        } catch (const std::domain_error&) {
            /* uncontrollable or unobservable sample; try another */
        }
    }
    MESSAGE("bezoutian cross-check held in ", held, "/", total,
            " random canonical instances (reported, not asserted)");
}

TEST_CASE("bezoutian conjugates companion powers for both generators") {
    cmatest::Rng rng(77);
    for (int trial = 0; trial < 220; ++trial) {
        const int n = rng.iuni(1, 8);
        auto [u, v] = rng.coprime_pair(n);
        CHECK(bezoutian_similarity_check(u, v));
    }
    CHECK_THROWS_AS(bezoutian_similarity_check(U, U), std::domain_error);
}
