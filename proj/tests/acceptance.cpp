/*
 * Acceptance gate: four top-level criteria, each decomposed into named
 * sub-checks. Every criterion prints one [PASS]/[FAIL] line (sub-results
 * indented beneath it) and the process exits 0 exactly when all four pass.
 *
 *   1. byte-exact reproduction of the worked example, under one second
 *   2. randomized property suites, >= 200 exact instances each, under
 *      two minutes in total
 *   3. the command-line selftest reports the known hankel product-form
 *      discrepancy instead of hiding it, while the oracle itself passes
 *   4. structured inversion scales like n^2 multiplications against the
 *      n^3 growth of dense elimination, through n = 200
 */

#include "cma/bezoutian.hpp"
#include "cma/companion.hpp"
#include "cma/extension.hpp"
#include "cma/polynomial.hpp"
#include "cma/rational.hpp"
#include "cma/similarity.hpp"
#include "cma/statespace.hpp"
#include "cma/structured.hpp"
#include "cma/text_io.hpp"

#include "testutil.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace cma;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
    int failures = 0;

    bool sub(const std::string& name, bool ok) {
        std::cout << "  [" << (ok ? "PASS" : "FAIL") << "] " << name << "\n";
        if (!ok) ++failures;
        return ok;
    }

    void info(const std::string& text) {
        std::cout << "  [info] " << text << "\n";
    }
};

PolyVec pv(std::initializer_list<long> xs) {
    std::vector<Rat> c;
    for (long x : xs) c.emplace_back(x);
    return PolyVec(c);
}

const PolyVec WORKED_U = pv({4, 3, 2, 1});
const PolyVec WORKED_V = pv({1, 1, 1, 1});

/* ----------------------------------------------------------------- */
/* criterion 1: the worked example, byte-exact                        */
/* ----------------------------------------------------------------- */

bool criterion_worked_example() {
    Gate g;
    const auto start = Clock::now();
    const PolyVec& u = WORKED_U;

    g.sub("top companion matrix",
          companion(u, CompanionKind::Top) ==
              parse_matrix("-2, -3, -4; 1, 0, 0; 0, 1, 0;"));
    g.sub("right companion matrix",
          companion(u, CompanionKind::Right) ==
              parse_matrix("0, 0, -4; 1, 0, -3; 0, 1, -2;"));

    ToeplitzBand t1 = complete_band(u, parse_vector("-1, 0, 0"));
    g.sub("seed completion",
          t1.to_dense() ==
              parse_matrix("0, 0, -1; 1/4, 0, 0; -3/16, 1/4, 0;"));

    const Mat transformer = t1.to_dense() * companion(u, CompanionKind::Left);
    g.sub("shifted completion",
          transformer ==
              parse_matrix("1/4, 0, 0; -3/16, 1/4, 0; 1/64, -3/16, 1/4;"));

    /* the transformer is the exact inverse of the lower triangular factor,
     * certified by the product, not by an inversion */
    const Mat uplus = build_u_plus(u).to_dense();
    g.sub("triangular factor product",
          transformer * uplus == Mat::identity(3) &&
              uplus == parse_matrix("4, 0, 0; 3, 4, 0; 2, 3, 4;"));
    g.sub("band completion reproduces the transformer",
          complete_band(u, parse_vector("0, 0, 1/4")).to_dense() ==
              transformer);

    SimilarityReport rep = check_theorem_2_1(detect_toeplitz(transformer), u);
    g.sub("similarity report all pass", rep.all);

    const double elapsed = seconds_since(start);
    std::printf("  [info] elapsed %.3fs (limit 1s)\n", elapsed);
    if (elapsed >= 1.0) ++g.failures;
    return g.failures == 0;
}

/* ----------------------------------------------------------------- */
/* criterion 2: randomized property suites                            */
/* ----------------------------------------------------------------- */

bool suite_companion_identities(Gate& g) {
    cmatest::Rng rng(201);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 8);
        const PolyVec u = rng.poly(n);
        const Mat ct = companion(u, CompanionKind::Top);
        const Mat cb = companion(u, CompanionKind::Bottom);
        const Mat cl = companion(u, CompanionKind::Left);
        const Mat cr = companion(u, CompanionKind::Right);
        ok = ok && ct * cb == Mat::identity(n) && cl * cr == Mat::identity(n);
        ok = ok && ct.flip_secondary() == cr && cb.flip_secondary() == cl;
        ok = ok && ct.transpose() == companion(u, CompanionKind::Left, true);
        ok = ok && cb.transpose() == companion(u, CompanionKind::Right, true);
        Mat acc = Mat(n, n), p = Mat::identity(n);
        for (int i = 0; i <= n; ++i) {
            acc = acc + p.scaled(u.coeff1(i + 1));
            if (i < n) p = p * ct;
        }
        ok = ok && acc.is_zero();
        if (!ok) break;
    }
    return g.sub("companion identities (200 instances)", ok);
}

bool suite_triangular_transformer(Gate& g) {
    cmatest::Rng rng(202);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        std::vector<Rat> free(static_cast<std::size_t>(n), Rat(0));
        free.back() = u.first().reciprocal();
        SimilarityReport rep =
            check_theorem_2_1(complete_band(u, free), u, -3, 3);
        ok = ok && rep.all;
        if (!ok) break;
    }
    return g.sub("triangular transformer conjugates companion powers "
                 "(200 instances, k in [-3,3])",
                 ok);
}

bool suite_kernel_criterion_positive(Gate& g) {
    cmatest::Rng rng(203);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        SimilarityReport rep = check_theorem_2_1(rng.kernel_band(u), u, -3, 3);
        ok = ok && rep.stmt1 && rep.stmt2 && rep.stmt3 && rep.all;
        if (!ok) break;
    }
    return g.sub("kernel criterion accepts constructed completions "
                 "(200 instances)",
                 ok);
}

bool suite_kernel_criterion_negative(Gate& g) {
    cmatest::Rng rng(204);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        ToeplitzBand tb = rng.kernel_band(u);
        /* perturb the outermost band value; resample the step until the
         * perturbed matrix stays invertible */
        for (long delta = 1;; ++delta) {
            ToeplitzBand bad = tb;
            bad.band.back() += Rat(delta);
            if (mat_rank(bad.to_dense()) != n) continue;
            SimilarityReport rep = check_theorem_2_1(bad, u, -1, 1);
            ok = ok && !rep.stmt1 && !rep.stmt2 && !rep.stmt3 && !rep.all;
            break;
        }
        if (!ok) break;
    }
    return g.sub("kernel criterion rejects perturbed bands, all three "
                 "statements false (200 instances)",
                 ok);
}

bool suite_hankel_criterion(Gate& g) {
    cmatest::Rng rng(205);
    bool ok = true;
    int probe_a_held = 0, probe_a_total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(2, 8);
        const PolyVec u = rng.poly(n);
        ToeplitzBand tb = rng.kernel_band(u);
        HankelSimilarityReport rep =
            check_corollary_2_2(HankelBand(tb.n, tb.band), u, -3, 3);
        ok = ok && rep.stmt1 && rep.stmt2 && rep.stmt3 && rep.all;
        for (const auto& [k, held] : rep.probe_b) ok = ok && held;
        for (const auto& [k, held] : rep.probe_c) ok = ok && held;
        for (const auto& [k, held] : rep.probe_a) {
            if (k == 0 || k == 1) continue;
            ++probe_a_total;
            if (held) ++probe_a_held;
        }
        if (!ok) break;
    }
    g.info("alternate hankel conjugation probe held in " +
           std::to_string(probe_a_held) + "/" + std::to_string(probe_a_total) +
           " nontrivial powers (expected to fail; reported, not asserted)");
    return g.sub("hankel criterion through the column flip (200 instances)",
                 ok);
}

bool suite_bezoutian_forms(Gate& g) {
    cmatest::Rng rng(206);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 8);
        const PolyVec u = rng.poly(n);
        const PolyVec v = rng.poly(n);
        /* bez_toeplitz_gs internally evaluates both product orderings and
         * faults on disagreement, so one equality covers all three forms */
        ok = ok && bez_toeplitz_gs(u, v) == bez_toeplitz_oracle(u, v);
        if (!ok) break;
    }
    return g.sub("toeplitz bezoutian product forms equal the oracle "
                 "(200 instances)",
                 ok);
}

bool suite_unimodular_invariance(Gate& g) {
    cmatest::Rng rng(207);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 8);
        const PolyVec u = rng.poly(n);
        const PolyVec v = rng.poly(n);
        const auto phi = rng.unimodular2(); /* integer entries, det = 1 */
        std::vector<Rat> uc(static_cast<std::size_t>(n + 1));
        std::vector<Rat> vc(static_cast<std::size_t>(n + 1));
        for (int i = 1; i <= n + 1; ++i) {
            uc[i - 1] = phi[0] * u.coeff1(i) + phi[1] * v.coeff1(i);
            vc[i - 1] = phi[2] * u.coeff1(i) + phi[3] * v.coeff1(i);
        }
        const PolyVec u2{uc}, v2{vc};
        ok = ok && bez_toeplitz_oracle(u2, v2) == bez_toeplitz_oracle(u, v);
        ok = ok && bez_hankel_oracle(u2, v2) == bez_hankel_oracle(u, v);
        if (!ok) break;
    }
    return g.sub("unimodular generator changes leave both bezoutians "
                 "invariant (200 instances)",
                 ok);
}

bool suite_structured_inversion(Gate& g) {
    cmatest::Rng rng(208);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        /* mostly small sizes, a tail of larger ones up to n = 50 */
        const int n = trial < 188 ? rng.iuni(1, 8)
                                  : std::vector<int>{20, 35, 50}[trial % 3];
        ToeplitzBand tb = rng.invertible_band(n);
        const Mat dense = tb.to_dense();
        ok = ok && toeplitz_inverse_structured(tb) == dense.inverse();
        HankelBand hb(n, tb.band);
        ok = ok && hankel_inverse_structured(hb) == hb.to_dense().inverse();
        if (!ok) break;
    }
    return g.sub("structured inversion equals the dense cross-check, "
                 "toeplitz and hankel (200 instances, n up to 50)",
                 ok);
}

bool suite_bezoutian_similarity(Gate& g) {
    cmatest::Rng rng(209);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 8);
        auto [u, v] = rng.coprime_pair(n);
        ok = ok && bezoutian_similarity_check(u, v, -2, 2);
        if (!ok) break;
    }
    return g.sub("bezoutian conjugates companion powers for both "
                 "generators (200 instances, k in [-2,2])",
                 ok);
}

bool suite_extension_kernel(Gate& g) {
    cmatest::Rng rng(210);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 6);
        const PolyVec u = rng.poly(n);
        const Mat a = rng.invertible_mat(n);
        const bool hankel = rng.iuni(0, 1) == 1;
        const int k = rng.iuni(0, 4), l = -rng.iuni(0, 4);
        int s = rng.iuni(0, 4), t = -rng.iuni(0, 4);
        if (s == t) s = t + 1;
        ok = ok && check_extension_kernel(a, u,
                                          ExtensionSpec(k, l, s, t, hankel));
        if (!ok) break;
    }
    return g.sub("extension rank and kernel over extents in [-4,4] "
                 "(200 instances)",
                 ok);
}

bool suite_extension_structure(Gate& g) {
    cmatest::Rng rng(211);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(2, 6);
        const PolyVec u = rng.poly(n);
        ToeplitzBand tb = rng.kernel_band(u);
        const int k = rng.iuni(0, 4), l = -rng.iuni(0, 4);
        const int s = rng.iuni(0, 4), t = -rng.iuni(0, 4);
        /* In the equalized square grid the original window sits at diagonal
         * offset k+s-e for toeplitz bands and k-s for hankel bands. */
        const int e = std::max(k - l, s - t);
        try {
            ToeplitzBand ext = verify_structure_preservation(
                tb, u, ExtensionSpec(k, l, s, t));
            for (int d = 1 - n; d < n; ++d) {
                ok = ok && ext.at_offset(k + s - e + d) == tb.at_offset(d);
            }
            HankelBand hext = verify_structure_preservation_hankel(
                HankelBand(n, tb.band), u, ExtensionSpec(k, l, s, t, true));
            for (int d = 1 - n; d < n; ++d) {
                ok = ok && hext.at_offset(k - s + d) == tb.at_offset(d);
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) break;
    }
    return g.sub("structure preservation for kernel bands, toeplitz and "
                 "hankel (200 instances)",
                 ok);
}

bool suite_extension_factorization(Gate& g) {
    cmatest::Rng rng(212);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 6);
        const PolyVec u = rng.poly(n);
        /* arbitrary A, singular ones included */
        const Mat a = rng.mat(n, n);
        const bool hankel = rng.iuni(0, 1) == 1;
        const int k = rng.iuni(0, 3), l = -rng.iuni(0, 3);
        const int s = rng.iuni(0, 3), t = -rng.iuni(0, 3);
        const ExtensionSpec spec(k, l, s, t, hankel);
        const ExtensionGrid full = extend_full(a, u, spec);
        const Mat rows = extend_vertical(Mat::identity(n), u, k, l);
        const ExtensionGrid cols =
            extend_full(Mat::identity(n), u, ExtensionSpec(0, 0, s, t, hankel));
        ok = ok && rows * a * cols.matrix == full.matrix;

        const int i = rng.iuni(-1, 1), j = rng.iuni(-1, 1);
        const Mat shifted = companion_power(u, CompanionKind::Top, i) * a *
                            companion_power(u, CompanionKind::Right, j, hankel);
        const ExtensionGrid moved = extend_full(
            shifted, u, ExtensionSpec(k - i, l - i, s - j, t - j, hankel));
        ok = ok && moved.matrix == full.matrix;
        if (!ok) break;
    }
    return g.sub("extension factorization and generator equivalence "
                 "(200 instances)",
                 ok);
}

bool suite_extension_examples(Gate& g) {
    bool ok = true;
    const PolyVec& u = WORKED_U;

    /* (a) the 9x9 block display: all 49 aligned windows are companion
     * products */
    ExtensionGrid disp = extend_full(Mat::identity(3), u,
                                     ExtensionSpec(3, -3, 3, -3));
    for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
            ok = ok && grid_window(disp, 3, 3 - i, 3 + j) ==
                           companion_power(u, CompanionKind::Top, i) *
                               companion_power(u, CompanionKind::Right, j);
        }
    }
    ok = g.sub("block display: 49 aligned windows (n = 3)", ok) && ok;

    /* (b) triangular-inverse extension anatomy: zero middle band plus the
     * two triangular inverse systems */
    UplusReport rep = analyze_uplus_extension(u, ExtensionSpec(3, 0, 3, -3));
    bool anatomy = rep.structure_ok && rep.zero_middle_band && rep.below_ok &&
                   rep.above_ok && rep.all && rep.m == 6 && rep.h == 3;
    ok = g.sub("triangular inverse extension anatomy (n = 3)", anatomy) && ok;

    /* (c) the two bezoutian-inverse extensions share their central band */
    auto [gu, gv] =
        bezoutian_extension_pair(WORKED_U, WORKED_V, ExtensionSpec(1, 0, 1, 0));
    bool central = is_toeplitz(gu.matrix) && is_toeplitz(gv.matrix);
    if (central) {
        ToeplitzBand bu = detect_toeplitz(gu.matrix);
        ToeplitzBand bv = detect_toeplitz(gv.matrix);
        for (int d = -2; d <= 2; ++d) {
            central = central && bu.at_offset(1 + d) == bv.at_offset(1 + d);
        }
    }
    ok = g.sub("bezoutian extension pair agrees on the central band (n = 3)",
               central) &&
         ok;
    return ok;
}

bool suite_statespace_windows(Gate& g) {
    cmatest::Rng rng(213);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 6);
        SisoSystem sys(rng.poly(n), PolyVec(rng.vec(n + 1)));
        const std::vector<Rat> beta0 = rng.vec(n);
        const std::vector<Rat> inputs = rng.vec(rng.iuni(1, 6));
        Trajectory tr = simulate(controller_form(sys), beta0, inputs);
        std::vector<Rat> b = beta0;
        for (std::size_t k = 1; k < tr.states.size(); ++k) {
            b.push_back(tr.states[k].back());
        }
        auto [xs, ys] = b_to_io(b, sys);
        ok = ok && xs == inputs && ys == tr.outputs;
        if (!ok) break;
    }
    return g.sub("simulation windows reproduce inputs and outputs "
                 "(200 instances)",
                 ok);
}

bool suite_statespace_output_map(Gate& g) {
    cmatest::Rng rng(214);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 6);
        auto [u, v] = rng.coprime_pair(n);
        SisoSystem sys(u, v);
        Realization rc = controller_form(sys);
        std::vector<Rat> scaled = rc.D;
        for (Rat& e : scaled) e *= u.first();
        ok = ok && scaled == bez_toeplitz_oracle(u, v).row(0);
        if (!ok) break;
    }
    return g.sub("output map is the scaled first bezoutian row "
                 "(200 instances)",
                 ok);
}

bool suite_statespace_truncation(Gate& g) {
    cmatest::Rng rng(215);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 6);
        const PolyVec u = rng.poly(n);
        for (int p = 1; p <= n + 3; ++p) {
            Mat tu(p, p);
            for (int r = 0; r < p; ++r) {
                for (int c = 0; c <= r; ++c) {
                    if (r - c <= n) tu.at(r, c) = u.coeff1(r - c + 1);
                }
            }
            ok = ok && build_F(u, p).scaled(u.first().reciprocal()) * tu ==
                           Mat::identity(p);
        }
        if (!ok) break;
    }
    return g.sub("scaled recursion matrix inverts the banded truncation "
                 "(200 instances, p up to n+3)",
                 ok);
}

bool suite_statespace_closed_forms(Gate& g) {
    cmatest::Rng rng(216);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.iuni(1, 5);
        auto [u, v] = rng.coprime_pair(n);
        SisoSystem sys(u, v);
        const Mat bt = bez_toeplitz_oracle(u, v);

        const std::vector<Rat> beta0 = rng.vec(n);
        const std::vector<Rat> xs = rng.vec(rng.iuni(1, 4));
        Trajectory tr = simulate(controller_form(sys), beta0, xs);
        std::vector<Rat> seg = beta0;
        for (std::size_t k = 1; k < tr.states.size(); ++k) {
            seg.push_back(tr.states[k].back());
        }
        ok = ok && long_state(sys, beta0, xs) == seg;

        const std::vector<Rat> betap0 = rng.vec(n);
        Trajectory trt = simulate(transformed_form(sys), betap0, xs);
        ok = ok && late_state(sys, betap0, xs) == trt.states.back();

        const int q = rng.iuni(0, 3);
        const std::vector<Rat> mixed_in = rng.vec(q + rng.iuni(1, 3));
        const std::vector<Rat> head(mixed_in.begin(), mixed_in.begin() + q);
        const std::vector<Rat> tail(mixed_in.begin() + q, mixed_in.end());
        const std::vector<Rat> betap_q =
            q == 0 ? betap0
                   : simulate(transformed_form(sys), betap0, head).states.back();
        const std::vector<Rat> beta_q = mat_vec(bt.inverse(), betap_q);
        Trajectory tr2 = simulate(controller_form(sys), beta_q, tail);
        std::vector<Rat> want = beta_q;
        for (std::size_t k = 1; k < tr2.states.size(); ++k) {
            want.push_back(tr2.states[k].back());
        }
        ok = ok && mixed_state(sys, betap0, mixed_in, q) == want;
        if (!ok) break;
    }
    return g.sub("closed-form trajectory segments equal stepwise "
                 "simulation (200 instances)",
                 ok);
}

bool criterion_property_suites() {
    Gate g;
    const auto start = Clock::now();
    suite_companion_identities(g);
    suite_triangular_transformer(g);
    suite_kernel_criterion_positive(g);
    suite_kernel_criterion_negative(g);
    suite_hankel_criterion(g);
    suite_bezoutian_forms(g);
    suite_unimodular_invariance(g);
    suite_structured_inversion(g);
    suite_bezoutian_similarity(g);
    suite_extension_kernel(g);
    suite_extension_structure(g);
    suite_extension_factorization(g);
    suite_extension_examples(g);
    suite_statespace_windows(g);
    suite_statespace_output_map(g);
    suite_statespace_truncation(g);
    suite_statespace_closed_forms(g);
    const double elapsed = seconds_since(start);
    std::printf("  [info] elapsed %.1fs (limit 120s)\n", elapsed);
    if (elapsed >= 120.0) ++g.failures;
    return g.failures == 0;
}

/* ----------------------------------------------------------------- */
/* criterion 3: the selftest reports the known discrepancy            */
/* ----------------------------------------------------------------- */

bool criterion_selftest_report() {
    Gate g;
    const std::string cmd =
        std::string("\"") + CMA_CLI_PATH + "\" selftest 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        g.sub("selftest process started", false);
        return false;
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    const int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

    auto has = [&out](const char* needle) {
        return out.find(needle) != std::string::npos;
    };
    g.sub("selftest exits 0", status == 0);
    g.sub("selftest prints the hankel comparison block",
          has("hankel bezoutian comparison") && has("oracle:") &&
              has("literal-form-1:") && has("literal-form-2:"));
    g.sub("product-form mismatch is flagged, not patched",
          has("form1-matches-oracle: false") &&
              has("form2-matches-oracle: false") &&
              has("forms-mutually-flipped: true") && has("known issue"));
    g.sub("oracle symmetry and inverse checks pass",
          has("[PASS] hankel bezoutian oracle symmetry") &&
              has("[PASS] hankel bezoutian oracle inverse is hankel"));
    g.sub("no selftest check failed",
          has(", 0 failed") && !has("[FAIL]"));
    return g.failures == 0;
}

/* ----------------------------------------------------------------- */
/* criterion 4: multiplication-count scaling                          */
/* ----------------------------------------------------------------- */

ToeplitzBand random_integer_band(cmatest::Rng& rng, int n) {
    for (;;) {
        std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1));
        for (Rat& e : band) e = Rat(rng.iuni(-3, 3));
        if (band[static_cast<std::size_t>(n - 1)].is_zero()) {
            band[static_cast<std::size_t>(n - 1)] = Rat(1);
        }
        ToeplitzBand tb(n, band);
        try {
            toeplitz_inverse_structured(tb);
            return tb;
        } catch (const std::domain_error&) {
            /* singular draw; try again */
        }
    }
}

bool criterion_scaling() {
    Gate g;
    cmatest::Rng rng(400);
    const std::vector<int> sizes{25, 50, 100, 200};
    std::vector<double> fast_cost;
    std::vector<double> dense_cost;

    for (int n : sizes) {
        ToeplitzBand tb = random_integer_band(rng, n);
        reset_mul_count();
        Mat inv = toeplitz_inverse_structured(tb);
        fast_cost.push_back(static_cast<double>(mul_count()));

        /* spot-check correctness without contaminating the counters */
        const Mat dense = tb.to_dense();
        bool correct = true;
        if (n <= 50) {
            correct = dense * inv == Mat::identity(n);
        } else {
            for (int probe = 0; probe < 3; ++probe) {
                const int j = rng.iuni(0, n - 1);
                std::vector<Rat> ej(static_cast<std::size_t>(n), Rat(0));
                ej[static_cast<std::size_t>(j)] = Rat(1);
                std::vector<Rat> x = mat_vec(inv, ej);
                correct = correct && mat_vec(dense, x) == ej;
            }
        }
        g.sub("structured inversion correct at n = " + std::to_string(n),
              correct);

        if (n <= 100) {
            reset_mul_count();
            dense.inverse();
            dense_cost.push_back(static_cast<double>(mul_count()));
            std::printf("  [info] n=%d: structured muls=%.0f, dense muls=%.0f\n",
                        n, fast_cost.back(), dense_cost.back());
        } else {
            std::printf("  [info] n=%d: structured muls=%.0f\n", n,
                        fast_cost.back());
        }
    }

    bool fast_ok = true;
    for (std::size_t i = 1; i < fast_cost.size(); ++i) {
        const double slope = std::log(fast_cost[i] / fast_cost[i - 1]) /
                             std::log(double(sizes[i]) / double(sizes[i - 1]));
        std::printf("  [info] structured slope %d->%d: %.2f\n", sizes[i - 1],
                    sizes[i], slope);
        fast_ok = fast_ok && slope <= 2.35;
    }
    g.sub("structured multiplication growth has log-log slope <= 2.35",
          fast_ok);

    bool dense_ok = true;
    for (std::size_t i = 1; i < dense_cost.size(); ++i) {
        const double slope = std::log(dense_cost[i] / dense_cost[i - 1]) /
                             std::log(double(sizes[i]) / double(sizes[i - 1]));
        std::printf("  [info] dense slope %d->%d: %.2f\n", sizes[i - 1],
                    sizes[i], slope);
        dense_ok = dense_ok && slope >= 2.5;
    }
    g.sub("dense elimination growth has log-log slope >= 2.5", dense_ok);
    return g.failures == 0;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"criterion 1: exact reproduction of the worked example",
         criterion_worked_example},
        {"criterion 2: randomized exact property suites",
         criterion_property_suites},
        {"criterion 3: selftest reports the hankel product-form discrepancy",
         criterion_selftest_report},
        {"criterion 4: structured inversion scales quadratically",
         criterion_scaling},
    };

    int passed = 0;
    const int total = static_cast<int>(sizeof criteria / sizeof criteria[0]);
    for (const Criterion& c : criteria) {
        std::cout << "--- " << c.name << "\n";
        const bool ok = c.run();
        std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << c.name << "\n";
        if (ok) ++passed;
    }
    std::cout << passed << "/" << total << " criteria passed\n";
    return passed == total ? 0 : 1;
}
