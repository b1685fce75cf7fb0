#include "classify.hpp"
#include "doctest.h"
#include "e7.hpp"

using namespace tg;

namespace {

Bracket random_bracket(Rng& rng, int terms = 6) {
    Bracket b;
    for (int t = 0; t < terms; ++t) b.q()[rng.range(0, kDimW - 1)] = rng.small_rat_nonzero(2, 2);
    return b;
}

CoBracket random_cobracket(Rng& rng, int terms = 6) {
    CoBracket b;
    for (int t = 0; t < terms; ++t) b.q()[rng.range(0, kDimW - 1)] = rng.small_rat_nonzero(2, 2);
    return b;
}

TriGradedElement random_element(Rng& rng) {
    TriGradedElement x;
    x.m = random_cobracket(rng, 4);
    x.p = random_bracket(rng, 4);
    QMat X(6, 6), Y(3, 3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) X.at(i, j) = rng.small_rat(2, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Y.at(i, j) = rng.small_rat(2, 1);
    Rat t6 = X.trace() / 6, t3 = Y.trace() / 3;
    for (int i = 0; i < 6; ++i) X.at(i, i) -= t6;
    for (int i = 0; i < 3; ++i) Y.at(i, i) -= t3;
    x.z1 = X;
    x.z2 = Y;
    return x;
}

}  // namespace

TEST_CASE("carrier dimensions") {
    CHECK(kDimH0 == 43);
    CHECK(kDimE7 == 133);
    TriGradedElement x = random_element(*new Rng(1));
    auto v = flatten(x);
    CHECK(v.size() == 133);
    CHECK(unflatten(v) == x);
}

TEST_CASE("bracket calibration produced nonzero constants") {
    const E7Context& ctx = e7();
    CHECK(ctx.k2 != 0);
    CHECK(ctx.k3 != 0);
    CHECK(ctx.k4 != 0);
    CHECK(ctx.phi_c != 0);
    CHECK(ctx.kill_lambda != 0);
}

TEST_CASE("tri_bracket antisymmetry and grading") {
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        TriGradedElement a = random_element(rng), b = random_element(rng);
        TriGradedElement ab = tri_bracket(a, b), ba = tri_bracket(b, a);
        CHECK((ab + ba).is_zero());
        CHECK(tri_bracket(a, a).is_zero());
    }
    // grading: pure h1 x pure h1 lands in pure h-1, etc.
    TriGradedElement p1 = embed_p(u_basic(1)), p2 = embed_p(u_basic(2));
    TriGradedElement pp = tri_bracket(p1, p2);
    CHECK(pp.p.is_zero());
    CHECK(pp.z1.is_zero());
    CHECK(pp.z2.is_zero());
    TriGradedElement m1 = embed_m(standard_k_star());
    TriGradedElement pm = tri_bracket(p1, m1);
    CHECK(pm.p.is_zero());
    CHECK(pm.m.is_zero());
    TriGradedElement mm = tri_bracket(m1, embed_m(psi_raw(u_basic(1), u_basic(2))));
    CHECK(mm.m.is_zero());
    CHECK(mm.z1.is_zero());
    CHECK(mm.z2.is_zero());
}

TEST_CASE("jacobi identity holds exactly on random triples") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        TriGradedElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        TriGradedElement j =
            tri_bracket(tri_bracket(a, b), c) + tri_bracket(tri_bracket(b, c), a) + tri_bracket(tri_bracket(c, a), b);
        CHECK(j.is_zero());
    }
}

TEST_CASE("u-span is abelian") {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(psi_raw(u_basic(i), u_basic(j)).is_zero());
}

TEST_CASE("killing form properties") {
    // h1 x h1 isotropic by construction; invariance and sigma-antisymmetry hold.
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        TriGradedElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK(killing_form(tri_bracket(a, b), c) + killing_form(b, tri_bracket(a, c)) == 0);
        TriGradedElement pa = embed_p(random_bracket(rng)), pb = embed_p(random_bracket(rng));
        CHECK(killing_form(pa, pb) == 0);
    }
    // nondegeneracy via the trace-form comparison on a sample pair
    TriGradedElement x = embed_p(u_basic(1)), y = embed_m(standard_k_star());
    CHECK(killing_form(x, y) != 0);
}

TEST_CASE("killing form is proportional to the trace form of sigma-like operators") {
    // B(sigma(l)a, b) + B(a, sigma(l)b) = 0: sigma preserves B.
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Bracket l = random_bracket(rng);
        TriGradedElement a = random_element(rng), b = random_element(rng);
        TriGradedElement la = tri_bracket(embed_p(l), a), lb = tri_bracket(embed_p(l), b);
        CHECK(killing_form(la, b) + killing_form(a, lb) == 0);
    }
}

TEST_CASE("sigma matrix structure") {
    Bracket zero;
    CHECK(sigma(zero).q().is_zero());
    Bracket l = l_of(1, 2, 4);
    Mat s = sigma(l);
    // h0 block maps into h1, h1 into h-1: the other blocks vanish.
    const QMat& m = s.q();
    for (int i = 0; i < kDimE7; ++i)
        for (int j = 0; j < kDimE7; ++j) {
            bool in_R = i < kDimW && j >= kDimW + kDimH0;
            bool in_P = i >= kDimW && i < kDimW + kDimH0 && j < kDimW;
            bool in_Q = i >= kDimW + kDimH0 && j >= kDimW && j < kDimW + kDimH0;
            if (!in_R && !in_P && !in_Q) CHECK(m.at(i, j) == 0);
        }
    // sigma agrees with tri_bracket on basis vectors
    Rng rng(13);
    TriGradedElement x = random_element(rng);
    auto v = flatten(x);
    TriGradedElement lx = tri_bracket(embed_p(l), x);
    auto lv = flatten(lx);
    for (int i = 0; i < kDimE7; ++i) {
        Rat acc = 0;
        for (int j = 0; j < kDimE7; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == lv[i]);
    }
}

TEST_CASE("family one representative has graded kernel dims (3,1,3)") {
    Bracket l = l_of(1, 2, 4);
    SigmaBlocks sb = sigma_blocks(l);
    CHECK(kDimW - sb.cube_h1().rank() == 3);
    CHECK(kDimH0 - sb.cube_h0().rank() == 1);
    CHECK(kDimW - sb.cube_hm1().rank() == 3);
}

TEST_CASE("cubic action closed form matches the matrix cube up to one constant") {
    const E7Context& ctx = e7();
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        Bracket l = random_bracket(rng);
        SigmaBlocks sb = sigma_blocks(l);
        QMat cube = sb.cube_h1();
        QMat phi = phi_cube_W(l);
        CHECK(phi * ctx.phi_c == cube);
    }
    CHECK(phi_cube_W(Bracket()).is_zero());
    CHECK(kDimW - phi_cube_W(l_of(1, 2, 4)).rank() == 3);
}

TEST_CASE("duality of the cubic action across the killing pairing") {
    // The action on h-1 is minus the dual of the action on h1.
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Bracket l = random_bracket(rng);
        SigmaBlocks sb = sigma_blocks(l);
        QMat B1 = sb.cube_h1(), Bm1 = sb.cube_hm1();
        // pairing(p, m) with p in h1, m in h-1 is the coefficient contraction;
        // check <B1 p, m> = -<p, Bm1 m> on random vectors.
        Bracket p = random_bracket(rng);
        CoBracket m = random_cobracket(rng);
        W45<Rat> bp{}, bm{};
        for (int i = 0; i < kDimW; ++i) {
            Rat acc1 = 0, acc2 = 0;
            for (int j = 0; j < kDimW; ++j) {
                acc1 += B1.at(i, j) * p.q()[j];
                acc2 += Bm1.at(i, j) * m.q()[j];
            }
            bp[i] = acc1;
            bm[i] = acc2;
        }
        Rat lhs = 0, rhs = 0;
        for (int i = 0; i < kDimW; ++i) {
            lhs += bp[i] * m.q()[i];
            rhs += p.q()[i] * bm[i];
        }
        CHECK(lhs == -rhs);
    }
}

TEST_CASE("semisimple graded kernel pattern d+2, d, d+2") {
    auto check_pattern = [](const Bracket& l, int expected_k1) {
        GradedKernelDims d = graded_kernel_dims(l);
        CHECK(d.d1 == expected_k1);
        CHECK(d.dm1 == d.d1);
        CHECK(d.d1 == d.d0 + 2);
    };
    check_pattern(l_of(1, 2, 4), 3);                 // family 1
    check_pattern(l_of(0, 1, 2), 5);                 // family 2 semisimple part
    check_pattern(l_of(2, 1, 1), 5);                 // family 3 semisimple part
    check_pattern(l_of(0, -1, 1), 11);               // family 5
}
