#include "e7.hpp"

#include <cassert>

namespace tg {

int eps3(int a, int b, int c) {
    if (a == b || a == c || b == c) return 0;
    int inv = (a > b) + (a > c) + (b > c);
    return inv % 2 == 0 ? 1 : -1;
}

int eps6(int a, int b, int c, int d, int e, int f) {
    int v[6] = {a, b, c, d, e, f};
    int inv = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (v[i] == v[j]) return 0;
            inv += v[i] > v[j];
        }
    return inv % 2 == 0 ? 1 : -1;
}

TriGradedElement TriGradedElement::operator+(const TriGradedElement& o) const {
    TriGradedElement r;
    r.m = m + o.m;
    r.z1 = z1 + o.z1;
    r.z2 = z2 + o.z2;
    r.p = p + o.p;
    return r;
}

TriGradedElement TriGradedElement::operator-(const TriGradedElement& o) const {
    TriGradedElement r;
    r.m = m - o.m;
    r.z1 = z1 - o.z1;
    r.z2 = z2 - o.z2;
    r.p = p - o.p;
    return r;
}

TriGradedElement TriGradedElement::operator*(const Rat& c) const {
    TriGradedElement r;
    r.m = m * c;
    r.z1 = z1 * c;
    r.z2 = z2 * c;
    r.p = p * c;
    return r;
}

bool TriGradedElement::operator==(const TriGradedElement& o) const {
    return m == o.m && z1 == o.z1 && z2 == o.z2 && p == o.p;
}

TriGradedElement embed_m(const CoBracket& m) {
    TriGradedElement x;
    x.m = m;
    return x;
}

TriGradedElement embed_z(const QMat& z1, const QMat& z2) {
    if (z1.trace() != 0 || z2.trace() != 0) throw param_error("h0 blocks must be traceless");
    TriGradedElement x;
    x.z1 = z1;
    x.z2 = z2;
    return x;
}

TriGradedElement embed_p(const Bracket& p) {
    TriGradedElement x;
    x.p = p;
    return x;
}

namespace {

// h0 coordinates: sl6 off-diagonals (row-major, skipping the diagonal), sl6
// diagonal entries 0..4, then the sl3 analogues.
void flatten_h0(const QMat& X, const QMat& Y, Rat* out) {
    int k = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (a != b) out[k++] = X.at(a, b);
    for (int a = 0; a < 5; ++a) out[k++] = X.at(a, a);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) out[k++] = Y.at(a, b);
    for (int a = 0; a < 2; ++a) out[k++] = Y.at(a, a);
    assert(k == kDimH0);
}

void unflatten_h0(const Rat* in, QMat& X, QMat& Y) {
    X = QMat(6, 6);
    Y = QMat(3, 3);
    int k = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (a != b) X.at(a, b) = in[k++];
    Rat tr6 = 0;
    for (int a = 0; a < 5; ++a) {
        X.at(a, a) = in[k];
        tr6 += in[k++];
    }
    X.at(5, 5) = -tr6;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) Y.at(a, b) = in[k++];
    Rat tr3 = 0;
    for (int a = 0; a < 2; ++a) {
        Y.at(a, a) = in[k];
        tr3 += in[k++];
    }
    Y.at(2, 2) = -tr3;
}

// [h1,h1] -> h-1 (and the mirrored [h-1,h-1] -> h1): wedge the two-form parts
// into the volume form and the g_{-2} parts into the dual line.
template <class T>
W45<T> pair_wedge_core(const W45<T>& a, const W45<T>& b) {
    W45<T> out{};
    for (int I = 0; I < 3; ++I)
        for (int pa = 0; pa < kPairs; ++pa) {
            const T& ca = a[widx(I, pa)];
            if (ca == T(0)) continue;
            auto [i, j] = pair_of(pa);
            for (int J = 0; J < 3; ++J) {
                if (J == I) continue;
                int R = 3 - I - J;
                int s3 = eps3(I, J, R);
                for (int pb = 0; pb < kPairs; ++pb) {
                    const T& cb = b[widx(J, pb)];
                    if (cb == T(0)) continue;
                    auto [p, q] = pair_of(pb);
                    bool used[6] = {false, false, false, false, false, false};
                    used[i] = used[j] = true;
                    if (used[p] || used[q]) continue;
                    used[p] = used[q] = true;
                    int s = -1, t = -1;
                    for (int u = 0; u < 6; ++u)
                        if (!used[u]) (s < 0 ? s : t) = u;
                    int s6 = eps6(i, j, p, q, s, t);
                    out[widx(R, pair_index(s, t))] += ca * cb * T(s6 * s3);
                }
            }
        }
    return out;
}

// Trace-free contractions of p (x) m: along (g_{-2}, first g_{-1}* slot) into a
// gl(g_{-1}*) block, and along both g_{-1}* slots into a gl(g_{-2}) block.
template <class T>
void contr_core(const W45<T>& p, const W45<T>& m, std::array<T, 36>& V, std::array<T, 9>& U) {
    WFull<T> pf = expand_full(p), mf = expand_full(m);
    V.fill(T(0));
    U.fill(T(0));
    for (int j = 0; j < 6; ++j)
        for (int q = 0; q < 6; ++q) {
            T acc{};
            for (int I = 0; I < 3; ++I)
                for (int t = 0; t < 6; ++t) acc += pf[I][t][j] * mf[I][t][q];
            V[j * 6 + q] = acc;
        }
    for (int I = 0; I < 3; ++I)
        for (int J = 0; J < 3; ++J) {
            T acc{};
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) acc += pf[I][i][j] * mf[J][i][j];
            U[I * 3 + J] = acc;
        }
    T trV{};
    for (int i = 0; i < 6; ++i) trV += V[i * 6 + i];
    trV = trV / T(6);
    for (int i = 0; i < 6; ++i) V[i * 6 + i] -= trV;
    T trU{};
    for (int I = 0; I < 3; ++I) trU += U[I * 3 + I];
    trU = trU / T(3);
    for (int I = 0; I < 3; ++I) U[I * 3 + I] -= trU;
}

// Contragredient action of (A, B) on W*.
template <class T>
W45<T> coact_core(const std::array<T, 36>& A, const std::array<T, 9>& B, const W45<T>& m) {
    WFull<T> mf = expand_full(m);
    W45<T> out{};
    for (int J = 0; J < 3; ++J)
        for (int pp = 0; pp < kPairs; ++pp) {
            auto [p, q] = pair_of(pp);
            T acc{};
            for (int i = 0; i < 6; ++i) {
                acc -= A[i * 6 + p] * mf[J][i][q];
                acc -= A[i * 6 + q] * mf[J][p][i];
            }
            for (int I = 0; I < 3; ++I) acc -= B[I * 3 + J] * mf[I][p][q];
            out[widx(J, pp)] = acc;
        }
    return out;
}

std::array<Rat, 36> flat6_of(const QMat& m) {
    std::array<Rat, 36> a{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i * 6 + j] = m.at(i, j);
    return a;
}
std::array<Rat, 9> flat3_of(const QMat& m) {
    std::array<Rat, 9> a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i * 3 + j] = m.at(i, j);
    return a;
}
QMat mat_of6(const std::array<Rat, 36>& a) {
    QMat m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m.at(i, j) = a[i * 6 + j];
    return m;
}
QMat mat_of3(const std::array<Rat, 9>& a) {
    QMat m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = a[i * 3 + j];
    return m;
}

Bracket mk_bracket(const W45<Rat>& v) {
    Bracket b;
    b.q() = v;
    return b;
}
CoBracket mk_cobracket(const W45<Rat>& v) {
    CoBracket b;
    b.q() = v;
    return b;
}

W45<Rat> rand_w(Rng& rng, int terms) {
    W45<Rat> v{};
    for (int t = 0; t < terms; ++t) v[rng.range(0, kDimW - 1)] = rng.small_rat_nonzero(3, 2);
    return v;
}

// Closed-form cubic action on W, evaluated by trilinear expansion over the
// stored terms of l. For an operand u^v(x)c and terms t2, t3 the two summands
// are: the volume pairing of the four-form (t2,t3-wedges) with the operand,
// tensored with the z2(x)(z1^z3) - 1/3 z1(x)(z2^z3) action on c; and the
// half-weighted derivation of t1's two-form along the (t2, t3, operand)
// contraction, with the -2/3 trace correction, tensored with z1(x)(z2^z3).
template <class T, class MatT>
MatT phi_matrix(const W45<T>& l) {
    const T third = T(1) / T(3);
    struct Term {
        int I, i, j;
        T c;
    };
    std::vector<Term> terms;
    for (int I = 0; I < 3; ++I)
        for (int p = 0; p < kPairs; ++p) {
            const T& c = l[widx(I, p)];
            if (c == T(0)) continue;
            auto [i, j] = pair_of(p);
            terms.push_back({I, i, j, c});
        }
    MatT out(kDimW, kDimW);
    auto add_form = [&out](int I_out, int a, int b, const T& val, int col) {
        if (a == b || val == T(0)) return;
        int row = widx(I_out, pair_index(a, b));
        if (a < b)
            out.at(row, col) += val;
        else
            out.at(row, col) -= val;
    };
    for (int Jw = 0; Jw < 3; ++Jw)
        for (int pw = 0; pw < kPairs; ++pw) {
            int col = widx(Jw, pw);
            auto [u, v] = pair_of(pw);
            for (const Term& t2 : terms)
                for (const Term& t3 : terms) {
                    // gamma_R = eps3(I3, Jw, R); skip if the U contraction dies
                    int g1 = eps3(t3.I, Jw, 0), g2 = eps3(t3.I, Jw, 1), g3 = eps3(t3.I, Jw, 2);
                    if (g1 == 0 && g2 == 0 && g3 == 0) continue;
                    const int gam[3] = {g1, g2, g3};
                    int volume = eps6(t2.i, t2.j, t3.i, t3.j, u, v);
                    // C[j][q] = sum_p (x2^y2)[p][j] eps6(x3,y3,u,v,p,q)
                    T c23 = t2.c * t3.c;
                    T vol_c = volume == 0 ? T(0) : c23 * T(volume);
                    // derivation images C(x1), C(y1) need only columns of C
                    auto Ccol = [&](int q1) {
                        // returns C(a^{q1}) as a 6-vector
                        std::array<T, 6> w{};
                        for (int jj : {t2.i, t2.j}) {
                            int p = (jj == t2.i) ? t2.j : t2.i;
                            int sign = (jj == t2.j) ? 1 : -1;  // (x2^y2)[p][jj]
                            int e = eps6(t3.i, t3.j, u, v, p, q1);
                            if (e != 0) w[jj] += T(sign * e);
                        }
                        return w;
                    };
                    T trC{};
                    for (int jj : {t2.i, t2.j}) {
                        int p = (jj == t2.i) ? t2.j : t2.i;
                        int sign = (jj == t2.j) ? 1 : -1;
                        int e = eps6(t3.i, t3.j, u, v, p, jj);
                        if (e != 0) trC += T(sign * e);
                    }
                    for (const Term& t1 : terms) {
                        T w3 = t1.c * c23;
                        // U-direction summand
                        if (volume != 0) {
                            if (gam[t1.I] != 0) add_form(t2.I, t1.i, t1.j, w3 * T(volume * gam[t1.I]), col);
                            if (gam[t2.I] != 0)
                                add_form(t1.I, t1.i, t1.j, -w3 * T(volume * gam[t2.I]) * third, col);
                        }
                        // derivation summand, weighted by gamma at t2's slot
                        if (gam[t2.I] != 0) {
                            T wg = w3 * T(gam[t2.I]);
                            std::array<T, 6> cxi = Ccol(t1.i), cyi = Ccol(t1.j);
                            for (int s = 0; s < 6; ++s) {
                                if (cxi[s] != T(0)) add_form(t1.I, s, t1.j, wg * cxi[s], col);
                                if (cyi[s] != T(0)) add_form(t1.I, t1.i, s, wg * cyi[s], col);
                            }
                            if (trC != T(0)) add_form(t1.I, t1.i, t1.j, -wg * trC * third, col);
                        }
                    }
                }
        }
    return out;
}

struct RawBlocks {
    // kappa-free blocks of sigma(l); the V and U contraction parts are kept
    // separate so calibration can weight them.
    QMat R{kDimW, kDimW};
    QMat PV{kDimH0, kDimW};
    QMat PU{kDimH0, kDimW};
    QMat Q{kDimW, kDimH0};
};

RawBlocks raw_blocks(const W45<Rat>& l) {
    RawBlocks rb;
    for (int col = 0; col < kDimW; ++col) {
        W45<Rat> e{};
        e[col] = 1;
        W45<Rat> r = pair_wedge_core(l, e);
        for (int i = 0; i < kDimW; ++i) rb.R.at(i, col) = r[i];
        std::array<Rat, 36> V;
        std::array<Rat, 9> U;
        contr_core(l, e, V, U);
        Rat coords[kDimH0];
        flatten_h0(mat_of6(V), QMat(3, 3), coords);
        for (int i = 0; i < kDimH0; ++i) rb.PV.at(i, col) = coords[i];
        flatten_h0(QMat(6, 6), mat_of3(U), coords);
        for (int i = 0; i < kDimH0; ++i) rb.PU.at(i, col) = coords[i];
    }
    for (int col = 0; col < kDimH0; ++col) {
        Rat coords[kDimH0] = {};
        coords[col] = 1;
        QMat X, Y;
        unflatten_h0(coords, X, Y);
        W45<Rat> w = algebra_act_core<Rat>(flat6_of(X), flat3_of(Y), l);
        for (int i = 0; i < kDimW; ++i) rb.Q.at(i, col) = -w[i];
    }
    return rb;
}

TriGradedElement tri_bracket_with(const E7Context& ctx, const TriGradedElement& a, const TriGradedElement& b) {
    TriGradedElement out;
    // h-1 part: wedge of the two h1 parts plus the h0 coactions.
    W45<Rat> mm = pair_wedge_core(a.p.q(), b.p.q());
    W45<Rat> c1 = coact_core<Rat>(flat6_of(a.z1), flat3_of(a.z2), b.m.q());
    W45<Rat> c2 = coact_core<Rat>(flat6_of(b.z1), flat3_of(b.z2), a.m.q());
    for (int i = 0; i < kDimW; ++i) out.m.q()[i] = mm[i] + c1[i] - c2[i];

    // h1 part: weighted mirror wedge plus the h0 actions.
    W45<Rat> pp = pair_wedge_core(a.m.q(), b.m.q());
    W45<Rat> t1 = algebra_act_core<Rat>(flat6_of(a.z1), flat3_of(a.z2), b.p.q());
    W45<Rat> t2 = algebra_act_core<Rat>(flat6_of(b.z1), flat3_of(b.z2), a.p.q());
    for (int i = 0; i < kDimW; ++i) out.p.q()[i] = ctx.k2 * pp[i] + t1[i] - t2[i];

    // h0 part: block commutators plus the weighted contractions.
    out.z1 = a.z1 * b.z1 - b.z1 * a.z1;
    out.z2 = a.z2 * b.z2 - b.z2 * a.z2;
    std::array<Rat, 36> Vab, Vba;
    std::array<Rat, 9> Uab, Uba;
    contr_core(a.p.q(), b.m.q(), Vab, Uab);
    contr_core(b.p.q(), a.m.q(), Vba, Uba);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out.z1.at(i, j) += ctx.k3 * (Vab[i * 6 + j] - Vba[i * 6 + j]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.z2.at(i, j) += ctx.k4 * (Uab[i * 3 + j] - Uba[i * 3 + j]);
    return out;
}

E7Context calibrate_bracket() {
    E7Context ctx;
    Rng rng(0x7015u);
    std::vector<std::array<Rat, 3>> rows;
    auto push_rows = [&rows](const W45<Rat>& a, const W45<Rat>& b, const W45<Rat>& c) {
        for (int i = 0; i < kDimW; ++i) {
            if (a[i] == 0 && b[i] == 0 && c[i] == 0) continue;
            rows.push_back({a[i], b[i], c[i]});
        }
    };

    for (int trial = 0; trial < 8; ++trial) {
        W45<Rat> p1 = rand_w(rng, 5), p2 = rand_w(rng, 5), m = rand_w(rng, 5);
        // Jacobi on (h1, h1, h-1): k2 against the two contraction weights.
        W45<Rat> k2v = pair_wedge_core(pair_wedge_core(p1, p2), m);
        std::array<Rat, 36> V2m, V1m;
        std::array<Rat, 9> U2m, U1m;
        contr_core(p2, m, V2m, U2m);
        contr_core(p1, m, V1m, U1m);
        W45<Rat> y1 = algebra_act_core<Rat>(V2m, flat3_of(QMat(3, 3)), p1);
        W45<Rat> y2 = algebra_act_core<Rat>(V1m, flat3_of(QMat(3, 3)), p2);
        W45<Rat> z1 = algebra_act_core<Rat>(flat6_of(QMat(6, 6)), U2m, p1);
        W45<Rat> z2 = algebra_act_core<Rat>(flat6_of(QMat(6, 6)), U1m, p2);
        W45<Rat> k3v{}, k4v{};
        for (int i = 0; i < kDimW; ++i) {
            k3v[i] = y1[i] - y2[i];
            k4v[i] = z1[i] - z2[i];
        }
        push_rows(k2v, k3v, k4v);
    }
    for (int trial = 0; trial < 6; ++trial) {
        W45<Rat> p = rand_w(rng, 5), m1 = rand_w(rng, 5), m2 = rand_w(rng, 5);
        // Jacobi on (h1, h-1, h-1).
        W45<Rat> k2v = pair_wedge_core(pair_wedge_core(m1, m2), p);
        std::array<Rat, 36> V1, V2;
        std::array<Rat, 9> U1, U2;
        contr_core(p, m1, V1, U1);
        contr_core(p, m2, V2, U2);
        W45<Rat> a1 = coact_core<Rat>(V1, flat3_of(QMat(3, 3)), m2);
        W45<Rat> a2 = coact_core<Rat>(V2, flat3_of(QMat(3, 3)), m1);
        W45<Rat> b1 = coact_core<Rat>(flat6_of(QMat(6, 6)), U1, m2);
        W45<Rat> b2 = coact_core<Rat>(flat6_of(QMat(6, 6)), U2, m1);
        W45<Rat> k3v{}, k4v{};
        for (int i = 0; i < kDimW; ++i) {
            k3v[i] = a1[i] - a2[i];
            k4v[i] = b1[i] - b2[i];
        }
        push_rows(k2v, k3v, k4v);
    }

    QMat sys(static_cast<int>(rows.size()), 3);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < 3; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    auto kernel = sys.kernel_basis();
    if (kernel.size() != 1) throw domain_error("bracket calibration kernel is not one-dimensional");
    mpz_class den = 1;
    for (const Rat& r : kernel[0]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    mpz_class g = 0;
    for (const Rat& r : kernel[0]) {
        mpz_class n = r.get_num() * (den / r.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) throw domain_error("bracket calibration degenerate");
    std::array<Rat, 3> k;
    for (int i = 0; i < 3; ++i) k[i] = kernel[0][i] * Rat(den) / Rat(g);
    if (k[1] < 0)
        for (auto& r : k) r = -r;
    ctx.k2 = k[0];
    ctx.k3 = k[1];
    ctx.k4 = k[2];
    if (ctx.k2 == 0 || ctx.k3 == 0 || ctx.k4 == 0) throw domain_error("degenerate bracket constants");
    return ctx;
}

void calibrate_killing(E7Context& ctx) {
    Rng rng(0x51ull);
    auto rand_elt = [&rng]() {
        TriGradedElement x;
        x.m.q() = rand_w(rng, 4);
        x.p.q() = rand_w(rng, 4);
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
    };
    auto b_parts = [](const TriGradedElement& a, const TriGradedElement& b) {
        std::array<Rat, 3> v;
        v[0] = pairing(a.p, b.m) + pairing(b.p, a.m);
        v[1] = (a.z1 * b.z1).trace();
        v[2] = (a.z2 * b.z2).trace();
        return v;
    };
    std::vector<std::array<Rat, 3>> rows;
    for (int trial = 0; trial < 12; ++trial) {
        TriGradedElement a = rand_elt(), b = rand_elt(), c = rand_elt();
        TriGradedElement ab = tri_bracket_with(ctx, a, b), ac = tri_bracket_with(ctx, a, c);
        auto r1 = b_parts(ab, c), r2 = b_parts(b, ac);
        std::array<Rat, 3> row{r1[0] + r2[0], r1[1] + r2[1], r1[2] + r2[2]};
        if (row[0] == 0 && row[1] == 0 && row[2] == 0) continue;
        rows.push_back(row);
    }
    QMat sys(static_cast<int>(rows.size()), 3);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < 3; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    auto kernel = sys.kernel_basis();
    if (kernel.size() != 1) throw domain_error("killing calibration kernel is not one-dimensional");
    std::array<Rat, 3> k{kernel[0][0], kernel[0][1], kernel[0][2]};
    if (k[0] == 0) throw domain_error("killing pairing constant vanished");
    if (k[0] < 0)
        for (auto& r : k) r = -r;
    ctx.kill_lambda = k[0];
    ctx.kill_t6 = k[1];
    ctx.kill_t3 = k[2];
}

void calibrate_phi(E7Context& ctx) {
    Rng rng(0xF1ull);
    bool have = false;
    for (int trial = 0; trial < 3; ++trial) {
        W45<Rat> l = rand_w(rng, 6);
        RawBlocks rb = raw_blocks(l);
        QMat P = rb.PV * ctx.k3 + rb.PU * ctx.k4;
        QMat cube = rb.Q * (P * rb.R);
        QMat phi = phi_matrix<Rat, QMat>(l);
        Rat c;
        bool found = false;
        for (int i = 0; i < kDimW && !found; ++i)
            for (int j = 0; j < kDimW && !found; ++j)
                if (phi.at(i, j) != 0) {
                    c = cube.at(i, j) / phi.at(i, j);
                    found = true;
                }
        if (!found) continue;
        if (!(phi * c == cube))
            throw domain_error("sigma^3 is not proportional to the phi formula (k2=" + rat_str(ctx.k2) +
                               " k3=" + rat_str(ctx.k3) + " k4=" + rat_str(ctx.k4) + ")");
        if (have && c != ctx.phi_c) throw domain_error("phi proportionality constant is not fixed");
        ctx.phi_c = c;
        have = true;
    }
    if (!have || ctx.phi_c == 0) throw domain_error("phi calibration failed");
}

void fit_dictionary(E7Context& ctx) {
    Rng rng(0xD1C7ull);
    struct Sample {
        Rat e1, e2, e3, p2, p4, p6;
    };
    std::vector<Sample> samples;
    while (samples.size() < 18) {
        Rat x = rng.small_rat_nonzero(4, 2), y = rng.small_rat_nonzero(4, 2), z = rng.small_rat_nonzero(4, 2);
        QMat M = phi_matrix<Rat, QMat>(l_of(x, y, z).q());
        QMat M2 = M * M;
        QMat M4 = M2 * M2;
        Rat p1 = M.trace(), p3 = 0, p5 = 0, p2 = 0, p4 = 0, p6 = 0;
        for (int i = 0; i < kDimW; ++i)
            for (int j = 0; j < kDimW; ++j) {
                p2 += M.at(i, j) * M.at(j, i);
                p3 += M2.at(i, j) * M.at(j, i);
                p4 += M2.at(i, j) * M2.at(j, i);
                p5 += M4.at(i, j) * M.at(j, i);
                p6 += M4.at(i, j) * M2.at(j, i);
            }
        if (p1 != 0 || p3 != 0 || p5 != 0)
            throw domain_error("odd trace powers of the cubic operator do not vanish");
        Rat c1 = x * x * x, c2 = y * y * y, c3 = z * z * z;
        samples.push_back({c1 + c2 + c3, c1 * c2 + c1 * c3 + c2 * c3, c1 * c2 * c3, p2, p4, p6});
    }
    auto fit = [&samples](int arity, auto monomials, Rat Sample::*target, Rat* out) {
        QMat A(static_cast<int>(samples.size()), arity);
        std::vector<Rat> b(samples.size());
        for (size_t i = 0; i < samples.size(); ++i) {
            auto row = monomials(samples[i]);
            for (int j = 0; j < arity; ++j) A.at(static_cast<int>(i), j) = row[j];
            b[i] = samples[i].*target;
        }
        if (A.rank() != arity) throw domain_error("dictionary sample set is degenerate");
        auto sol = A.solve(b);
        if (!sol) throw domain_error("dictionary fit inconsistent");
        for (int j = 0; j < arity; ++j) out[j] = (*sol)[j];
    };
    fit(2, [](const Sample& s) { return std::vector<Rat>{s.e1 * s.e1, s.e2}; }, &Sample::p2, ctx.dict2.data());
    fit(4,
        [](const Sample& s) {
            Rat e12 = s.e1 * s.e1;
            return std::vector<Rat>{e12 * e12, e12 * s.e2, s.e2 * s.e2, s.e1 * s.e3};
        },
        &Sample::p4, ctx.dict4.data());
    fit(7,
        [](const Sample& s) {
            Rat e12 = s.e1 * s.e1, e22 = s.e2 * s.e2;
            return std::vector<Rat>{e12 * e12 * e12,   e12 * e12 * s.e2,   e12 * e22, e22 * s.e2,
                                    e12 * s.e1 * s.e3, s.e1 * s.e2 * s.e3, s.e3 * s.e3};
        },
        &Sample::p6, ctx.dict6.data());
    if (ctx.dict2[1] == 0) throw domain_error("dictionary p2 does not expose e2");
    if (ctx.dict4[3] == 0) throw domain_error("dictionary p4 does not expose e3");
    if (ctx.dict6[6] == 0) throw domain_error("dictionary p6 does not expose e3^2");
}

}  // namespace

const E7Context& e7() {
    static const E7Context ctx = [] {
        E7Context c = calibrate_bracket();
        calibrate_killing(c);
        calibrate_phi(c);
        fit_dictionary(c);
        return c;
    }();
    return ctx;
}

CoBracket psi_raw(const Bracket& a, const Bracket& b) { return mk_cobracket(pair_wedge_core(a.q(), b.q())); }

Bracket phi_mirror_raw(const CoBracket& a, const CoBracket& b) {
    return mk_bracket(pair_wedge_core(a.q(), b.q()));
}

void contraction_raw(const Bracket& p, const CoBracket& m, QMat* v_out, QMat* u_out) {
    std::array<Rat, 36> V;
    std::array<Rat, 9> U;
    contr_core(p.q(), m.q(), V, U);
    if (v_out) *v_out = mat_of6(V);
    if (u_out) *u_out = mat_of3(U);
}

std::vector<Rat> flatten(const TriGradedElement& x) {
    std::vector<Rat> v(kDimE7);
    for (int i = 0; i < kDimW; ++i) v[i] = x.m.q()[i];
    Rat coords[kDimH0];
    flatten_h0(x.z1, x.z2, coords);
    for (int i = 0; i < kDimH0; ++i) v[kDimW + i] = coords[i];
    for (int i = 0; i < kDimW; ++i) v[kDimW + kDimH0 + i] = x.p.q()[i];
    return v;
}

TriGradedElement unflatten(const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != kDimE7) throw shape_error("carrier vector must have 133 coordinates");
    TriGradedElement x;
    for (int i = 0; i < kDimW; ++i) x.m.q()[i] = v[i];
    unflatten_h0(v.data() + kDimW, x.z1, x.z2);
    for (int i = 0; i < kDimW; ++i) x.p.q()[i] = v[kDimW + kDimH0 + i];
    return x;
}

TriGradedElement tri_bracket(const TriGradedElement& a, const TriGradedElement& b) {
    return tri_bracket_with(e7(), a, b);
}

Rat killing_form(const TriGradedElement& a, const TriGradedElement& b) {
    const E7Context& ctx = e7();
    Rat acc = ctx.kill_lambda * (pairing(a.p, b.m) + pairing(b.p, a.m));
    acc += ctx.kill_t6 * (a.z1 * b.z1).trace();
    acc += ctx.kill_t3 * (a.z2 * b.z2).trace();
    return acc;
}

SigmaBlocks sigma_blocks(const Bracket& l) {
    const E7Context& ctx = e7();
    RawBlocks rb = raw_blocks(l.q());
    SigmaBlocks sb;
    sb.R = rb.R;
    sb.P = rb.PV * ctx.k3 + rb.PU * ctx.k4;
    sb.Q = rb.Q;
    return sb;
}

SigmaBlocksD sigma_blocks_approx(const Bracket& l) {
    const E7Context& ctx = e7();
    Bracket la = l.mode() == Mode::approx ? l : l.to_approx();
    SigmaBlocksD sb;
    double k3 = ctx.k3.get_d(), k4 = ctx.k4.get_d();
    const W45<double>& lv = la.d();
    for (int col = 0; col < kDimW; ++col) {
        W45<double> e{};
        e[col] = 1.0;
        W45<double> r = pair_wedge_core(lv, e);
        for (int i = 0; i < kDimW; ++i) sb.R.at(i, col) = r[i];
        std::array<double, 36> V;
        std::array<double, 9> U;
        contr_core(lv, e, V, U);
        int k = 0;
        double coords[kDimH0];
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (a != b) coords[k++] = k3 * V[a * 6 + b];
        for (int a = 0; a < 5; ++a) coords[k++] = k3 * V[a * 6 + a];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) coords[k++] = k4 * U[a * 3 + b];
        for (int a = 0; a < 2; ++a) coords[k++] = k4 * U[a * 3 + a];
        for (int i = 0; i < kDimH0; ++i) sb.P.at(i, col) = coords[i];
    }
    for (int col = 0; col < kDimH0; ++col) {
        Rat coords[kDimH0] = {};
        coords[col] = 1;
        QMat X, Y;
        unflatten_h0(coords, X, Y);
        std::array<double, 36> A{};
        std::array<double, 9> B{};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) A[i * 6 + j] = X.at(i, j).get_d();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) B[i * 3 + j] = Y.at(i, j).get_d();
        W45<double> w = algebra_act_core<double>(A, B, lv);
        for (int i = 0; i < kDimW; ++i) sb.Q.at(i, col) = -w[i];
    }
    return sb;
}

Mat sigma(const Bracket& l) {
    SigmaBlocks sb = sigma_blocks(l);
    QMat out(kDimE7, kDimE7);
    for (int i = 0; i < kDimW; ++i)
        for (int j = 0; j < kDimW; ++j) out.at(i, kDimW + kDimH0 + j) = sb.R.at(i, j);
    for (int i = 0; i < kDimH0; ++i)
        for (int j = 0; j < kDimW; ++j) out.at(kDimW + i, j) = sb.P.at(i, j);
    for (int i = 0; i < kDimW; ++i)
        for (int j = 0; j < kDimH0; ++j) out.at(kDimW + kDimH0 + i, kDimW + j) = sb.Q.at(i, j);
    return Mat::exact(std::move(out));
}

QMat phi_cube_W(const Bracket& l) { return phi_matrix<Rat, QMat>(l.q()); }

DMat phi_cube_W_approx(const Bracket& l) {
    Bracket la = l.mode() == Mode::approx ? l : l.to_approx();
    return phi_matrix<double, DMat>(la.d());
}

Mat sigma_cubed_W(const Bracket& l) {
    if (l.mode() == Mode::approx) return Mat::approx(phi_cube_W_approx(l));
    return Mat::exact(phi_cube_W(l));
}

}  // namespace tg
