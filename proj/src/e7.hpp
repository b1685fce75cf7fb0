#pragma once

#include "bracket.hpp"

namespace tg {

// Trigraded carrier: h_{-1} (+) h_0 (+) h_1 = W* (+) s' (+) W, dims 45+43+45.
inline constexpr int kDimH0 = 43;
inline constexpr int kDimE7 = 133;

struct TriGradedElement {
    CoBracket m;         // h_{-1}
    QMat z1{6, 6};       // sl(g_{-1}*) block of h_0
    QMat z2{3, 3};       // sl(g_{-2}) block of h_0
    Bracket p;           // h_1

    static TriGradedElement zero() { return TriGradedElement{}; }
    bool is_zero() const { return m.is_zero() && z1.is_zero() && z2.is_zero() && p.is_zero(); }
    TriGradedElement operator+(const TriGradedElement& o) const;
    TriGradedElement operator-(const TriGradedElement& o) const;
    TriGradedElement operator*(const Rat& c) const;
    bool operator==(const TriGradedElement& o) const;
};

TriGradedElement embed_m(const CoBracket& m);
TriGradedElement embed_z(const QMat& z1, const QMat& z2);  // blocks must be traceless
TriGradedElement embed_p(const Bracket& p);

// Flattening of the 133-dimensional carrier: h_{-1} coords, then h_0 (sl6
// off-diagonals, sl6 diagonal coords 0..4, sl3 off-diagonals, sl3 diagonal
// coords 0..1), then h_1 coords.
std::vector<Rat> flatten(const TriGradedElement& x);
TriGradedElement unflatten(const std::vector<Rat>& v);

// Calibrated structure constants and frozen regression data.
struct E7Context {
    Rat k2, k3, k4;      // [h-1,h-1], and the two h0-valued contraction weights
    Rat kill_lambda, kill_t6, kill_t3;
    Rat phi_c;           // sigma(l)^3|_W == phi_c * phi formula

    // Trace-power dictionary: p2, p4, p6 of the phi operator as polynomials in
    // the elementary symmetric functions of (x^3, y^3, z^3).
    std::array<Rat, 2> dict2;  // e1^2, e2
    std::array<Rat, 4> dict4;  // e1^4, e1^2 e2, e2^2, e1 e3
    std::array<Rat, 7> dict6;  // e1^6, e1^4 e2, e1^2 e2^2, e2^3, e1^3 e3, e1 e2 e3, e3^2
};

const E7Context& e7();

TriGradedElement tri_bracket(const TriGradedElement& a, const TriGradedElement& b);

Rat killing_form(const TriGradedElement& a, const TriGradedElement& b);

// Adjoint operator of an embedded bracket as a dense 133x133 exact matrix.
Mat sigma(const Bracket& l);

// The three nonzero blocks of sigma(l): R: h1 -> h-1, P: h-1 -> h0, Q: h0 -> h1.
struct SigmaBlocks {
    QMat R{kDimW, kDimW};
    QMat P{kDimH0, kDimW};
    QMat Q{kDimW, kDimH0};
    QMat cube_h1() const { return Q * (P * R); }
    QMat cube_h0() const { return P * (R * Q); }
    QMat cube_hm1() const { return R * (Q * P); }
};
SigmaBlocks sigma_blocks(const Bracket& l);

struct SigmaBlocksD {
    DMat R{kDimW, kDimW};
    DMat P{kDimH0, kDimW};
    DMat Q{kDimW, kDimH0};
};
SigmaBlocksD sigma_blocks_approx(const Bracket& l);

// Closed-form evaluation of the cubic action on W (the phi formula), exact and
// approx flavors. sigma(l)^3|_W equals e7().phi_c times this matrix.
QMat phi_cube_W(const Bracket& l);
DMat phi_cube_W_approx(const Bracket& l);
Mat sigma_cubed_W(const Bracket& l);

// Raw equivariant pieces, exposed for tests.
CoBracket psi_raw(const Bracket& a, const Bracket& b);
Bracket phi_mirror_raw(const CoBracket& a, const CoBracket& b);
void contraction_raw(const Bracket& p, const CoBracket& m, QMat* v_out, QMat* u_out);  // trace-free parts

int eps6(int a, int b, int c, int d, int e, int f);
int eps3(int a, int b, int c);

}  // namespace tg
