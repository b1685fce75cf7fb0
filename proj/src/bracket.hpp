#pragma once

#include <array>
#include <cstdint>

#include "poly.hpp"
#include "qmat.hpp"
#include "scalar.hpp"

namespace tg {

// W = Lambda^2(g_{-1})* (x) g_{-2} is 45-dimensional: 15 index pairs i<j on the
// 6-dimensional factor times 3 choices of g_{-2} direction. Coefficients are
// stored at (I, i<j); the antisymmetric extension is a storage convention.
inline constexpr int kPairs = 15;
inline constexpr int kDimW = 45;

int pair_index(int i, int j);           // 0-based, i != j, returns lex index of {min,max}
std::pair<int, int> pair_of(int p);     // inverse, i < j
inline int widx(int I, int p) { return I * kPairs + p; }

template <class T>
using W45 = std::array<T, kDimW>;

// Fully antisymmetric coefficient array l^I_{ij}.
template <class T>
using WFull = std::array<std::array<std::array<T, 6>, 6>, 3>;

template <class T>
WFull<T> expand_full(const W45<T>& l) {
    WFull<T> f{};
    for (int I = 0; I < 3; ++I)
        for (int p = 0; p < kPairs; ++p) {
            auto [i, j] = pair_of(p);
            f[I][i][j] = l[widx(I, p)];
            f[I][j][i] = -l[widx(I, p)];
        }
    return f;
}

class Bracket {
public:
    Bracket() : mode_(Mode::exact) {}
    explicit Bracket(Mode m) : mode_(m) {}

    Mode mode() const { return mode_; }
    const W45<Rat>& q() const {
        if (mode_ != Mode::exact) throw mode_error("exact coefficients requested from approx bracket");
        return q_;
    }
    W45<Rat>& q() {
        if (mode_ != Mode::exact) throw mode_error("exact coefficients requested from approx bracket");
        return q_;
    }
    const W45<double>& d() const {
        if (mode_ != Mode::approx) throw mode_error("approx coefficients requested from exact bracket");
        return d_;
    }
    W45<double>& d() {
        if (mode_ != Mode::approx) throw mode_error("approx coefficients requested from exact bracket");
        return d_;
    }

    // Antisymmetry-aware accessors (exact mode).
    void set(int I, int i, int j, const Rat& v);
    Rat get(int I, int i, int j) const;

    Bracket operator+(const Bracket& o) const;
    Bracket operator-(const Bracket& o) const;
    Bracket operator*(const Rat& c) const;
    bool operator==(const Bracket& o) const;
    bool is_zero() const;
    int nonzero_count() const;

    Bracket to_approx() const;
    // Exact bracket with the same kernel data: coefficients scaled to integers.
    Bracket integerized(Rat* scale_out = nullptr) const;

private:
    Mode mode_;
    W45<Rat> q_{};
    W45<double> d_{};
};

// Element of W* = Lambda^2(g_{-1}) (x) (g_{-2})*, same storage grid.
class CoBracket {
public:
    CoBracket() {}
    const W45<Rat>& q() const { return q_; }
    W45<Rat>& q() { return q_; }
    void set(int I, int i, int j, const Rat& v);
    Rat get(int I, int i, int j) const;
    CoBracket operator+(const CoBracket& o) const;
    CoBracket operator-(const CoBracket& o) const;
    CoBracket operator*(const Rat& c) const;
    bool operator==(const CoBracket& o) const;
    bool is_zero() const;

private:
    W45<Rat> q_{};
};

// Coefficientwise pairing between W and W*.
Rat pairing(const Bracket& l, const CoBracket& m);

Bracket u_basic(int n);  // n in {1,2,3}
Bracket standard_k();
CoBracket standard_k_star();
Bracket l_of(const Rat& x, const Rat& y, const Rat& z);  // x u1 + y u2 + z u3

// Value of the codifferential: a gl(g_{-1}*) block and a gl(g_{-2}) block.
struct PartialStarValue {
    QMat alpha;  // 6x6
    QMat beta;   // 3x3
    PartialStarValue() : alpha(6, 6), beta(3, 3) {}
    bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }
    bool operator==(const PartialStarValue& o) const { return alpha == o.alpha && beta == o.beta; }
    PartialStarValue operator-(const PartialStarValue& o) const {
        PartialStarValue r;
        r.alpha = alpha - o.alpha;
        r.beta = beta - o.beta;
        return r;
    }
};

PartialStarValue partial_star(const Bracket& l);
PartialStarValue theta(const Bracket& l);

// An element of S = GL(g_{-1}*) x GL(g_{-2}) or of its Lie algebra. s1 acts on
// the a-basis of g_{-1}*, s2 on the b-basis of g_{-2}.
struct SAction {
    enum class Kind { group, algebra };
    Kind kind = Kind::group;
    Mode mode = Mode::exact;
    QMat q1{6, 6}, q2{3, 3};
    DMat d1{6, 6}, d2{3, 3};

    static SAction group_exact(QMat s1, QMat s2);
    static SAction algebra_exact(QMat s1, QMat s2);
    static SAction identity();
    SAction to_approx() const;
    SAction compose(const SAction& o) const;  // group elements: this after o
};

Bracket s_act(const SAction& s, const Bracket& l);
// Derivative of the S-action at the identity along an algebra element.
Bracket partial_lower(const Bracket& l, const SAction& s);

// Embedding of G0 = GL(3) (+) F* into S; A acts on both halves of g_{-1},
// weighted t on E and 1/t on F, and on g_{-2} by the induced Lambda^2 action.
SAction g0_embed(const QMat& A, const Rat& t);

// 45x45 matrix of the codifferential W -> s (gl6 coords then gl3 coords).
const QMat& partial_star_matrix();
// Fixed basis of the image of the codifferential (45 x rank columns).
struct ImageBasis {
    QMat basis;                // 45 x r
    std::vector<int> pivot_rows;
    QMat pivot_inverse;        // r x r
};
const ImageBasis& im_partial_star();

// det of (codifferential o action-derivative) restricted to the image of the
// codifferential, for one coefficient arrangement l = x u1 + y u2 + z u3. The
// codifferential singles out the u2 direction, so this determinant picks up
// arrangement-dependent zero components on the x and z coordinate planes.
Rat transversality_det_arrangement(const Rat& x, const Rat& y, const Rat& z);

// Arrangement-stable transversality scalar: vanishes iff the restricted
// determinant vanishes for every coordinate arrangement of (x, y, z), which is
// exactly the locus (x^3-y^3)(x^3-z^3)(y^3-z^3) = 0.
Rat transversality_det(const Rat& x, const Rat& y, const Rat& z);

// Templated cores shared by the exact and approx paths.
template <class T>
W45<T> s_act_core(const std::array<T, 36>& s1, const std::array<T, 9>& s2, const W45<T>& l);
template <class T>
W45<T> algebra_act_core(const std::array<T, 36>& A, const std::array<T, 9>& B, const W45<T>& l);

}  // namespace tg
