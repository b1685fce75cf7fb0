#include "bracket.hpp"

#include <algorithm>

namespace tg {

namespace {

constexpr int kPairTable[6][6] = {
    {-1, 0, 1, 2, 3, 4}, {0, -1, 5, 6, 7, 8},   {1, 5, -1, 9, 10, 11},
    {2, 6, 9, -1, 12, 13}, {3, 7, 10, 12, -1, 14}, {4, 8, 11, 13, 14, -1},
};

struct Term {
    int I, i, j, sign;
};

// u1 = a1^a2 b1 + a3^a4 b2 + a5^a6 b3
// u2 = a5^a4 b1 + a1^a6 b2 + a3^a2 b3
// u3 = a3^a6 b1 + a5^a2 b2 + a1^a4 b3   (0-based, normalized to i<j)
constexpr Term kU1[] = {{0, 0, 1, 1}, {1, 2, 3, 1}, {2, 4, 5, 1}};
constexpr Term kU2[] = {{0, 3, 4, -1}, {1, 0, 5, 1}, {2, 1, 2, -1}};
constexpr Term kU3[] = {{0, 2, 5, 1}, {1, 1, 4, -1}, {2, 0, 3, 1}};
// k* in the a/b coordinates, mirroring k = u1 - u3 with raised/lowered indices.
constexpr Term kKStar[] = {{0, 0, 1, 1}, {0, 2, 5, -1}, {1, 2, 3, 1},
                           {1, 1, 4, 1}, {2, 4, 5, 1},  {2, 0, 3, -1}};

const WFull<Rat>& kstar_full() {
    static const WFull<Rat> f = [] {
        W45<Rat> v{};
        for (const Term& t : kKStar) v[widx(t.I, kPairTable[t.i][t.j])] = t.sign;
        return expand_full(v);
    }();
    return f;
}

}  // namespace

int pair_index(int i, int j) {
    if (i < 0 || j < 0 || i > 5 || j > 5 || i == j) throw shape_error("bad pair index");
    return kPairTable[i][j];
}

std::pair<int, int> pair_of(int p) {
    static const std::array<std::pair<int, int>, kPairs> tbl = [] {
        std::array<std::pair<int, int>, kPairs> t{};
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) t[kPairTable[i][j]] = {i, j};
        return t;
    }();
    return tbl[p];
}

void Bracket::set(int I, int i, int j, const Rat& v) {
    int p = pair_index(i, j);
    q()[widx(I, p)] = (i < j) ? v : -v;
}

Rat Bracket::get(int I, int i, int j) const {
    int p = pair_index(i, j);
    const Rat& v = q()[widx(I, p)];
    return (i < j) ? v : Rat(-v);
}

Bracket Bracket::operator+(const Bracket& o) const {
    if (mode_ != o.mode_) throw mode_error("mixed-mode bracket sum");
    Bracket r(mode_);
    if (mode_ == Mode::exact)
        for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] + o.q_[k];
    else
        for (int k = 0; k < kDimW; ++k) r.d_[k] = d_[k] + o.d_[k];
    return r;
}

Bracket Bracket::operator-(const Bracket& o) const {
    if (mode_ != o.mode_) throw mode_error("mixed-mode bracket difference");
    Bracket r(mode_);
    if (mode_ == Mode::exact)
        for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] - o.q_[k];
    else
        for (int k = 0; k < kDimW; ++k) r.d_[k] = d_[k] - o.d_[k];
    return r;
}

Bracket Bracket::operator*(const Rat& c) const {
    Bracket r(mode_);
    if (mode_ == Mode::exact)
        for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] * c;
    else
        for (int k = 0; k < kDimW; ++k) r.d_[k] = d_[k] * c.get_d();
    return r;
}

bool Bracket::operator==(const Bracket& o) const {
    if (mode_ != o.mode_) return false;
    return mode_ == Mode::exact ? q_ == o.q_ : d_ == o.d_;
}

bool Bracket::is_zero() const {
    if (mode_ == Mode::exact) {
        for (const Rat& x : q_)
            if (x != 0) return false;
    } else {
        for (double x : d_)
            if (x != 0.0) return false;
    }
    return true;
}

int Bracket::nonzero_count() const {
    int n = 0;
    if (mode_ == Mode::exact) {
        for (const Rat& x : q_) n += (x != 0);
    } else {
        for (double x : d_) n += (x != 0.0);
    }
    return n;
}

Bracket Bracket::to_approx() const {
    if (mode_ == Mode::approx) return *this;
    Bracket r(Mode::approx);
    for (int k = 0; k < kDimW; ++k) r.d_[k] = q_[k].get_d();
    return r;
}

Bracket Bracket::integerized(Rat* scale_out) const {
    if (mode_ != Mode::exact) throw mode_error("integerize requires an exact bracket");
    mpz_class l = 1;
    for (const Rat& x : q_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Bracket r(Mode::exact);
    for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] * Rat(l);
    if (scale_out) *scale_out = Rat(l);
    return r;
}

void CoBracket::set(int I, int i, int j, const Rat& v) {
    int p = pair_index(i, j);
    q_[widx(I, p)] = (i < j) ? v : -v;
}

Rat CoBracket::get(int I, int i, int j) const {
    int p = pair_index(i, j);
    const Rat& v = q_[widx(I, p)];
    return (i < j) ? v : Rat(-v);
}

CoBracket CoBracket::operator+(const CoBracket& o) const {
    CoBracket r;
    for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] + o.q_[k];
    return r;
}

CoBracket CoBracket::operator-(const CoBracket& o) const {
    CoBracket r;
    for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] - o.q_[k];
    return r;
}

CoBracket CoBracket::operator*(const Rat& c) const {
    CoBracket r;
    for (int k = 0; k < kDimW; ++k) r.q_[k] = q_[k] * c;
    return r;
}

bool CoBracket::operator==(const CoBracket& o) const { return q_ == o.q_; }

bool CoBracket::is_zero() const {
    for (const Rat& x : q_)
        if (x != 0) return false;
    return true;
}

Rat pairing(const Bracket& l, const CoBracket& m) {
    Rat acc = 0;
    for (int k = 0; k < kDimW; ++k) acc += l.q()[k] * m.q()[k];
    return acc;
}

Bracket u_basic(int n) {
    if (n < 1 || n > 3) throw param_error("u_basic index must be 1, 2 or 3");
    const Term* terms = n == 1 ? kU1 : n == 2 ? kU2 : kU3;
    Bracket b;
    for (int t = 0; t < 3; ++t) b.q()[widx(terms[t].I, kPairTable[terms[t].i][terms[t].j])] = terms[t].sign;
    return b;
}

Bracket standard_k() { return u_basic(1) - u_basic(3); }

CoBracket standard_k_star() {
    CoBracket m;
    for (const Term& t : kKStar) m.q()[widx(t.I, kPairTable[t.i][t.j])] = t.sign;
    return m;
}

Bracket l_of(const Rat& x, const Rat& y, const Rat& z) {
    return u_basic(1) * x + u_basic(2) * y + u_basic(3) * z;
}

PartialStarValue partial_star(const Bracket& l) {
    const WFull<Rat> lf = expand_full(l.q());
    const WFull<Rat>& ks = kstar_full();
    PartialStarValue out;
    // (alpha l)^i_j = sum_{I,q} l^I_{q i} (k*)^{q j}_I
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rat acc = 0;
            for (int I = 0; I < 3; ++I)
                for (int q = 0; q < 6; ++q) acc += lf[I][q][i] * ks[I][q][j];
            out.alpha.at(i, j) = acc;
        }
    // (beta l)^I_J = -1/2 sum_{ij} l^I_{ij} (k*)^{ij}_J
    for (int I = 0; I < 3; ++I)
        for (int J = 0; J < 3; ++J) {
            Rat acc = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) acc += lf[I][i][j] * ks[J][i][j];
            out.beta.at(I, J) = acc * rat(-1, 2);
        }
    return out;
}

PartialStarValue theta(const Bracket& l) {
    static const PartialStarValue dk = partial_star(standard_k());
    return partial_star(l) - dk;
}

template <class T>
W45<T> s_act_core(const std::array<T, 36>& s1, const std::array<T, 9>& s2, const W45<T>& l) {
    WFull<T> lf = expand_full(l);
    // First transform both g_{-1}* slots: m^I = s1 l^I s1^T.
    WFull<T> mid{};
    for (int I = 0; I < 3; ++I) {
        std::array<std::array<T, 6>, 6> tmp{};
        for (int p = 0; p < 6; ++p)
            for (int i = 0; i < 6; ++i) {
                const T& c = s1[p * 6 + i];
                if (c == T(0)) continue;
                for (int q = 0; q < 6; ++q) tmp[p][q] += c * lf[I][i][q];
            }
        for (int p = 0; p < 6; ++p)
            for (int q = 0; q < 6; ++q) {
                T acc{};
                for (int j = 0; j < 6; ++j) acc += tmp[p][j] * s1[q * 6 + j];
                mid[I][p][q] = acc;
            }
    }
    W45<T> out{};
    for (int Q = 0; Q < 3; ++Q)
        for (int p = 0; p < kPairs; ++p) {
            auto [i, j] = pair_of(p);
            T acc{};
            for (int I = 0; I < 3; ++I) acc += s2[Q * 3 + I] * mid[I][i][j];
            out[widx(Q, p)] = acc;
        }
    return out;
}

template <class T>
W45<T> algebra_act_core(const std::array<T, 36>& A, const std::array<T, 9>& B, const W45<T>& l) {
    WFull<T> lf = expand_full(l);
    W45<T> out{};
    for (int I = 0; I < 3; ++I)
        for (int p = 0; p < kPairs; ++p) {
            auto [i, j] = pair_of(p);
            T acc{};
            for (int t = 0; t < 6; ++t) {
                acc += A[i * 6 + t] * lf[I][t][j];
                acc += A[j * 6 + t] * lf[I][i][t];
            }
            for (int J = 0; J < 3; ++J) acc += B[I * 3 + J] * lf[J][i][j];
            out[widx(I, p)] = acc;
        }
    return out;
}

template W45<Rat> s_act_core<Rat>(const std::array<Rat, 36>&, const std::array<Rat, 9>&, const W45<Rat>&);
template W45<double> s_act_core<double>(const std::array<double, 36>&, const std::array<double, 9>&,
                                        const W45<double>&);
template W45<Rat> algebra_act_core<Rat>(const std::array<Rat, 36>&, const std::array<Rat, 9>&, const W45<Rat>&);
template W45<double> algebra_act_core<double>(const std::array<double, 36>&, const std::array<double, 9>&,
                                              const W45<double>&);

namespace {

std::array<Rat, 36> flat6(const QMat& m) {
    std::array<Rat, 36> a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i * 6 + j] = m.at(i, j);
    return a;
}
std::array<Rat, 9> flat3(const QMat& m) {
    std::array<Rat, 9> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i * 3 + j] = m.at(i, j);
    return a;
}
std::array<double, 36> flat6d(const DMat& m) {
    std::array<double, 36> a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i * 6 + j] = m.at(i, j);
    return a;
}
std::array<double, 9> flat3d(const DMat& m) {
    std::array<double, 9> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i * 3 + j] = m.at(i, j);
    return a;
}

}  // namespace

SAction SAction::group_exact(QMat s1, QMat s2) {
    if (s1.rows() != 6 || s1.cols() != 6 || s2.rows() != 3 || s2.cols() != 3)
        throw shape_error("SAction blocks must be 6x6 and 3x3");
    SAction s;
    s.kind = Kind::group;
    s.q1 = std::move(s1);
    s.q2 = std::move(s2);
    return s;
}

SAction SAction::algebra_exact(QMat s1, QMat s2) {
    SAction s = group_exact(std::move(s1), std::move(s2));
    s.kind = Kind::algebra;
    return s;
}

SAction SAction::identity() { return group_exact(QMat::identity(6), QMat::identity(3)); }

SAction SAction::to_approx() const {
    SAction s = *this;
    s.mode = Mode::approx;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) s.d1.at(i, j) = q1.at(i, j).get_d();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.d2.at(i, j) = q2.at(i, j).get_d();
    return s;
}

SAction SAction::compose(const SAction& o) const {
    if (kind != Kind::group || o.kind != Kind::group) throw param_error("compose needs group elements");
    return group_exact(q1 * o.q1, q2 * o.q2);
}

Bracket s_act(const SAction& s, const Bracket& l) {
    if (s.kind != SAction::Kind::group) throw param_error("s_act needs a group element");
    if (s.mode == Mode::exact && l.mode() == Mode::exact) {
        if (s.q1.det() == 0 || s.q2.det() == 0) throw domain_error("singular SAction block");
        Bracket r;
        r.q() = s_act_core<Rat>(flat6(s.q1), flat3(s.q2), l.q());
        return r;
    }
    SAction sa = s.mode == Mode::approx ? s : s.to_approx();
    Bracket la = l.mode() == Mode::approx ? l : l.to_approx();
    Bracket r(Mode::approx);
    r.d() = s_act_core<double>(flat6d(sa.d1), flat3d(sa.d2), la.d());
    return r;
}

Bracket partial_lower(const Bracket& l, const SAction& s) {
    if (s.kind != SAction::Kind::algebra) throw param_error("partial_lower needs an algebra element");
    Bracket r;
    r.q() = algebra_act_core<Rat>(flat6(s.q1), flat3(s.q2), l.q());
    return r;
}

SAction g0_embed(const QMat& A, const Rat& t) {
    if (A.rows() != 3 || A.cols() != 3) throw shape_error("g0_embed needs a 3x3 block");
    if (t == 0) throw param_error("g0_embed weight must be nonzero");
    Rat detA = A.det();
    if (detA == 0) throw domain_error("g0_embed needs an invertible block");

    // a-basis <-> (E,F)-basis substitution: a1=e2, a2=f3, a3=e3, a4=f1, a5=e1, a6=f2;
    // ef order is e1,e2,e3,f1,f2,f3.
    static const int perm[6] = {1, 5, 2, 3, 0, 4};
    QMat m_ef(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m_ef.at(i, j) = A.at(i, j) * t;
            m_ef.at(3 + i, 3 + j) = A.at(i, j) / t;
        }
    QMat m_a(6, 6);
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) m_a.at(p, q) = m_ef.at(perm[p], perm[q]);

    // g_{-1}* carries the contragredient of the g_{-1} action; g_{-2} = Lambda^2 E
    // carries det(A) * A^{-T} in the b coordinates.
    QMat Ainv = A.inverse();
    QMat s2 = Ainv.transpose() * detA;
    return SAction::group_exact(m_a.inverse().transpose(), std::move(s2));
}

const QMat& partial_star_matrix() {
    static const QMat m = [] {
        QMat out(kDimW, kDimW);
        for (int col = 0; col < kDimW; ++col) {
            Bracket b;
            b.q()[col] = 1;
            PartialStarValue v = partial_star(b);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) out.at(i * 6 + j, col) = v.alpha.at(i, j);
            for (int I = 0; I < 3; ++I)
                for (int J = 0; J < 3; ++J) out.at(36 + I * 3 + J, col) = v.beta.at(I, J);
        }
        return out;
    }();
    return m;
}

const ImageBasis& im_partial_star() {
    static const ImageBasis ib = [] {
        const QMat& m = partial_star_matrix();
        // Deterministic greedy column selection by rank growth.
        std::vector<int> cols;
        QMat cur(kDimW, 0);
        int r = 0;
        for (int c = 0; c < kDimW && r < kDimW; ++c) {
            QMat trial(kDimW, static_cast<int>(cols.size()) + 1);
            for (int i = 0; i < kDimW; ++i) {
                for (size_t k = 0; k < cols.size(); ++k) trial.at(i, static_cast<int>(k)) = m.at(i, cols[k]);
                trial.at(i, static_cast<int>(cols.size())) = m.at(i, c);
            }
            if (trial.rank() > r) {
                cols.push_back(c);
                ++r;
            }
        }
        ImageBasis ib;
        ib.basis = QMat(kDimW, r);
        for (int i = 0; i < kDimW; ++i)
            for (int k = 0; k < r; ++k) ib.basis.at(i, k) = m.at(i, cols[k]);
        // Pivot rows: echelon of the basis, first independent rows win.
        QMat bt = ib.basis.transpose();  // r x 45 columns = rows of basis
        std::vector<int> rows;
        int rr = 0;
        for (int c = 0; c < kDimW && rr < r; ++c) {
            QMat trial(r, static_cast<int>(rows.size()) + 1);
            for (int i = 0; i < r; ++i) {
                for (size_t k = 0; k < rows.size(); ++k) trial.at(i, static_cast<int>(k)) = bt.at(i, rows[k]);
                trial.at(i, static_cast<int>(rows.size())) = bt.at(i, c);
            }
            if (trial.rank() > rr) {
                rows.push_back(c);
                ++rr;
            }
        }
        ib.pivot_rows = rows;
        QMat sq(r, r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) sq.at(i, k) = ib.basis.at(rows[i], k);
        ib.pivot_inverse = sq.inverse();
        return ib;
    }();
    return ib;
}

Rat transversality_det_arrangement(const Rat& x, const Rat& y, const Rat& z) {
    const ImageBasis& ib = im_partial_star();
    const int r = ib.basis.cols();
    Bracket l = l_of(x, y, z);
    // Columns of (codifferential o action-derivative) on the image basis.
    QMat pivot_block(r, r);
    for (int col = 0; col < r; ++col) {
        std::array<Rat, 36> A{};
        std::array<Rat, 9> B{};
        for (int i = 0; i < 36; ++i) A[i] = ib.basis.at(i, col);
        for (int i = 0; i < 9; ++i) B[i] = ib.basis.at(36 + i, col);
        Bracket moved;
        moved.q() = algebra_act_core<Rat>(A, B, l.q());
        PartialStarValue v = partial_star(moved);
        for (int i = 0; i < r; ++i) {
            int row = ib.pivot_rows[i];
            pivot_block.at(i, col) = row < 36 ? v.alpha.at(row / 6, row % 6) : v.beta.at((row - 36) / 3, (row - 36) % 3);
        }
    }
    return (ib.pivot_inverse * pivot_block).det();
}

Rat transversality_det(const Rat& x, const Rat& y, const Rat& z) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const Rat* v[3] = {&x, &y, &z};
    Rat acc = 0;
    for (const auto& p : perms) {
        Rat d = transversality_det_arrangement(*v[p[0]], *v[p[1]], *v[p[2]]);
        acc += d * d;
    }
    return acc;
}

}  // namespace tg
