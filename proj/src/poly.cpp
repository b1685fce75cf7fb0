#include "poly.hpp"

#include <cmath>
#include <sstream>

namespace tg {

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= c;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / leading();
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= inv;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    if (degree() < dd) {
        if (is_zero()) return UniPoly();
        throw domain_error("inexact polynomial division");
    }
    std::vector<Rat> quot(static_cast<size_t>(degree() - dd) + 1);
    for (int k = degree() - dd; k >= 0; --k) {
        Rat f = rem[k + dd] / d.leading();
        quot[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= f * d.coeff(j);
    }
    for (const Rat& x : rem)
        if (x != 0) throw domain_error("inexact polynomial division");
    return UniPoly(std::move(quot));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QMat UniPoly::eval(const QMat& m) const {
    if (m.rows() != m.cols()) throw shape_error("polynomial of a non-square matrix");
    int n = m.rows();
    QMat acc(n, n);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        if (c_[i] != 0) {
            for (int k = 0; k < n; ++k) acc.at(k, k) += c_[i];
        }
    }
    return acc;
}

int UniPoly::zero_root_multiplicity() const {
    if (is_zero()) return -1;
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (coeff(k) == 0) continue;
        if (!first) os << " + ";
        os << "(" << coeff(k) << ")";
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

namespace {

// Primitive integer form of a rational polynomial (content divided out).
std::vector<mpz_class> primitive_int(const UniPoly& p) {
    mpz_class den = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        const Rat& c = p.coeffs()[i];
        z[i] = c.get_num() * (den / c.get_den());
    }
    mpz_class g = 0;
    for (auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return z;
}

void trim_int(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b (both trimmed, b nonzero), then primitive part.
std::vector<mpz_class> pseudo_rem_primitive(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        mpz_class lead = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= lead * b[j];
        trim_int(a);
        if (a.empty()) break;
    }
    if (!a.empty()) {
        mpz_class g = 0;
        for (auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return a;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> x = primitive_int(a), y = primitive_int(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<mpz_class> r = pseudo_rem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> c(x.size());
    for (size_t i = 0; i < x.size(); ++i) c[i] = Rat(x[i]);
    return UniPoly(std::move(c)).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(1);
    UniPoly g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

UniPoly char_poly(const QMat& m) { return UniPoly(m.char_poly()); }

UniPoly char_poly(const Mat& m) {
    if (m.mode() != Mode::exact) throw mode_error("char_poly requires an exact matrix");
    if (m.rows() != m.cols()) throw shape_error("char_poly of a non-square matrix");
    return char_poly(m.q());
}

QMat semisimple_part(const QMat& m) {
    if (m.rows() != m.cols()) throw shape_error("semisimple part of a non-square matrix");
    UniPoly f = squarefree_part(char_poly(m));
    if (f.degree() <= 0) return m;
    UniPoly fp = f.derivative();
    QMat x = m;
    int bound = 1;
    for (int d = 1; d < m.rows(); d <<= 1) ++bound;  // ceil(log2(dim)) + 1 steps suffice
    for (int iter = 0; iter <= bound; ++iter) {
        QMat fx = f.eval(x);
        if (fx.is_zero()) return x;
        QMat fpx = fp.eval(x);
        x = x - fx * fpx.inverse();
    }
    if (!f.eval(x).is_zero()) throw domain_error("Jordan-Chevalley iteration failed to converge");
    return x;
}

Mat semisimple_part(const Mat& m) {
    if (m.mode() != Mode::exact) throw mode_error("semisimple_part requires an exact matrix");
    return Mat::exact(semisimple_part(m.q()));
}

}  // namespace tg
