#pragma once

#include <vector>

#include "qmat.hpp"
#include "scalar.hpp"

namespace tg {

// Univariate polynomial over the rationals, ascending coefficients, trimmed.
class UniPoly {
public:
    UniPoly() {}
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& r) { return UniPoly({r}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero poly
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    // Exact division; throws domain_error if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const;

    Rat eval(const Rat& x) const;
    QMat eval(const QMat& m) const;  // Horner

    // Multiplicity of the root x = 0 (count of leading zero coefficients).
    int zero_root_multiplicity() const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Monic gcd over the rationals (primitive PRS over the integers inside).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), monic. Throws domain_error on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

// det(xI - m) with exact coefficients; requires square exact matrix.
UniPoly char_poly(const Mat& m);
UniPoly char_poly(const QMat& m);

// Jordan-Chevalley semisimple summand of an exact square matrix, by Newton
// iteration on the squarefree part of the characteristic polynomial.
QMat semisimple_part(const QMat& m);
Mat semisimple_part(const Mat& m);

}  // namespace tg
