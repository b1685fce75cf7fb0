#pragma once

#include <vector>

#include "scalar.hpp"

namespace tg {

// Dense exact-rational matrix. The workhorse behind the public Mat facade and
// everything in the bracket/algebra layers.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat operator*(const Rat& c) const;
    QMat operator-() const;
    QMat transpose() const;
    Rat trace() const;

    // Fraction-free (Bareiss) rank on the denominator-cleared matrix.
    int rank() const;
    // Basis of the right kernel, via reduced row echelon form. Deterministic.
    std::vector<std::vector<Rat>> kernel_basis() const;
    Rat det() const;
    // Gauss-Jordan inverse; throws domain_error if singular.
    QMat inverse() const;
    // Solves A x = b; empty optional if inconsistent. A may be rectangular.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    // det(xI - A), coefficients ascending. Division-free (Berkowitz).
    std::vector<Rat> char_poly() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Dense double matrix for the approx mode.
class DMat {
public:
    DMat() : rows_(0), cols_(0) {}
    DMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    DMat operator*(const DMat& o) const;

    // Rank with relative threshold tol * largest pivot candidate. Also reports
    // the pivot magnitudes seen, so callers can check the accept/reject gap.
    int rank(double tol, std::vector<double>* pivots = nullptr) const;
    std::vector<std::vector<double>> kernel_basis(double tol) const;
    // Singular values (descending), via Jacobi iteration on the Gram matrix.
    std::vector<double> singular_values() const;

private:
    int rows_, cols_;
    std::vector<double> a_;
};

// Public matrix type: one arithmetic mode for all entries.
class Mat {
public:
    Mat() : mode_(Mode::exact) {}
    static Mat exact(QMat m) {
        Mat r;
        r.mode_ = Mode::exact;
        r.q_ = std::move(m);
        return r;
    }
    static Mat approx(DMat m) {
        Mat r;
        r.mode_ = Mode::approx;
        r.d_ = std::move(m);
        return r;
    }

    Mode mode() const { return mode_; }
    int rows() const { return mode_ == Mode::exact ? q_.rows() : d_.rows(); }
    int cols() const { return mode_ == Mode::exact ? q_.cols() : d_.cols(); }
    const QMat& q() const {
        if (mode_ != Mode::exact) throw mode_error("exact matrix requested from approx matrix");
        return q_;
    }
    const DMat& d() const {
        if (mode_ != Mode::approx) throw mode_error("approx matrix requested from exact matrix");
        return d_;
    }
    Scalar entry(int i, int j) const {
        return mode_ == Mode::exact ? Scalar::exact(q_.at(i, j)) : Scalar::approx(d_.at(i, j));
    }

private:
    Mode mode_;
    QMat q_;
    DMat d_;
};

// Mode-dispatching operations over the tagged matrix.
int mat_rank(const Mat& m, double tol);
std::vector<std::vector<Scalar>> mat_kernel_basis(const Mat& m, double tol);

}  // namespace tg
