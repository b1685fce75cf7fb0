#include "qmat.hpp"

#include <algorithm>
#include <cmath>

namespace tg {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sum shape mismatch");
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix difference shape mismatch");
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
    QMat r(rows_, o.cols_);
    Rat acc;
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) += aik * b;
            }
        }
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QMat QMat::operator-() const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat QMat::trace() const {
    if (rows_ != cols_) throw shape_error("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

namespace {

// Clears denominators row by row; resulting matrix has the same rank.
std::vector<std::vector<mpz_class>> integerize_rows(const QMat& m) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            z[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return z;
}

}  // namespace

int QMat::rank() const {
    auto z = integerize_rows(*this);
    int n = rows_, m = cols_;
    int r = 0;
    mpz_class prev = 1;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (z[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(z[r], z[piv]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = col + 1; j < m; ++j) {
                mpz_class t = z[i][j] * z[r][col] - z[i][col] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[r][col];
        ++r;
    }
    return r;
}

std::vector<std::vector<Rat>> QMat::kernel_basis() const {
    // Reduced row echelon over the rationals, then parametrize free columns.
    int n = rows_, m = cols_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = at(i, j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat inv = 1 / a[r][col];
        for (int j = col; j < m; ++j) a[r][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(m, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m);
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat QMat::det() const {
    if (rows_ != cols_) throw shape_error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss on the denominator-cleared matrix, dividing out row multipliers.
    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    Rat scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
        scale /= Rat(l);
        for (int j = 0; j < n; ++j) z[i][j] = at(i, j).get_num() * (l / at(i, j).get_den());
    }
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (z[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(z[k], z[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    Rat d(z[n - 1][n - 1]);
    return d * scale * sign;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw shape_error("inverse of non-square matrix");
    int n = rows_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw domain_error("singular matrix");
        std::swap(a[col], a[piv]);
        Rat inv = 1 / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    QMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
    return r;
}

std::optional<std::vector<Rat>> QMat::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw shape_error("solve rhs size mismatch");
    int n = rows_, m = cols_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = at(i, j);
        a[i][m] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat inv = 1 / a[r][col];
        for (int j = col; j <= m; ++j) a[r][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j <= m; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (a[i][m] != 0) return std::nullopt;
    std::vector<Rat> x(m);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][m];
    return x;
}

std::vector<Rat> QMat::char_poly() const {
    if (rows_ != cols_) throw shape_error("characteristic polynomial of non-square matrix");
    int n = rows_;
    // Berkowitz: descending coefficients, built by iterated Toeplitz products.
    std::vector<Rat> p{Rat(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Rat> c(static_cast<size_t>(k) + 1);
        c[0] = 1;
        c[1] = -at(k - 1, k - 1);
        if (k >= 2) {
            std::vector<Rat> w(k - 1);
            for (int i = 0; i < k - 1; ++i) w[i] = at(i, k - 1);
            for (int j = 2; j <= k; ++j) {
                Rat dot = 0;
                for (int i = 0; i < k - 1; ++i) dot += at(k - 1, i) * w[i];
                c[j] = -dot;
                if (j < k) {
                    std::vector<Rat> w2(k - 1);
                    for (int i = 0; i < k - 1; ++i) {
                        Rat acc = 0;
                        for (int t = 0; t < k - 1; ++t)
                            if (at(i, t) != 0 && w[t] != 0) acc += at(i, t) * w[t];
                        w2[i] = acc;
                    }
                    w = std::move(w2);
                }
            }
        }
        // Toeplitz product: q[i] = sum_j c[i-j] p[j], truncated at degree k.
        std::vector<Rat> q(static_cast<size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) {
            Rat acc = 0;
            int jmax = std::min<int>(i, static_cast<int>(p.size()) - 1);
            for (int j = 0; j <= jmax; ++j)
                if (c[i - j] != 0 && p[j] != 0) acc += c[i - j] * p[j];
            q[i] = acc;
        }
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

DMat DMat::operator*(const DMat& o) const {
    if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
    DMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

int DMat::rank(double tol, std::vector<double>* pivots) const {
    int n = rows_, m = cols_;
    std::vector<std::vector<double>> a(n, std::vector<double>(m));
    double maxabs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            a[i][j] = at(i, j);
            maxabs = std::max(maxabs, std::fabs(a[i][j]));
        }
    if (pivots) pivots->clear();
    if (maxabs == 0.0) return 0;
    double cut = tol * maxabs;
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = r;
        for (int i = r + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
        double pv = std::fabs(a[piv][col]);
        if (pivots) pivots->push_back(pv);
        if (pv <= cut) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < n; ++i) {
            double f = a[i][col] / a[r][col];
            for (int j = col; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<double>> DMat::kernel_basis(double tol) const {
    int n = rows_, m = cols_;
    std::vector<std::vector<double>> a(n, std::vector<double>(m));
    double maxabs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            a[i][j] = at(i, j);
            maxabs = std::max(maxabs, std::fabs(a[i][j]));
        }
    double cut = maxabs == 0.0 ? 0.0 : tol * maxabs;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = r;
        for (int i = r + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
        if (std::fabs(a[piv][col]) <= cut) continue;
        std::swap(a[r], a[piv]);
        double inv = 1.0 / a[r][col];
        for (int j = col; j < m; ++j) a[r][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            double f = a[i][col];
            if (f == 0.0) continue;
            for (int j = col; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(m, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<double>> basis;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(m, 0.0);
        v[free] = 1.0;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<double> DMat::singular_values() const {
    // One-sided Jacobi (Hestenes): orthogonalize columns pairwise, then read
    // the singular values off as column norms. Avoids squaring the condition
    // number the way a Gram-matrix pass would.
    int n = cols_, m = rows_;
    std::vector<std::vector<double>> a(n, std::vector<double>(m));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) a[j][i] = at(i, j);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < m; ++i) {
                    app += a[p][i] * a[p][i];
                    aqq += a[q][i] * a[q][i];
                    apq += a[p][i] * a[q][i];
                }
                if (std::fabs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < m; ++i) {
                    double vp = a[p][i], vq = a[q][i];
                    a[p][i] = c * vp - s * vq;
                    a[q][i] = s * vp + c * vq;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < m; ++i) acc += a[j][i] * a[j][i];
        sv[j] = std::sqrt(acc);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

int mat_rank(const Mat& m, double tol) {
    if (m.mode() == Mode::exact) {
        if (tol != 0.0) throw param_error("exact-mode rank requires tol = 0");
        return m.q().rank();
    }
    if (tol <= 0.0) throw param_error("approx-mode rank requires tol > 0");
    return m.d().rank(tol);
}

std::vector<std::vector<Scalar>> mat_kernel_basis(const Mat& m, double tol) {
    std::vector<std::vector<Scalar>> out;
    if (m.mode() == Mode::exact) {
        if (tol != 0.0) throw param_error("exact-mode kernel requires tol = 0");
        for (auto& v : m.q().kernel_basis()) {
            std::vector<Scalar> row;
            row.reserve(v.size());
            for (auto& x : v) row.push_back(Scalar::exact(x));
            out.push_back(std::move(row));
        }
        return out;
    }
    if (tol <= 0.0) throw param_error("approx-mode kernel requires tol > 0");
    for (auto& v : m.d().kernel_basis(tol)) {
        std::vector<Scalar> row;
        row.reserve(v.size());
        for (double x : v) row.push_back(Scalar::approx(x));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace tg
