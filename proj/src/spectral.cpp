#include "specpart/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specpart {

SymMatrix::SymMatrix(int order) : n_(order) {
    if (order < 0) throw PreconditionError("matrix order must be nonnegative");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix SymMatrix::adjacency(const Graph& g) {
    SymMatrix m(g.order());
    for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& values) {
    SymMatrix m(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), values[i]);
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw PreconditionError("matrix index out of range");
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const {
    if (n_ != other.n_) throw PreconditionError("matrix orders differ");
    SymMatrix s(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + other.a_[k];
    return s;
}

namespace {

double hypot_stable(double a, double b) {
    double absa = std::abs(a), absb = std::abs(b);
    if (absa > absb) {
        double r = absb / absa;
        return absa * std::sqrt(1.0 + r * r);
    }
    if (absb == 0.0) return 0.0;
    double r = absa / absb;
    return absb * std::sqrt(1.0 + r * r);
}

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form; eigenvalue-only variant, no transformation accumulated.
// On return d holds the diagonal and e[i] the subdiagonal between i and i+1.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[static_cast<std::size_t>(i) * n + k]);
            if (scale == 0.0) {
                e[i] = a[static_cast<std::size_t>(i) * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[static_cast<std::size_t>(i) * n + k] /= scale;
                    h += a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(i) * n + k];
                }
                double f = a[static_cast<std::size_t>(i) * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[static_cast<std::size_t>(i) * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    double gg = 0.0;
                    for (int k = 0; k <= j; ++k)
                        gg += a[static_cast<std::size_t>(j) * n + k] * a[static_cast<std::size_t>(i) * n + k];
                    for (int k = j + 1; k <= l; ++k)
                        gg += a[static_cast<std::size_t>(k) * n + j] * a[static_cast<std::size_t>(i) * n + k];
                    e[j] = gg / h;
                    f += e[j] * a[static_cast<std::size_t>(i) * n + j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[static_cast<std::size_t>(i) * n + j];
                    double g2 = e[j] - hh * f;
                    e[j] = g2;
                    for (int k = 0; k <= j; ++k)
                        a[static_cast<std::size_t>(j) * n + k] -=
                            f * e[k] + g2 * a[static_cast<std::size_t>(i) * n + k];
                }
            }
        } else {
            e[i] = a[static_cast<std::size_t>(i) * n + l];
        }
    }
    for (int i = 0; i < n; ++i) d[i] = a[static_cast<std::size_t>(i) * n + i];
    for (int i = 0; i < n - 1; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
}

// Implicit-shift QL iteration on a tridiagonal matrix; eigenvalues land in d.
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr int kMaxIter = 64;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxIter) throw Error("eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot_stable(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot_stable(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrix& m) {
    int n = m.order();
    if (n < 1) throw PreconditionError("eigensolver needs order >= 1");
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = m(i, j);
            if (!std::isfinite(v)) throw PreconditionError("matrix has a non-finite entry");
            a[static_cast<std::size_t>(i) * n + j] = v;
        }
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = a[0];
    } else {
        tridiagonalize(a, n, d, e);
        ql_eigenvalues(d, e, n);
    }
    std::sort(d.begin(), d.end(), std::greater<double>());

    Spectrum s;
    s.eigenvalues = std::move(d);
    for (double v : s.eigenvalues) {
        if (!s.grouped.empty() && std::abs(v - s.grouped.back().first) <= kGroupTol) {
            auto& [val, mult] = s.grouped.back();
            // Running mean keeps the representative centered on the cluster.
            val = (val * mult + v) / (mult + 1);
            ++mult;
        } else {
            s.grouped.emplace_back(v, 1);
        }
    }
    return s;
}

double spectral_radius(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("spectral radius needs n >= 1");
    return sym_eigenvalues(SymMatrix::adjacency(g)).eigenvalues.front();
}

double lambda_min(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("lambda_min needs n >= 1");
    return sym_eigenvalues(SymMatrix::adjacency(g)).eigenvalues.back();
}

int count_not_minus_one(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("eigenvalue count needs n >= 1");
    Spectrum s = sym_eigenvalues(SymMatrix::adjacency(g));
    int q = 0;
    for (double v : s.eigenvalues)
        if (std::abs(v + 1.0) > kGroupTol) ++q;
    return q;
}

WeylCheck check_weyl(const SymMatrix& a, const SymMatrix& b, int i, int j) {
    int n = a.order();
    if (b.order() != n) throw PreconditionError("matrix orders differ");
    if (i < 1 || i > n || j < 1 || j > n) throw PreconditionError("eigenvalue rank out of range");
    Spectrum sa = sym_eigenvalues(a);
    Spectrum sb = sym_eigenvalues(b);
    Spectrum sab = sym_eigenvalues(a + b);
    WeylCheck result;
    if (j <= i) {
        double rhs = sa.eigenvalues[j - 1] + sb.eigenvalues[i - j];  // rank i+1-j
        result.upper = sab.eigenvalues[i - 1] <= rhs + kEigTol;
    }
    if (i <= j) {
        double rhs = sa.eigenvalues[j - 1] + sb.eigenvalues[i + n - j - 1];  // rank i+n-j
        result.lower = sab.eigenvalues[i - 1] >= rhs - kEigTol;
    }
    return result;
}

double max_row_sum(const SymMatrix& m) {
    int n = m.order();
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = m(i, j);
            if (v < 0.0) throw PreconditionError("max_row_sum needs nonnegative entries");
            sum += v;
        }
        best = i == 0 ? sum : std::max(best, sum);
    }
    return best;
}

}  // namespace specpart
