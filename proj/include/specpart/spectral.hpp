#pragma once

#include <utility>
#include <vector>

#include "specpart/graph.hpp"

namespace specpart {

// Absolute eigenvalue accuracy delivered by the solver for entries of
// magnitude up to ~1e3.
inline constexpr double kEigTol = 1e-9;

// Tolerance for grouping eigenvalues into multiplicities and for the
// "is this eigenvalue -1" test. Adjacency spectra are algebraic integers
// whose gaps at desk scale sit far above this.
inline constexpr double kGroupTol = 1e-6;

/// Dense real symmetric matrix. Entries are stored mirrored, so symmetry
/// holds exactly by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order);

    static SymMatrix adjacency(const Graph& g);
    static SymMatrix diagonal(const std::vector<double>& values);

    int order() const { return n_; }

    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    // Assigns (i, j) and (j, i) together.
    void set(int i, int j, double value);

    double trace() const;

    SymMatrix operator+(const SymMatrix& other) const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// All eigenvalues of a symmetric matrix, sorted descending, plus the
/// grouped (value, multiplicity) view built with kGroupTol.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<std::pair<double, int>> grouped;
};

// Householder tridiagonalization followed by implicit-shift QL iteration.
// Self-contained, O(n^3), deterministic. Throws on non-finite entries.
Spectrum sym_eigenvalues(const SymMatrix& m);

double spectral_radius(const Graph& g);
double lambda_min(const Graph& g);

// Number of adjacency eigenvalues different from -1 (within kGroupTol).
int count_not_minus_one(const Graph& g);

struct WeylCheck {
    bool upper = true;  // lambda_i(A+B) <= lambda_j(A) + lambda_{i+1-j}(B), needs j <= i
    bool lower = true;  // lambda_i(A+B) >= lambda_j(A) + lambda_{i+n-j}(B), needs i <= j
};

// i and j are 1-based ranks (lambda_1 is the largest eigenvalue). A side
// whose index constraint does not apply reports true.
WeylCheck check_weyl(const SymMatrix& a, const SymMatrix& b, int i, int j);

// Maximum row sum of a nonnegative symmetric matrix; rejects negative
// entries.
double max_row_sum(const SymMatrix& m);

}  // namespace specpart
