#pragma once

#include <cmath>

namespace specpart::closed_forms {

// Symbolic values of the four clique-partition lower bounds on the graph
// families with known spectra. Used to report formula residuals next to the
// numerically evaluated bounds.
struct FamilyBounds {
    double cp_spectral = 0.0;
    double cp_via_pi = 0.0;
    double hoffman_q = 0.0;
    double hoffman_lambda = 0.0;
};

// Complete multipartite K_{p x a}, p, a >= 2.
inline FamilyBounds multipartite(int p, int a) {
    FamilyBounds f;
    f.cp_spectral = static_cast<double>(p) * (a - 1) + 1;
    f.cp_via_pi = static_cast<double>(a) * a;
    f.hoffman_q = (-1.0 + std::sqrt(8.0 * p * a + 1.0)) / 2.0;
    f.hoffman_lambda = a;
    return f;
}

// Complement of the odd cycle on 2s+1 vertices, s >= 2.
inline FamilyBounds cycle_complement(int s) {
    FamilyBounds f;
    f.cp_spectral = s + 1;
    f.cp_via_pi = (4.0 * s + 2.0) / s;
    f.hoffman_q = (-1.0 + std::sqrt(16.0 * s + 9.0)) / 2.0;
    f.hoffman_lambda = 2.0 * std::cos(2.0 * M_PI / (2.0 * s + 1.0)) + 1.0;
    return f;
}

// Triangular graph T(v), v >= 4.
inline FamilyBounds triangular(int v) {
    FamilyBounds f;
    f.cp_spectral = v;
    f.cp_via_pi = v;
    f.hoffman_q = v - 1;
    f.hoffman_lambda = 2.0;
    return f;
}

// Friendship graph F_v, v >= 2.
inline FamilyBounds friendship(int v) {
    FamilyBounds f;
    f.cp_spectral = (-1.0 + std::sqrt(8.0 * v + 1.0)) / 2.0;
    f.cp_via_pi = (4.0 * v - 1.0 + std::sqrt(8.0 * v + 1.0)) / 6.0;
    f.hoffman_q = (-1.0 + std::sqrt(8.0 * v + 9.0)) / 2.0;
    f.hoffman_lambda = (-1.0 + std::sqrt(8.0 * v + 1.0)) / 2.0;
    return f;
}

}  // namespace specpart::closed_forms
