#pragma once

namespace qnmc {

/// Numeric tolerances shared by state validation, the eigensolver and the
/// invariant checks. Production code and tests read the same constants so
/// they can never disagree about what counts as Hermitian, unit-trace, etc.
struct Tolerances {
    double hermitian = 1e-10;        // max |a(i,j) - conj(a(j,i))|
    double unit_trace = 1e-10;       // |Tr(rho) - 1|
    double psd = 1e-10;              // eigenvalues of a state may dip to -psd
    double purity = 1e-10;           // |Tr(rho^2) - 1| for pure states
    double jacobi_off_diag = 1e-12;  // off-diagonal Frobenius mass at convergence
    int jacobi_max_sweeps = 100;
    double reconstruction = 1e-9;    // ||m - V L V^dag||_max
    double centroid_witness = 1e-6;  // max-entry gap proving a centroid is mixed
};

inline constexpr Tolerances kTol{};

}  // namespace qnmc
