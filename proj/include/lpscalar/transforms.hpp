#pragma once

#include <utility>

#include "lpscalar/grid.hpp"
#include "lpscalar/symbol.hpp"

namespace lpscalar {

/// Forward transform: coefficients of e^{i xi.x} (analysis carries the 1/n^2).
/// Throws data_error on non-finite samples.
SpectralField forward_transform(const PhysicalField& f);

/// Inverse transform. Requires conjugate symmetry within 1e-10 relative
/// (throws data_error otherwise); the imaginary residue is discarded.
PhysicalField inverse_transform(const SpectralField& F);

/// Pointwise multiplication of the coefficients by m(xi). Linear in F.
/// Throws data_error if the symbol is non-finite at a resolved mode.
SpectralField apply_symbol(const SpectralField& F, const Symbol& m);

/// Vector symbol: returns the two component fields.
std::pair<SpectralField, SpectralField> apply_symbol(const SpectralField& F,
                                                     const VectorSymbol& m);

/// 2/3-rule truncation: zero every mode with |xi1| > n/3 or |xi2| > n/3.
SpectralField dealias(const SpectralField& F);

/// True if the mode survives the 2/3-rule cut (3|xi_i| <= n on both axes).
bool in_dealias_band(const Grid2D& g, int xi1, int xi2);

/// ||f||_{L^2} from the coefficients: 2*pi*sqrt(sum |c|^2) (Plancherel).
double l2_norm(const SpectralField& F);

/// Max over modes of |c(-xi) - conj(c(xi))|, relative to max |c|
/// (0 for the zero field).
double conjugate_asymmetry(const SpectralField& F);

/// Zero the (0,0) coefficient (mean-zero gauge).
void project_mean_zero(SpectralField& F);

}  // namespace lpscalar
