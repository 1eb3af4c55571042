#pragma once

#include <string>
#include <vector>

#include "pfsm/operator.hpp"

namespace pfsm {

struct Band {
  Scalar lo;
  Scalar hi;
};

/// Closed bands in ascending order. merged[i] tells whether the gap between
/// input bands i and i+1 was closed by coalescing (only after merge_touching).
struct BandSet {
  std::vector<Band> bands;
  std::vector<bool> merged;
  std::vector<std::string> warnings;
};

/// sigma(H) from the roots E_1 <= ... <= E_2K of tr M(E) -/+ 2, paired as
/// [E_1,E_2], [E_3,E_4], ...; touching bands stay separate.
BandSet spectrum_bands(const Potential& p);

/// Coalesces adjacent bands that share an endpoint.
BandSet merge_touching(const BandSet& s);

struct Invertibility {
  bool invertible;
  Scalar trace;  // tr M(0)
};

/// |tr M(0)| > 2, decided exactly for exact potentials.
Invertibility is_invertible(const Potential& p);

/// Eigenvalues of H_{0..K-2}, checked against the zeros of M(E)_{2,1}.
/// Period 1 is doubled first.
std::vector<Scalar> dirichlet_candidates(const Potential& p);

struct DirichletEigenvalue {
  Scalar energy;
  long shift;
  bool reversed;
};

struct OneSidedSpectrum {
  BandSet bands;
  std::vector<DirichletEigenvalue> dirichlet;
  std::vector<Scalar> rejected;  // candidates with |M_{1,1}| >= 1
};

/// sigma(H_+) = sigma(H) plus the candidates with |M(E)_{1,1}| < 1.
OneSidedSpectrum one_sided_spectrum(const Potential& p);

/// Eigenvalues of H_{0..K-1} with corner entries e^{-i phi} (top right) and
/// e^{i phi} (bottom left), ascending. Period 1 is doubled first.
std::vector<double> floquet_eigenvalues(const Potential& p, double phi);

struct Interlacing {
  bool holds;
  std::vector<double> dirichlet;
  std::vector<double> floquet;
  std::string witness;  // first violated comparison, empty when holds
};

/// F_1 <= D_1 <= F_2 <= ... <= D_{K-1} <= F_K within 1e-9.
Interlacing check_interlacing(const Potential& p, double phi);

enum class SweepRowType { Band, Dirichlet };

struct SweepRow {
  double lambda;
  SweepRowType type;
  long shift;     // -1 for band rows
  bool reversed;  // dirichlet rows: from M~^(j) instead of M^(j)
  double e_lo;
  double e_hi;
  int branch;  // index of the eigenvalue of H_{0..K-2}; not emitted
};

/// Bands of lambda*w and, optionally, the accepted Dirichlet eigenvalues of
/// every shift in both orientations, for each lambda on the grid.
std::vector<SweepRow> band_diagram_sweep(const std::vector<int>& word, const std::vector<double>& grid,
                                         bool include_dirichlet);

/// Dirichlet eigenvalues in float arithmetic for one compression: returns
/// (branch index, energy) for accepted candidates.
std::vector<std::pair<int, double>> float_dirichlet(const Potential& p);

}  // namespace pfsm
