#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "pfsm/fsm.hpp"
#include "pfsm/search.hpp"
#include "pfsm/solver.hpp"
#include "pfsm/spectrum.hpp"

namespace pfsm {

using Json = nlohmann::ordered_json;

/// {"kind", "value", "decimal"}; value is the canonical lossless string.
Json to_json(const Scalar& x, int precision = 12);
/// Inverse of to_json(Scalar).
Scalar scalar_from_json(const Json& j);

Json to_json(const AlgebraicReal& r, int precision = 12);
Json to_json(const BandSet& s, int precision = 12);
Json to_json(const OneSidedSpectrum& s, int precision = 12);
Json to_json(const FsmReport& r, int precision = 12);
Json to_json(const Mat2& m, int precision = 12);
Json to_json(const SearchRecord& r, int precision = 12);
Json to_json(const FamilyResult& r, int precision = 12);
Json to_json(const ConvergenceReport& r);
Json to_json(const Interlacing& r);
Json sweep_to_json(const std::vector<SweepRow>& rows);

BandSet bands_from_json(const Json& j);
FsmReport fsm_report_from_json(const Json& j);

/// lambda,type,j,orientation,e_lo,e_hi
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// n,l,r,sigma_min_inv,error
void write_convergence_csv(std::ostream& out, const ConvergenceReport& r);

/// Columns: word, M, zeros of M21, tr(M), tr at zeros.
void write_search_table(std::ostream& out, const std::vector<SearchRecord>& records);
void write_bands_table(std::ostream& out, const BandSet& s, int precision);
void write_convergence_table(std::ostream& out, const ConvergenceReport& r);

/// Shortest round-trip form of a double.
std::string format_double(double x);

}  // namespace pfsm
