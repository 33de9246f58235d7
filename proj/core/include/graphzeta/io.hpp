#pragma once

#include "graphzeta/spectral.hpp"
#include "graphzeta/walk_operators.hpp"
#include "graphzeta/zeta.hpp"

#include <string>

namespace graphzeta {

/// Shortest decimal that parses back to the same double.
std::string shortest_decimal(double x);
/// Fixed 12-significant-digit rendering used by the text reports.
std::string text_number(double x);

// JSON and CSV exports. JSON numbers use shortest round-trip decimals.

/// {"rows":r,"cols":c,"data":[[...],...]}
std::string matrix_to_json(const RealMatrix& m);
/// One row per line, comma separated.
std::string matrix_to_csv(const RealMatrix& m);

/// {"entries":[{"re":..,"im":..,"mult":..}],"tol":..}
std::string spectrum_to_json(const Spectrum& s);
/// Columns re,im,mult.
std::string spectrum_to_csv(const Spectrum& s);
std::string spectrum_to_text(const Spectrum& s);

/// {"case":"M_EQ_N","zeros":[{"gamma":..,"mult":..},{"gamma":"inf","mult":..}]}
std::string zero_set_to_json(const ZeroSet& z);
/// Finite zeros only, columns re,gamma,mult with re fixed at 0.5.
std::string zero_set_to_csv(const ZeroSet& z);
std::string zero_set_to_text(const ZeroSet& z);

std::string m_spectrum_to_json(const MSpectrum& m);
std::string m_spectrum_to_text(const MSpectrum& m);

std::string report_to_json(const VerificationReport& r);
/// One summary line.
std::string report_to_text(const VerificationReport& r);

}  // namespace graphzeta
