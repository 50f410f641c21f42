#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blochgeom/antipode.hpp"
#include "blochgeom/direction.hpp"
#include "blochgeom/state.hpp"
#include "blochgeom/stratification.hpp"

namespace blochgeom::io {

using nlohmann::json;

// Matrix schema: {"dim": N, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const ComplexMatrix& m);
/// Throws DomainError on schema violations or non-Hermitian entries.
HermitianMatrix matrix_from_json(const json& j);

// Bloch schema: {"dim": N, "coords": [...]}.
json bloch_to_json(const BlochVector& v);
BlochVector bloch_from_json(const json& j);

json to_json(const StateClass& c);
json to_json(const StratumReport& r);
json to_json(const DirectionReport& r);
json to_json(const AntipodeReport& r);
json to_json(const LemmaResult& r);

/// Parses text as JSON; malformed input raises DomainError.
json parse(const std::string& text);
json read_json_file(const std::string& path);

/// Round-trip decimal, 17 significant digits.
std::string format_real(double x);
std::string format_bool(bool b);

std::string csv_row(const std::vector<std::string>& fields);

inline constexpr const char* kStratumCsvHeader = "N,p,distance,radius_p,on_sphere,satisfied";
std::string stratum_csv_row(const StratumReport& r);

}  // namespace blochgeom::io
