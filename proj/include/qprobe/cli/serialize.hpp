#pragma once

// JSON encodings of matrices, channels, filters and result records.
//
// MatrixFile: {"dims": [dA, dB], "re": [[...]], "im": [[...]]}, row-major.
// Channel:    {"d_in": n, "d_out": m, "kraus": [{"re": ..., "im": ...}, ...]}
// Filters:    {"A": {"re": ..., "im": ...}, "B": {...}}
// Non-finite reals (an infinite condition number) serialize as null.

#include "qprobe/channels.hpp"
#include "qprobe/diagnostics.hpp"
#include "qprobe/error.hpp"
#include "qprobe/filtering.hpp"
#include "qprobe/seesaw.hpp"
#include "qprobe/tomography.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qprobe::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed user input (bad file, wrong shape, failed role validation).
class InputError : public Error {
 public:
  using Error::Error;
};

json real_json(double x);
json vector_json(const RealVector& v);

json matrix_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json matrix_file_json(const BipartiteOperator& op);
BipartiteOperator matrix_file_from_json(const json& j);

/// Reads a MatrixFile and validates it as a density matrix.
DensityMatrix read_state_file(const std::filesystem::path& path);

json channel_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);

json filter_json(const FilterPair& f);
FilterPair filter_from_json(const json& j);

json report_json(const DiagnosticsReport& r);
json rudolph_json(const RudolphReport& r);
json filter_analysis_json(const FilterAnalysis& a);
json seesaw_json(const SeesawResult& r);
json reconstruction_json(const ReconstructionResult& r);

json load_json_file(const std::filesystem::path& path);

/// Pretty-printed with a trailing newline. Doubles are written in
/// shortest round-trip form (at most 17 significant digits).
std::string dump(const json& j);

}  // namespace qprobe::cli
