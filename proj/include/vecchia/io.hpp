/* Deterministic artifact IO: CSV/JSON writers that stamp every output with
 * the tool version, the resolved configuration, and the seed, so a rerun
 * of the embedded configuration reproduces the file byte for byte. */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vecchia {

// Shortest-exact decimal rendering of a double (%.17g).
std::string fmt_double(double v);

struct OutputMeta {
    std::string config_line;  // one-line JSON of the resolved configuration
    bool has_seed = false;
    std::uint64_t seed = 0;
};

// Writes "# tool:", "# config:", and (when present) "# seed:" comment
// lines, then the header, then the rows.
void write_csv(const std::string& path, const OutputMeta& meta,
               const std::string& header, const std::vector<std::string>& rows);

// Pretty-printed JSON (sorted keys, 2-space indent, trailing newline).
void write_json_file(const std::string& path, const nlohmann::json& j);

// Output directory resolution: an explicit --out wins, then the
// VECCHIA_OUTDIR environment variable, then the working directory.
// The directory is created if missing.
std::string resolve_outdir(const std::string& cli_out);

// A sample table written by the simulate command: point coordinates and
// field values plus the stamped metadata.
struct SampleData {
    int dim = 1;
    std::vector<std::array<double, 2>> points;
    std::vector<double> values;
    nlohmann::json config;  // the generating command's resolved config
    bool has_seed = false;
    std::uint64_t seed = 0;
};

void write_sample_csv(const std::string& path, const OutputMeta& meta, int dim,
                      const std::vector<std::array<double, 2>>& points,
                      const std::vector<double>& values);

// Parses a sample CSV back, including its metadata lines.  Throws
// config_error with the offending line on malformed input.
SampleData read_sample_csv(const std::string& path);

}  // namespace vecchia
