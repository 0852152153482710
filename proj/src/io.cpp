#include "vecchia/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vecchia/common.hpp"

namespace vecchia {

namespace {

std::string tool_line() { return std::string("vecchia_cli ") + kVersion; }

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw config_error("cannot open output file: " + path);
    return out;
}

}  // namespace

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const OutputMeta& meta,
               const std::string& header, const std::vector<std::string>& rows) {
    std::ofstream out = open_for_write(path);
    out << "# tool: " << tool_line() << "\n";
    out << "# config: " << meta.config_line << "\n";
    if (meta.has_seed) out << "# seed: " << meta.seed << "\n";
    out << header << "\n";
    for (const std::string& row : rows) out << row << "\n";
    if (!out) throw config_error("write failed: " + path);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out = open_for_write(path);
    out << j.dump(2) << "\n";
    if (!out) throw config_error("write failed: " + path);
}

std::string resolve_outdir(const std::string& cli_out) {
    std::string dir = cli_out;
    if (dir.empty()) {
        const char* env = std::getenv("VECCHIA_OUTDIR");
        dir = (env && *env) ? env : ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw config_error("cannot create output directory: " + dir);
    return dir;
}

void write_sample_csv(const std::string& path, const OutputMeta& meta, int dim,
                      const std::vector<std::array<double, 2>>& points,
                      const std::vector<double>& values) {
    std::vector<std::string> rows;
    rows.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::string row = fmt_double(points[i][0]);
        if (dim == 2) row += "," + fmt_double(points[i][1]);
        row += "," + fmt_double(values[i]);
        rows.push_back(std::move(row));
    }
    write_csv(path, meta, dim == 2 ? "x,y,value" : "x,value", rows);
}

SampleData read_sample_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open data file: " + path);

    SampleData data;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        if (line[0] == '#') {
            const auto tag_value = [&](const char* tag) -> const char* {
                const std::string prefix = std::string("# ") + tag + ": ";
                return line.rfind(prefix, 0) == 0 ? line.c_str() + prefix.size()
                                                  : nullptr;
            };
            if (const char* v = tag_value("config")) {
                data.config = nlohmann::json::parse(
                    v, nullptr, /*allow_exceptions=*/false);
                if (data.config.is_discarded())
                    throw config_error(where + ": malformed config metadata");
            } else if (const char* v = tag_value("seed")) {
                try {
                    data.seed = std::stoull(v);
                } catch (const std::exception&) {
                    throw config_error(where + ": malformed seed metadata");
                }
                data.has_seed = true;
            }
            continue;  // "# tool:" and unknown comments are informational
        }
        if (!header_seen) {
            if (line == "x,value") {
                data.dim = 1;
            } else if (line == "x,y,value") {
                data.dim = 2;
            } else {
                throw config_error(where + ": expected header 'x,value' or "
                                           "'x,y,value', got '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        std::array<double, 3> v{0.0, 0.0, 0.0};
        const int want = data.dim + 1;
        int got = 0;
        while (std::getline(cells, cell, ',')) {
            if (got >= want)
                throw config_error(where + ": too many columns");
            try {
                std::size_t used = 0;
                v[got] = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw config_error(where + ": malformed number '" + cell + "'");
            }
            ++got;
        }
        if (got != want) throw config_error(where + ": too few columns");
        data.points.push_back({v[0], data.dim == 2 ? v[1] : 0.0});
        data.values.push_back(v[data.dim]);
    }
    if (!header_seen) throw config_error(path + ": no header line found");
    if (data.values.empty()) throw config_error(path + ": no data rows");
    return data;
}

}  // namespace vecchia
