#ifndef SYMCOVER_IO_HPP
#define SYMCOVER_IO_HPP

#include "coverage.hpp"
#include "point_cloud.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

/**
 * @file io.hpp
 *
 * @brief Point-cloud CSV files and JSON Lines manifests.
 *
 * Cloud CSV: one point per line, d comma-separated decimal coordinates, an
 * optional non-numeric header line, `#` comment lines ignored. Values are
 * written in shortest round-trip form, so reading and rewriting a file
 * reproduces its coordinates bit for bit.
 *
 * Manifest: one JSON object per line, `{"path": "...", "label": 3}`. Relative
 * paths resolve against the manifest's directory. A line of the form
 * `{"normalization": {"sample_n": 256, "shift_positive": true, "divide_max_axis": true}}`
 * sets the preprocessing applied to every entry.
 */

namespace symcover::io {

namespace fs = std::filesystem;

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
    if (v == 0.0) {
        return std::signbit(v) ? "-0" : "0";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// printf-style %.{sig}g rendering, used for reported distances.
inline std::string format_sig(double v, int sig = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool parse_double(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) {
        return false;
    }
    const char* first = t.data();
    if (*first == '+') {
        ++first;
    }
    auto res = std::from_chars(first, t.data() + t.size(), out);
    return res.ec == std::errc() && res.ptr == t.data() + t.size();
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) {
        out.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

} // namespace detail

/// Rows of numbers as they appear in the file (header and comments dropped).
inline std::vector<std::vector<double>> read_csv_rows(std::istream& in, const std::string& origin) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto fields = detail::split(t, ',');
        std::vector<double> row;
        row.reserve(fields.size());
        bool numeric = true;
        for (const auto& f : fields) {
            double v = 0.0;
            if (!detail::parse_double(f, v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (first_content) {
                first_content = false; // header
                continue;
            }
            throw DomainError(origin + ":" + std::to_string(lineno) + ": non-numeric field");
        }
        first_content = false;
        if (!rows.empty() && rows.front().size() != row.size()) {
            throw DomainError(origin + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(rows.front().size()) + " fields, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw DomainError(origin + ": no data rows");
    }
    return rows;
}

/// Converts file rows (one point per row) into a d x n cloud.
inline PointCloud cloud_from_point_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    const std::size_t d = rows.front().size();
    PointCloud out(d, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < d; ++r) {
            out(r, j) = rows[j][r];
        }
    }
    return out;
}

inline PointCloud read_cloud_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open " + path.string());
    }
    return cloud_from_point_rows(read_csv_rows(in, path.string()));
}

inline void write_cloud_csv(std::ostream& out, const PointCloud& x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t r = 0; r < x.dim(); ++r) {
            if (r > 0) {
                out << ',';
            }
            out << format_double(x(r, j));
        }
        out << '\n';
    }
}

inline void write_cloud_csv(const fs::path& path, const PointCloud& x) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write " + path.string());
    }
    write_cloud_csv(out, x);
}

// ---- manifests ----

/// Per-cloud preprocessing: subsample points, shift to the positive orthant, scale by the largest extent.
struct Normalization {
    std::size_t sample_n = 0; ///< 0 keeps every point
    bool shift_positive = false;
    bool divide_max_axis = false;

    bool active() const { return sample_n > 0 || shift_positive || divide_max_axis; }
};

struct ManifestEntry {
    std::string path;
    std::optional<std::uint64_t> label;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
    std::optional<Normalization> normalization;
    fs::path base_dir;
};

inline Manifest read_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open manifest " + path.string());
    }
    Manifest m;
    m.base_dir = path.parent_path();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!j.is_object()) {
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": expected a JSON object");
        }
        if (j.contains("normalization")) {
            const auto& nj = j["normalization"];
            Normalization norm;
            norm.sample_n = nj.value("sample_n", std::size_t{0});
            norm.shift_positive = nj.value("shift_positive", false);
            norm.divide_max_axis = nj.value("divide_max_axis", false);
            m.normalization = norm;
            continue;
        }
        if (!j.contains("path") || !j["path"].is_string()) {
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": missing \"path\"");
        }
        ManifestEntry e;
        e.path = j["path"].get<std::string>();
        if (j.contains("label") && !j["label"].is_null()) {
            if (!j["label"].is_number_unsigned() && !(j["label"].is_number_integer() && j["label"].get<long long>() >= 0)) {
                throw DomainError(path.string() + ":" + std::to_string(lineno) + ": label must be a non-negative integer");
            }
            e.label = j["label"].get<std::uint64_t>();
        }
        m.entries.push_back(std::move(e));
    }
    return m;
}

inline void write_manifest(const fs::path& path, const Manifest& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write manifest " + path.string());
    }
    if (m.normalization) {
        nlohmann::ordered_json nj;
        nj["normalization"] = {{"sample_n", m.normalization->sample_n},
                               {"shift_positive", m.normalization->shift_positive},
                               {"divide_max_axis", m.normalization->divide_max_axis}};
        out << nj.dump() << '\n';
    }
    for (const auto& e : m.entries) {
        nlohmann::ordered_json j;
        j["path"] = e.path;
        if (e.label) {
            j["label"] = *e.label;
        }
        out << j.dump() << '\n';
    }
}

/**
 * @brief Subsamples the cloud, then shifts and scales it as requested.
 *
 * Subsampling draws `sample_n` distinct points without replacement (keeping
 * their original relative order) from a generator seeded by `seed`.
 */
inline PointCloud normalize(const PointCloud& x, const Normalization& norm, std::uint64_t seed) {
    PointCloud out = x;
    if (norm.sample_n > 0) {
        if (norm.sample_n > x.size()) {
            throw DomainError("normalize: sample_n=" + std::to_string(norm.sample_n) + " exceeds the " +
                              std::to_string(x.size()) + " points available");
        }
        std::vector<std::size_t> idx(x.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < norm.sample_n; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(norm.sample_n);
        std::sort(idx.begin(), idx.end());
        PointCloud sampled(x.dim(), norm.sample_n);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            for (std::size_t r = 0; r < x.dim(); ++r) {
                sampled(r, j) = x(r, idx[j]);
            }
        }
        sampled.set_label(x.label());
        out = std::move(sampled);
    }
    if (norm.shift_positive) {
        std::vector<double> mins(out.dim(), std::numeric_limits<double>::infinity());
        for (std::size_t j = 0; j < out.size(); ++j) {
            for (std::size_t r = 0; r < out.dim(); ++r) {
                mins[r] = std::min(mins[r], out(r, j));
            }
        }
        out = apply_shift(out, mins);
    }
    if (norm.divide_max_axis) {
        double top = 0.0;
        for (double v : out.values()) {
            top = std::max(top, std::abs(v));
        }
        if (top > 0.0) {
            for (double& v : out.values()) {
                v /= top;
            }
        }
    }
    return out;
}

/// Loads every entry with its label, normalizing as the manifest says.
inline Dataset load_dataset(const fs::path& manifest_path, std::uint64_t seed,
                            std::optional<Normalization> override_norm = std::nullopt) {
    const Manifest m = read_manifest(manifest_path);
    Dataset ds;
    ds.name = manifest_path.stem().string();
    const auto norm = override_norm ? override_norm : m.normalization;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const auto& e = m.entries[i];
        fs::path p(e.path);
        if (p.is_relative()) {
            p = m.base_dir / p;
        }
        if (!fs::exists(p)) {
            throw DomainError("manifest entry not found: " + p.string());
        }
        PointCloud cloud = read_cloud_csv(p);
        if (norm && norm->active()) {
            cloud = normalize(cloud, *norm, seed + i);
        }
        cloud.set_label(e.label);
        if (!ds.items.empty() && ds.items.front().dim() != cloud.dim()) {
            throw DomainError("manifest " + manifest_path.string() + ": entry " + p.string() + " has d=" +
                              std::to_string(cloud.dim()) + ", expected " + std::to_string(ds.items.front().dim()));
        }
        ds.items.push_back(std::move(cloud));
    }
    if (ds.items.empty()) {
        throw DomainError("manifest " + manifest_path.string() + " has no entries");
    }
    return ds;
}

} // namespace symcover::io

#endif // SYMCOVER_IO_HPP
