#pragma once

// Persistent cache of Bessel zero tables.
//
// File format (text, one table per file):
//
//   viscobessel-zeros v1
//   nu=<decimal> n=<count>
//   <zero 1>
//   ...
//
// Numbers are written with 17 significant digits, so parsing reproduces
// every double bit for bit. Files are keyed by (nu, n, accuracy) through
// their name.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "viscobessel/error.hpp"
#include "viscobessel/specfun/zeros.hpp"

namespace viscobessel::specfun {

inline constexpr const char* zero_cache_magic = "viscobessel-zeros v1";
inline constexpr const char* zero_cache_env = "VISCOBESSEL_CACHE_DIR";

/// Shortest-safe round-trip formatting used by every text output.
inline std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

inline double parse_double(std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw parse_error(line, "invalid number '" + std::string(text) + "'");
    }
    return value;
}

inline void write_zero_table(std::ostream& out, const ZeroTable& table) {
    out << zero_cache_magic << '\n';
    out << "nu=" << format_double(table.order()) << " n=" << table.size() << '\n';
    for (double z : table.zeros()) {
        out << format_double(z) << '\n';
    }
}

inline ZeroTable read_zero_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != zero_cache_magic) {
        throw parse_error(1, "expected header 'viscobessel-zeros v1'");
    }
    if (!std::getline(in, line) || line.rfind("nu=", 0) != 0) {
        throw parse_error(2, "expected 'nu=<decimal> n=<count>'");
    }
    const auto space = line.find(" n=");
    if (space == std::string::npos) {
        throw parse_error(2, "expected 'nu=<decimal> n=<count>'");
    }
    const double nu = parse_double(std::string_view(line).substr(3, space - 3), 2);
    const std::string count_text = line.substr(space + 3);
    std::size_t count = 0;
    {
        const auto [ptr, ec] =
            std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
        if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count == 0) {
            throw parse_error(2, "invalid zero count '" + count_text + "'");
        }
    }
    std::vector<double> zeros;
    zeros.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) {
            throw parse_error(3 + i, "file ends before " + std::to_string(count) + " zeros");
        }
        zeros.push_back(parse_double(line, 3 + i));
    }
    return ZeroTable(nu, std::move(zeros));
}

/// Cache file name for a table request.
inline std::string zero_cache_filename(double nu, std::size_t n) {
    return "zeros_nu" + format_double(nu) + "_n" + std::to_string(n) + "_acc1e-10.txt";
}

/// Cache directory from $VISCOBESSEL_CACHE_DIR, else $XDG_CACHE_HOME/viscobessel,
/// else $HOME/.cache/viscobessel. Empty when none of them is set.
inline std::filesystem::path default_cache_directory() {
    if (const char* dir = std::getenv(zero_cache_env); dir && *dir) {
        return dir;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "viscobessel";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "viscobessel";
    }
    return {};
}

/// Thread-safe memo of zero tables, optionally backed by a directory.
/// An empty directory keeps tables in memory only.
class ZeroCache {
public:
    explicit ZeroCache(std::filesystem::path directory = {}) : directory_(std::move(directory)) {}

    const std::filesystem::path& directory() const noexcept { return directory_; }

    std::filesystem::path file_for(double nu, std::size_t n) const {
        return directory_ / zero_cache_filename(nu, n);
    }

    /// Returns the table, loading or computing (and persisting) it on first use.
    std::shared_ptr<const ZeroTable> get(double nu, std::size_t n) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(nu, n);
        if (auto it = tables_.find(key); it != tables_.end()) {
            return it->second;
        }
        std::shared_ptr<const ZeroTable> table;
        if (!directory_.empty()) {
            table = try_load(nu, n);
        }
        if (!table) {
            table = std::make_shared<const ZeroTable>(bessel_j_zeros(nu, n));
            if (!directory_.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(directory_, ec);
                store(*table, ec);
            }
        }
        tables_.emplace(key, table);
        return table;
    }

    /// Writes the table file; reports failure through ec.
    void store(const ZeroTable& table, std::error_code& ec) const {
        const auto path = file_for(table.order(), table.size());
        std::ostringstream text;
        write_zero_table(text, table);
        const auto temporary = path.string() + ".tmp";
        {
            std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
            if (!out || !(out << text.str()) || !out.flush()) {
                ec = std::make_error_code(std::errc::io_error);
                return;
            }
        }
        std::filesystem::rename(temporary, path, ec);
    }

    /// Process-wide in-memory cache using default_cache_directory().
    static ZeroCache& global() {
        static ZeroCache instance(default_cache_directory());
        return instance;
    }

private:
    std::shared_ptr<const ZeroTable> try_load(double nu, std::size_t n) const {
        std::ifstream in(file_for(nu, n), std::ios::binary);
        if (!in) {
            return nullptr;
        }
        try {
            auto table = read_zero_table(in);
            if (table.order() != nu || table.size() != n) {
                return nullptr;
            }
            return std::make_shared<const ZeroTable>(std::move(table));
        } catch (const std::exception&) {
            return nullptr;  // corrupt files are recomputed and overwritten
        }
    }

    std::filesystem::path directory_;
    std::mutex mutex_;
    std::map<std::pair<double, std::size_t>, std::shared_ptr<const ZeroTable>> tables_;
};

}  // namespace viscobessel::specfun
