#include "falsebottom/bundle.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "falsebottom/numtext.hpp"

namespace falsebottom {

namespace {

namespace fs = std::filesystem;

std::ofstream open_for_write(const fs::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    return out;
}

std::ifstream open_for_read(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file.string());
    return in;
}

// Strips an optional trailing '\r' so files edited on other platforms
// still parse.
std::vector<std::string> read_lines(const fs::path& file) {
    std::ifstream in = open_for_read(file);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string_view> split_fields(const std::string& line) {
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            fields.push_back(rest);
            return fields;
        }
        fields.push_back(rest.substr(0, comma));
        rest.remove_prefix(comma + 1);
    }
}

double parse_cell(std::string_view field, const fs::path& file, std::size_t line_no) {
    auto v = parse_number(field);
    if (!v) {
        throw FormatError("bad number '" + std::string(field) + "' in " + file.string() +
                              " line " + std::to_string(line_no),
                          line_no);
    }
    return *v;
}

template <typename WriteCell>
void write_grid_file(const fs::path& file, std::size_t rows, std::size_t cols,
                     WriteCell&& cell) {
    std::ofstream out = open_for_write(file);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c > 0) out << ',';
            cell(out, r, c);
        }
        out << '\n';
    }
    if (!out) throw IoError("short write to " + file.string());
}

template <typename ParseCell>
void read_grid_file(const fs::path& file, std::size_t rows, std::size_t cols,
                    ParseCell&& cell) {
    const auto lines = read_lines(file);
    if (lines.size() != rows) {
        throw FormatError(file.string() + " has " + std::to_string(lines.size()) +
                          " rows, expected " + std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != cols) {
            throw FormatError(file.string() + " line " + std::to_string(r + 1) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(cols),
                              r + 1);
        }
        for (std::size_t c = 0; c < cols; ++c) cell(r, c, fields[c]);
    }
}

struct MetaFile {
    EchogramMeta meta;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

MetaFile read_meta(const fs::path& file) {
    std::map<std::string, std::string> kv;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(file)) {
        ++line_no;
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw FormatError(file.string() + " line " + std::to_string(line_no) +
                                  " is not 'key = value'",
                              line_no);
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    auto require = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw FormatError(file.string() + " is missing the key '" + std::string(key) + "'");
        return it->second;
    };
    auto number = [&](const char* key) {
        const std::string& raw = require(key);
        auto v = parse_number(raw);
        if (!v) throw FormatError(file.string() + ": key '" + std::string(key) +
                                  "' has a bad number '" + raw + "'");
        return *v;
    };
    auto count = [&](const char* key) {
        const std::string& raw = require(key);
        auto v = parse_unsigned(raw);
        if (!v) throw FormatError(file.string() + ": key '" + std::string(key) +
                                  "' has a bad count '" + raw + "'");
        return std::size_t(*v);
    };

    MetaFile m;
    m.meta.frequency_khz = number("frequency_khz");
    m.meta.range_step_m = number("range_step_m");
    m.meta.no_data = number("no_data");
    m.meta.ping_interval_s = number("ping_interval_s");
    m.meta.sound_speed_ms = number("sound_speed_ms");
    m.rows = count("rows");
    m.cols = count("cols");
    return m;  // unknown keys in kv are deliberately ignored
}

}  // namespace

void write_bundle(const fs::path& dir, const GridBundle& bundle) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    const Echogram& e = bundle.echogram;
    {
        std::ofstream out = open_for_write(dir / "meta");
        out << "frequency_khz = " << format_number(e.frequency_khz()) << '\n'
            << "range_step_m = " << format_number(e.range_step_m()) << '\n'
            << "no_data = " << format_number(e.no_data()) << '\n'
            << "ping_interval_s = " << format_number(e.ping_interval_s()) << '\n'
            << "sound_speed_ms = " << format_number(e.sound_speed_ms()) << '\n'
            << "rows = " << e.rows() << '\n'
            << "cols = " << e.cols() << '\n';
        if (!out) throw IoError("short write to " + (dir / "meta").string());
    }

    write_grid_file(dir / "sv", e.rows(), e.cols(), [&](std::ostream& out, auto r, auto c) {
        out << format_number(e.sv().at(r, c));
    });
    write_grid_file(dir / "along", e.rows(), e.cols(), [&](std::ostream& out, auto r, auto c) {
        out << int(bundle.angles.along().at(r, c));
    });
    write_grid_file(dir / "athwart", e.rows(), e.cols(), [&](std::ostream& out, auto r, auto c) {
        out << int(bundle.angles.athwart().at(r, c));
    });

    if (bundle.seabed) {
        std::ofstream out = open_for_write(dir / "seabed");
        for (std::size_t c = 0; c < bundle.seabed->size(); ++c) {
            if (c > 0) out << ',';
            const auto& range = bundle.seabed->at(c);
            if (range)
                out << format_number(*range);
            else
                out << '*';
        }
        out << '\n';
        if (!out) throw IoError("short write to " + (dir / "seabed").string());
    }

    if (!e.ping_times().empty()) {
        std::ofstream out = open_for_write(dir / "ping_times");
        for (std::uint64_t t : e.ping_times()) out << t << '\n';
        if (!out) throw IoError("short write to " + (dir / "ping_times").string());
    }
}

GridBundle read_bundle(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a readable directory");

    MetaFile m = read_meta(dir / "meta");
    const std::size_t rows = m.rows, cols = m.cols;

    Grid<double> sv(rows, cols);
    read_grid_file(dir / "sv", rows, cols, [&](auto r, auto c, std::string_view field) {
        sv.at(r, c) = parse_cell(field, dir / "sv", r + 1);
    });

    auto read_angles = [&](const char* name) {
        Grid<std::int8_t> g(rows, cols);
        const fs::path file = dir / name;
        read_grid_file(file, rows, cols, [&](auto r, auto c, std::string_view field) {
            auto v = parse_integer(field);
            if (!v || *v < -128 || *v > 127) {
                throw FormatError("angle count '" + std::string(field) + "' out of range in " +
                                      file.string() + " line " + std::to_string(r + 1),
                                  r + 1);
            }
            g.at(r, c) = std::int8_t(*v);
        });
        return g;
    };
    Grid<std::int8_t> along = read_angles("along");
    Grid<std::int8_t> athwart = read_angles("athwart");

    std::optional<SeabedLine> seabed;
    if (fs::exists(dir / "seabed")) {
        const auto lines = read_lines(dir / "seabed");
        if (lines.size() != 1) {
            throw FormatError((dir / "seabed").string() + " must hold exactly one line");
        }
        const auto fields = split_fields(lines[0]);
        if (fields.size() != cols) {
            throw FormatError((dir / "seabed").string() + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(cols));
        }
        std::vector<std::optional<double>> ranges(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            if (fields[c] == "*") continue;
            ranges[c] = parse_cell(fields[c], dir / "seabed", 1);
        }
        seabed = SeabedLine(std::move(ranges));
    }

    if (fs::exists(dir / "ping_times")) {
        const auto lines = read_lines(dir / "ping_times");
        m.meta.ping_times.reserve(lines.size());
        std::size_t line_no = 0;
        for (const std::string& line : lines) {
            ++line_no;
            auto t = parse_unsigned(line);
            if (!t) {
                throw FormatError("bad timestamp '" + line + "' in " +
                                      (dir / "ping_times").string() + " line " +
                                      std::to_string(line_no),
                                  line_no);
            }
            m.meta.ping_times.push_back(*t);
        }
    }

    try {
        Echogram e(std::move(sv), std::move(m.meta));
        AngleChannels angles =
            AngleChannels::for_echogram(std::move(along), std::move(athwart), e);
        return GridBundle{std::move(e), std::move(angles), std::move(seabed)};
    } catch (const ParameterError& err) {
        // invalid values in an otherwise well-formed file are a format problem
        throw FormatError(dir.string() + ": " + err.what());
    }
}

Mask read_mask_text(const fs::path& file) {
    const auto lines = read_lines(file);
    const std::size_t rows = lines.size();
    const std::size_t cols = rows > 0 ? split_fields(lines[0]).size() : 0;
    Mask mask(rows, cols, false);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != cols) {
            throw FormatError(file.string() + " line " + std::to_string(r + 1) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(cols),
                              r + 1);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (fields[c] == "0") continue;
            if (fields[c] == "1") {
                mask.set(r, c, true);
            } else {
                throw FormatError("mask cell '" + std::string(fields[c]) + "' in " +
                                      file.string() + " line " + std::to_string(r + 1) +
                                      " is not 0 or 1",
                                  r + 1);
            }
        }
    }
    return mask;
}

void write_mask_text(const fs::path& file, const Mask& mask) {
    write_grid_file(file, mask.rows(), mask.cols(), [&](std::ostream& out, auto r, auto c) {
        out << (mask.get(r, c) ? '1' : '0');
    });
}

}  // namespace falsebottom
