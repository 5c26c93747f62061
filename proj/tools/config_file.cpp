#include "config_file.hpp"

#include <fstream>
#include <string>
#include <string_view>

#include "falsebottom/error.hpp"
#include "falsebottom/numtext.hpp"

namespace falsebottom::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double number_value(std::string_view key, std::string_view value) {
    const auto v = parse_number(value);
    if (!v) {
        throw ParameterError("config key " + std::string(key) + " needs a number, got '" +
                             std::string(value) + "'");
    }
    return *v;
}

int int_value(std::string_view key, std::string_view value) {
    const auto v = parse_integer(value);
    if (!v) {
        throw ParameterError("config key " + std::string(key) + " needs an integer, got '" +
                             std::string(value) + "'");
    }
    return int(*v);
}

bool bool_value(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ParameterError("config key " + std::string(key) + " needs true or false, got '" +
                         std::string(value) + "'");
}

}  // namespace

DetectionConfig load_detection_config(const std::filesystem::path& file,
                                      DetectionConfig base) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read config file " + file.string());

    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        const auto eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("config line is not 'key = value': '" + std::string(stripped) +
                                  "' in " + file.string(),
                              line_no);
        }
        const std::string_view key = trim(stripped.substr(0, eq));
        const std::string_view value = trim(stripped.substr(eq + 1));

        if (key == "window_along") {
            base.window_along = int_value(key, value);
        } else if (key == "window_athwart") {
            base.window_athwart = int_value(key, value);
        } else if (key == "t_theta") {
            base.t_theta = number_value(key, value);
        } else if (key == "t_phi") {
            base.t_phi = number_value(key, value);
        } else if (key == "t_min") {
            if (value == "none")
                base.t_min = std::nullopt;
            else
                base.t_min = number_value(key, value);
        } else if (key == "connectivity") {
            base.connectivity = int_value(key, value);
        } else if (key == "fill_holes") {
            base.fill_holes = bool_value(key, value);
        } else if (key == "token") {
            base.token = number_value(key, value);
        } else {
            throw ParameterError("unknown config key '" + std::string(key) + "' in " +
                                 file.string());
        }
    }
    return base;
}

}  // namespace falsebottom::cli
