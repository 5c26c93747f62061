#pragma once

#include <filesystem>

#include "falsebottom/detect.hpp"

namespace falsebottom::cli {

// Applies a flat `key = value` config file on top of `base`. Keys are the
// DetectionConfig field names; t_min additionally accepts the literal
// `none`, fill_holes takes true/false. Blank lines and lines starting with
// `#` are skipped. Unknown keys are an error rather than a warning so a
// typo cannot silently fall back to a default threshold.
DetectionConfig load_detection_config(const std::filesystem::path& file,
                                      DetectionConfig base);

}  // namespace falsebottom::cli
