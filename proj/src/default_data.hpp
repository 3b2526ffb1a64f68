#pragma once

#include <string_view>

namespace revmine::default_data {

// Contents of the data/ files, embedded at build time so the built tool
// needs no runtime path to its own defaults. The files stay authoritative:
// edit them and rebuild.
extern const std::string_view stopwords_en;
extern const std::string_view abbreviations_en;
extern const std::string_view topics_json;
extern const std::string_view seven_s_json;

}  // namespace revmine::default_data
