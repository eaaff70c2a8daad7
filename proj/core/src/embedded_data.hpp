#pragma once

#include <string_view>

namespace large_atlas::data {

extern const std::string_view catalog_txt;
extern const std::string_view constants_txt;
extern const std::string_view table_a_txt;
extern const std::string_view table_b_txt;

}  // namespace large_atlas::data
