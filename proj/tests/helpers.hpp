#pragma once

#include <string>

#include "gentle/io.hpp"

inline std::string fixture_path(const std::string& name) {
    return std::string(GENTLE_FIXTURE_DIR) + "/" + name;
}

inline gentle::Presentation load_fixture(const std::string& name) {
    return gentle::load_presentation(fixture_path(name));
}

inline gentle::StringWord lit(const gentle::Presentation& p, const std::string& text) {
    return gentle::parse_string_literal(p, text);
}
