#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "gorcontract/io.hpp"

inline gorcontract::InputDoc load_fixture(const std::string& name) {
    std::ifstream in(std::string(GORCONTRACT_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return gorcontract::parse_input(ss.str());
}
