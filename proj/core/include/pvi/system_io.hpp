#pragma once

#include "pvi/schlesinger.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pvi {

/// {"variables": [...], "z": "z", "singularities": [...], "matrix": [[..],[..]]}
std::string write_system(const FuchsianSystem &system);
FuchsianSystem read_system(const std::string &text);

/// {"t": e, "theta": [4], "Q": [3 x 2x2], "lambda": e, "mu": e}
struct SchlesingerFile {
    SchlesingerSystem system;
    std::array<RationalFunction, 4> theta;
    RationalFunction lambda, mu;
};
std::string write_schlesinger(const SchlesingerFile &file);
SchlesingerFile read_schlesinger(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace pvi
