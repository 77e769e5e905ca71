#ifndef FAVOR7_SELFTEST_HPP_
#define FAVOR7_SELFTEST_HPP_

#include "favor7/f2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace favor7 {

struct SelftestOptions {
    std::optional<F2Matrix> gamma6; /* replaces the built-in generator */
    int precision = 0;              /* local model precision, 0 for the default */
};

struct SelftestItem {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<SelftestItem> run_selftest(SelftestOptions const& opt = {});

}  // namespace favor7

#endif
