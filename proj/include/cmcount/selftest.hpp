// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_SELFTEST_HPP
#define CMCOUNT_SELFTEST_HPP

#include <string>
#include <vector>

namespace cmcount {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    std::string detail;
    double seconds = 0;
};

/// Table and identity suites; the quick run skips the prime sweeps.
std::vector<SuiteResult> run_selftest(bool quick, long prec = 256, long prime_bound = 1000);

} // namespace cmcount

#endif
