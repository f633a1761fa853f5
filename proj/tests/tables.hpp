// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Reference epsilon tables, one per residue type of D. Odd D is keyed by the
// cube of lambda mod 4, the others by lambda mod 4.

#ifndef CMCOUNT_TESTS_TABLES_HPP
#define CMCOUNT_TESTS_TABLES_HPP

#include <cstdint>
#include <map>
#include <string>

inline const std::map<std::int64_t, std::map<std::string, std::string>> &reference_tables()
{
    static const std::map<std::int64_t, std::map<std::string, std::string>> tables = {
        {-7, {{"1", "1"}, {"-√-d", "1"}, {"-1", "-1"}, {"√-d", "-1"}}},
        {-28,
         {{"1", "1"},
          {"√-d", "1"},
          {"-1+2√-d", "1"},
          {"2-√-d", "1"},
          {"-1", "-1"},
          {"-√-d", "-1"},
          {"1+2√-d", "-1"},
          {"2+√-d", "-1"}}},
        {-8,
         {{"1", "1"},
          {"-1+2√-d", "1"},
          {"1+√-d", "1"},
          {"-1+√-d", "1"},
          {"-1", "-1"},
          {"1+2√-d", "-1"},
          {"1-√-d", "-1"},
          {"-1-√-d", "-1"}}},
        {-20,
         {{"1", "1"},
          {"1+2√-d", "1"},
          {"2+√-d", "i"},
          {"√-d", "i"},
          {"-1", "-1"},
          {"-1+2√-d", "-1"},
          {"2-√-d", "-i"},
          {"-√-d", "-i"}}},
        {-16,
         {{"1", "1"},
          {"-1+2√-d", "1"},
          {"1-√-d", "i"},
          {"-1-√-d", "i"},
          {"-1", "-1"},
          {"1+2√-d", "-1"},
          {"1+√-d", "-i"},
          {"-1+√-d", "-i"}}},
    };
    return tables;
}

#endif
