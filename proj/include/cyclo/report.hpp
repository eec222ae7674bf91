#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclo::report {

// one verification or computation outcome at a bidegree
struct Record {
    long N = 1;
    int w = 0, m = 0;
    std::string item;   // the identity or quantity this row reports
    std::string value;  // dimension, residual, ... as text
    bool has_check = false;
    bool passed = false;
    double seconds = 0;
};

struct Report {
    int schema = 1;
    std::vector<Record> records;

    void add_value(long N, int w, int m, std::string item, std::string value, double secs = 0);
    void add_check(long N, int w, int m, std::string item, bool ok, std::string value = "",
                   double secs = 0);
    bool all_passed() const;
};

// deterministic outputs: rows in insertion order, fixed formatting
void write_csv(const Report& r, std::ostream& os);
void write_text(const Report& r, std::ostream& os);

} // namespace cyclo::report
