#include "cyclo/report.hpp"

#include <iomanip>

namespace cyclo::report {

void Report::add_value(long N, int w, int m, std::string item, std::string value, double secs) {
    records.push_back({N, w, m, std::move(item), std::move(value), false, false, secs});
}

void Report::add_check(long N, int w, int m, std::string item, bool ok, std::string value,
                       double secs) {
    records.push_back({N, w, m, std::move(item), std::move(value), true, ok, secs});
}

bool Report::all_passed() const {
    for (const auto& r : records)
        if (r.has_check && !r.passed) return false;
    return true;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_csv(const Report& r, std::ostream& os) {
    os << "schema,N,w,m,item,outcome,value,seconds\n";
    for (const auto& rec : r.records) {
        os << r.schema << "," << rec.N << "," << rec.w << "," << rec.m << ","
           << csv_escape(rec.item) << ",";
        os << (rec.has_check ? (rec.passed ? "pass" : "FAIL") : "-") << ",";
        os << csv_escape(rec.value) << ",";
        os << std::fixed << std::setprecision(3) << rec.seconds << "\n";
    }
}

void write_text(const Report& r, std::ostream& os) {
    for (const auto& rec : r.records) {
        os << "[N=" << rec.N << " w=" << rec.w << " m=" << rec.m << "] " << rec.item;
        if (rec.has_check) os << ": " << (rec.passed ? "pass" : "FAIL");
        if (!rec.value.empty()) os << " (" << rec.value << ")";
        os << "\n";
    }
}

} // namespace cyclo::report
