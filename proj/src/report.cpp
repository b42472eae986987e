#include "dtor/report.hpp"

#include <algorithm>

namespace dtor {

std::string report_tsv(const std::vector<ReportRow>& rows) {
    std::string out = "suite\tcase\texpected\tgot\tpass\n";
    for (const auto& r : rows)
        out += r.suite + "\t" + r.case_id + "\t" + r.expected + "\t" + r.got + "\t" + (r.pass ? "1" : "0") + "\n";
    return out;
}

bool all_pass(const std::vector<ReportRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

}  // namespace dtor
