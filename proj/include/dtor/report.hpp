#pragma once

#include <string>
#include <vector>

namespace dtor {

struct ReportRow {
    std::string suite;
    std::string case_id;
    std::string expected;
    std::string got;
    bool pass = false;
};

// header line plus one tab-separated row per result
std::string report_tsv(const std::vector<ReportRow>& rows);
bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace dtor
