#pragma once

#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snc {

enum class ReportFormat { records, csv };

// Line-delimited experiment reports. Data lines (param/rec/agg) are
// byte-reproducible for a given seeded run; lines starting with '#'
// (format header, command echo, wall time) are metadata and excluded from
// reproducibility comparisons.
//
// records format:  rec key=value key=value ...
// csv format:      rec,value,value,...  preceded once per record shape by a
//                  "#columns rec,key,key,..." comment.
class ReportWriter {
public:
    using Fields = std::vector<std::pair<std::string, std::string>>;

    ReportWriter(std::ostream& os, std::string_view command,
                 ReportFormat format = ReportFormat::records)
        : os_(os), format_(format) {
        os_ << "#snc-report v1\n";
        os_ << "#command " << command << "\n";
    }

    void param(std::string_view key, std::string_view value) {
        line("param", {{std::string(key), std::string(value)}});
    }
    void param(std::string_view key, long long value) { param(key, std::to_string(value)); }
    void param(std::string_view key, int value) { param(key, std::to_string(value)); }
    void param(std::string_view key, std::uint64_t value) { param(key, std::to_string(value)); }
    void param(std::string_view key, double value) { param(key, format_double(value)); }

    void record(const Fields& fields) { line("rec", fields); }
    void aggregate(const Fields& fields) { line("agg", fields); }

    void wall_ms(long long ms) { os_ << "#wall_ms " << ms << "\n"; }

    static std::string format_double(double value) {
        std::string s = std::to_string(value);
        // Trim trailing zeros but keep one digit after the point.
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            auto last = s.find_last_not_of('0');
            s.erase(std::max(last, dot + 1) + 1);
        }
        return s;
    }

private:
    void line(std::string_view kind, const Fields& fields) {
        if (format_ == ReportFormat::records) {
            os_ << kind;
            for (const auto& [k, v] : fields) os_ << ' ' << k << '=' << v;
            os_ << '\n';
            return;
        }
        std::string shape(kind);
        for (const auto& [k, v] : fields) shape += "," + k;
        if (!seen_shapes_.count(shape)) {
            seen_shapes_.insert(shape);
            os_ << "#columns " << shape << "\n";
        }
        os_ << kind;
        for (const auto& [k, v] : fields) os_ << ',' << v;
        os_ << '\n';
    }

    std::ostream& os_;
    ReportFormat format_;
    std::set<std::string> seen_shapes_;
};

}  // namespace snc
