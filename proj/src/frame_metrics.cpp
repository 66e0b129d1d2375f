#include "cmgen/frame_metrics.hpp"

#include <cstdio>
#include <ostream>

namespace cmgen {

namespace {

std::string fmt(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

}  // namespace

void write_report(const MetricReport& report, std::ostream& out) {
    out << "frame\tlex\tstr\n";
    for (const auto& f : report.frames) out << f.frame << '\t' << fmt(f.lex) << '\t' << fmt(f.str) << '\n';
    out << '\n';
    out << "mean_lex\t" << fmt(report.mean_lex) << '\n';
    out << "mean_str\t" << fmt(report.mean_str) << '\n';
    out << "mean\t" << fmt(report.mean) << '\n';
    out << "skipped_lex\t" << report.skipped_lex << '\n';
    out << "skipped_str\t" << report.skipped_str << '\n';
}

}  // namespace cmgen
