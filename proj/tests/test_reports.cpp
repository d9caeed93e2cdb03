#include <gtest/gtest.h>

#include <sstream>

#include "snc/constructions.hpp"
#include "snc/ordering.hpp"
#include "snc/report.hpp"

using namespace snc;

TEST(Report, RecordsFormat) {
    std::ostringstream os;
    ReportWriter w(os, "demo");
    w.param("n", 5);
    w.param("p", 0.25);
    w.record({{"verdict", "all-have"}, {"leaves", "4"}});
    w.aggregate({{"violations", "0"}});
    w.wall_ms(12);
    EXPECT_EQ(os.str(),
              "#snc-report v1\n"
              "#command demo\n"
              "param n=5\n"
              "param p=0.25\n"
              "rec verdict=all-have leaves=4\n"
              "agg violations=0\n"
              "#wall_ms 12\n");
}

TEST(Report, CsvFormatEmitsColumnCommentsOncePerShape) {
    std::ostringstream os;
    ReportWriter w(os, "demo", ReportFormat::csv);
    w.record({{"a", "1"}, {"b", "2"}});
    w.record({{"a", "3"}, {"b", "4"}});
    w.record({{"c", "5"}});
    EXPECT_EQ(os.str(),
              "#snc-report v1\n"
              "#command demo\n"
              "#columns rec,a,b\n"
              "rec,1,2\n"
              "rec,3,4\n"
              "#columns rec,c\n"
              "rec,5\n");
}

TEST(Report, DoubleFormattingIsStable) {
    EXPECT_EQ(ReportWriter::format_double(0.3), "0.3");
    EXPECT_EQ(ReportWriter::format_double(2.0), "2.0");
    EXPECT_EQ(ReportWriter::format_double(0.125), "0.125");
    EXPECT_EQ(ReportWriter::format_double(10.0), "10.0");
}

TEST(Serialization, OrderingLine) {
    VertexOrdering ord{{1, 3, 0, 2}, 2, {0, 1, 2, 2}};
    EXPECT_EQ(format_ordering(ord), "h=2 1 3 0 2");
}

TEST(Serialization, PeelTraceLines) {
    PeelingState st = peel(directed_cycle(3));
    std::string dump = format_peel_trace(st);
    EXPECT_EQ(dump,
              "step=1 a=2 x=1 b=0 violator=2\n"
              "terminal step=2 a=3 x=0 b=0 stop=x-empty\n");
}
