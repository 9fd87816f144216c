#include "ipath/interval_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

// Next non-empty line with comments stripped; false at end of input.
bool next_record(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

IntervalGraph read_intervals(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_record(in, line, line_no)) {
        throw ParseError("missing vertex count");
    }
    long long n = -1;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n) || n < 0 || (header >> extra)) {
            fail(line_no, "expected a nonnegative vertex count");
        }
    }
    std::vector<Interval> intervals(n);
    std::vector<Rational> weights(n, Rational(1));
    std::vector<char> seen(n, 0);
    for (long long i = 0; i < n; ++i) {
        if (!next_record(in, line, line_no)) {
            throw ParseError("expected " + std::to_string(n) + " interval lines, got " +
                             std::to_string(i));
        }
        std::istringstream record(line);
        long long id = 0;
        Coord left = 0;
        Coord right = 0;
        if (!(record >> id >> left >> right)) {
            fail(line_no, "expected `vertex_id left right`");
        }
        long long num = 1;
        long long den = 1;
        if (record >> num) {
            if (!(record >> den)) {
                fail(line_no, "weight numerator without denominator");
            }
            if (den <= 0 || num < 0) {
                fail(line_no, "weight must be num/den with num >= 0 and den > 0");
            }
        }
        std::string extra;
        if (record.clear(), record >> extra) {
            fail(line_no, "trailing tokens");
        }
        if (id < 0 || id >= n) {
            fail(line_no, "vertex id out of range 0..n-1");
        }
        if (seen[id]) {
            throw DuplicateVertexId("line " + std::to_string(line_no) + ": vertex id " +
                                    std::to_string(id) + " repeated");
        }
        seen[id] = 1;
        intervals[id] = {left, right};
        weights[id] = Rational(num, den);
    }
    if (next_record(in, line, line_no)) {
        fail(line_no, "more interval lines than announced");
    }
    return IntervalGraph(std::move(intervals), std::move(weights));
}

IntervalGraph read_intervals_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_intervals(in);
}

void write_intervals(std::ostream& out, const IntervalGraph& graph,
                     const std::vector<std::string>& notes) {
    out << graph.size() << '\n';
    for (VertexId v = 0; v < graph.size(); ++v) {
        const Rational& w = graph.weight(v);
        out << v << ' ' << graph.left(v) << ' ' << graph.right(v) << ' '
            << to_string(w.numerator()) << ' ' << to_string(w.denominator());
        if (static_cast<std::size_t>(v) < notes.size() && !notes[v].empty()) {
            out << "  # " << notes[v];
        }
        out << '\n';
    }
}

} // namespace ipath
