#include "gwloc/model.hpp"
#include "gwloc/relations.hpp"

#include "gwloc/table1_embedded.hpp"

#include <fstream>
#include <sstream>

namespace gwloc {

namespace {

constexpr std::string_view kTable1Header = "# source: paper Table 1";

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

} // namespace

Table1Data parse_table1(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTable1Header)
        throw InvalidInput("table file must start with '" + std::string(kTable1Header) + "'");

    Table1Data out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 4)
            throw InvalidInput("table line " + std::to_string(line_no) + " must have 4 tab-separated fields");
        try {
            const int d = std::stoi(fields[0]);
            if (out.reduced.count(d)) throw InvalidInput("duplicate degree " + fields[0]);
            out.reduced[d] = Rational::parse(fields[1]);
            out.genus1_gw[d] = Rational::parse(fields[2]);
            out.genus1_bps[d] = Rational::parse(fields[3]);
        } catch (const InvalidInput&) {
            throw;
        } catch (const std::exception& e) {
            throw InvalidInput("table line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    require_contiguous(out.reduced, "table file");
    return out;
}

Table1Data load_table1_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open table file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table1(buffer.str());
}

const Table1Data& builtin_table1() {
    static const Table1Data data = parse_table1(detail::kEmbeddedTable1);
    return data;
}

} // namespace gwloc
