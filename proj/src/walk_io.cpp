#include "gridfrechet/walk_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gridfrechet/errors.hpp"

namespace gridfrechet {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no, const char* what) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw input_error("line " + std::to_string(line_no) + ": " + what + " '" +
                          std::string(tok) + "' is not a valid integer");
    return v;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

GridWalk read_walk(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(1, "missing header 'gw <d> <n>'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto head = split_ws(line);
    if (head.size() != 3 || head[0] != "gw")
        fail(1, "expected header 'gw <d> <n>', got '" + line + "'");
    const std::int64_t d64 = parse_int(head[1], 1, "dimension");
    const std::int64_t n64 = parse_int(head[2], 1, "vertex count");
    if (d64 < 1 || d64 > 1'000'000) fail(1, "dimension must be in [1, 10^6]");
    if (n64 < 1 || n64 > 1'000'000'000) fail(1, "vertex count must be in [1, 10^9]");
    const std::size_t d = static_cast<std::size_t>(d64);
    const std::size_t n = static_cast<std::size_t>(n64);

    std::vector<GridPoint> pts;
    pts.reserve(std::min<std::size_t>(n, std::size_t{1} << 22));
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t line_no = k + 2;
        if (!std::getline(in, line))
            fail(line_no, "expected " + std::to_string(n) + " vertex lines, found only " +
                              std::to_string(k));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = split_ws(line);
        if (toks.size() != d)
            fail(line_no, "expected " + std::to_string(d) + " coordinates, got " +
                              std::to_string(toks.size()));
        GridPoint p;
        p.coords.reserve(d);
        for (const auto tok : toks) {
            const std::int64_t c = parse_int(tok, line_no, "coordinate");
            if (c < -kMaxCoordinate || c > kMaxCoordinate)
                fail(line_no, "coordinate " + std::string(tok) + " out of range");
            p.coords.push_back(c);
        }
        if (k > 0 && l1_distance(pts.back(), p) != 1)
            fail(line_no, "non-unit step from the previous vertex");
        pts.push_back(std::move(p));
    }
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!split_ws(line).empty())
            fail(n + 2, "trailing content after the declared " + std::to_string(n) +
                            " vertices");
    }
    return validate_walk(std::move(pts));
}

void write_walk(std::ostream& out, const GridWalk& walk) {
    out << "gw " << walk.dimension() << ' ' << walk.size() << '\n';
    for (const GridPoint& p : walk.vertices) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (i) out << ' ';
            out << p.coords[i];
        }
        out << '\n';
    }
}

GridWalk parse_walk(const std::string& text) {
    std::istringstream in(text);
    return read_walk(in);
}

std::string serialize_walk(const GridWalk& walk) {
    std::ostringstream out;
    write_walk(out, walk);
    return out.str();
}

GridWalk read_walk_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open for reading");
    try {
        return read_walk(in);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void write_walk_file(const std::string& path, const GridWalk& walk) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error(path + ": cannot open for writing");
    write_walk(out, walk);
    out.flush();
    if (!out) throw input_error(path + ": write failed");
}

}  // namespace gridfrechet
