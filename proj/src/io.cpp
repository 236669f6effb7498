#include "projlab/io.hpp"

#include "projlab/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

namespace projlab {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, std::size_t lineno) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(' ', pos);
        const auto tok = line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        if (tok.empty()) throw ParseError("empty field (fields are separated by single spaces)", lineno);
        out.push_back(tok);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t lineno) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("expected an integer, got '" + std::string(tok) + "'", lineno);
    }
    return v;
}

double parse_double(std::string_view tok, std::size_t lineno) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError("expected a number, got '" + std::string(tok) + "'", lineno);
    }
    return v;
}

// "key=<int>"
std::int64_t parse_field(std::string_view tok, std::string_view key, std::size_t lineno) {
    if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=') {
        throw ParseError("expected " + std::string(key) + "=<value>", lineno);
    }
    return parse_int(tok.substr(key.size() + 1), lineno);
}

std::vector<std::string> read_lines(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("read failure");
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto next = text.find('\n', pos);
        if (next == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find('\r') != std::string::npos) throw ParseError("carriage return in input", i + 1);
    }
    return lines;
}

std::string format_mass(double mass) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", mass);
    return buf;
}

}  // namespace

void write_pointset(std::ostream& out, const LatticePointSet& set) {
    out << format_pointset(set);
}

std::string format_pointset(const LatticePointSet& set) {
    std::string out = "PSET v1 n=" + std::to_string(set.scale().n()) + " count=" + std::to_string(set.size()) + "\n";
    for (const auto& p : set.points()) {
        out += std::to_string(p.u);
        out += ' ';
        out += std::to_string(p.v);
        out += '\n';
    }
    return out;
}

LatticePointSet read_pointset(std::istream& in) {
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError("missing PSET header", 1);
    const auto head = split_tokens(lines[0], 1);
    if (head.size() != 4 || head[0] != "PSET" || head[1] != "v1") {
        throw ParseError("expected header 'PSET v1 n=<level> count=<k>'", 1);
    }
    const auto n = parse_field(head[2], "n", 1);
    const auto count = parse_field(head[3], "count", 1);
    if (n < 0 || n > kMaxLevel) throw ParseError("level out of range", 1);
    if (count < 0) throw ParseError("negative count", 1);
    if (static_cast<std::size_t>(count) != lines.size() - 1) {
        throw ParseError("count says " + std::to_string(count) + " points, found " + std::to_string(lines.size() - 1), 1);
    }
    const Scale scale(static_cast<int>(n));
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::set<LatticePoint> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tok = split_tokens(lines[i], i + 1);
        if (tok.size() != 2) throw ParseError("expected '<u> <v>'", i + 1);
        const LatticePoint p{parse_int(tok[0], i + 1), parse_int(tok[1], i + 1)};
        if (p.u < 0 || p.u >= scale.side() || p.v < 0 || p.v >= scale.side()) {
            throw ParseError("point outside [0, 2^n)^2", i + 1);
        }
        if (!seen.insert(p).second) throw ParseError("duplicate point", i + 1);
        pts.push_back(p);
    }
    return LatticePointSet(scale, std::move(pts));
}

LatticePointSet parse_pointset(const std::string& text) {
    std::istringstream in(text);
    return read_pointset(in);
}

void write_measure(std::ostream& out, const DyadicMeasure& mu) {
    out << format_measure(mu);
}

std::string format_measure(const DyadicMeasure& mu) {
    std::string out = "DMEAS v1 d=" + std::to_string(mu.dim()) + " n=" + std::to_string(mu.level()) + "\n";
    for (const auto& a : mu.atoms()) {
        out += std::to_string(a.i);
        if (mu.dim() == 2) {
            out += ' ';
            out += std::to_string(a.j);
        }
        out += ' ';
        out += format_mass(a.mass);
        out += '\n';
    }
    return out;
}

DyadicMeasure read_measure(std::istream& in) {
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError("missing DMEAS header", 1);
    const auto head = split_tokens(lines[0], 1);
    if (head.size() != 4 || head[0] != "DMEAS" || head[1] != "v1") {
        throw ParseError("expected header 'DMEAS v1 d=<1|2> n=<level>'", 1);
    }
    const auto d = parse_field(head[2], "d", 1);
    const auto n = parse_field(head[3], "n", 1);
    if (d != 1 && d != 2) throw ParseError("dimension must be 1 or 2", 1);
    if (n < 0 || n > 31) throw ParseError("level must lie in [0, 31]", 1);
    const std::int64_t side = std::int64_t{1} << n;
    std::vector<Atom> atoms;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tok = split_tokens(lines[i], i + 1);
        if (tok.size() != static_cast<std::size_t>(d) + 1) {
            throw ParseError(d == 1 ? "expected '<i> <mass>'" : "expected '<i> <j> <mass>'", i + 1);
        }
        Atom a;
        a.i = parse_int(tok[0], i + 1);
        a.j = d == 2 ? parse_int(tok[1], i + 1) : 0;
        a.mass = parse_double(tok.back(), i + 1);
        if (a.i < 0 || a.i >= side || a.j < 0 || a.j >= side) throw ParseError("cell index out of range", i + 1);
        if (!(a.mass > 0)) throw ParseError("mass must be positive", i + 1);
        if (!seen.insert({a.i, a.j}).second) throw ParseError("duplicate cell", i + 1);
        atoms.push_back(a);
    }
    if (atoms.empty()) throw ParseError("measure has no atoms", 1);
    try {
        return DyadicMeasure(static_cast<int>(d), static_cast<int>(n), std::move(atoms));
    } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), 1);
    }
}

DyadicMeasure parse_measure(const std::string& text) {
    std::istringstream in(text);
    return read_measure(in);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure on " + path);
    return buf.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failure on " + path);
}

LatticePointSet load_pointset(const std::string& path) { return parse_pointset(load_text(path)); }

DyadicMeasure load_measure(const std::string& path) { return parse_measure(load_text(path)); }

}  // namespace projlab
