#include "tmlab/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "tmlab/errors.hpp"

namespace tmlab::io {

namespace {

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string>>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
    }
    return out;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size() || v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + s +
                         "'");
    }
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("graph file is empty");
    const auto& [hline, header] = lines.front();
    if (header.size() != 2) fail(hline, "header must be \"n m\"");
    const int n = parse_int(header[0], hline);
    const int m = parse_int(header[1], hline);
    if (n < 0 || m < 0) fail(hline, "negative count");
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw InputError("header declares " + std::to_string(m) + " edges, file lists " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, tok] = lines[i];
        if (tok.size() != 2) fail(no, "edge line must be \"u v\"");
        edges.emplace_back(parse_int(tok[0], no), parse_int(tok[1], no));
    }
    return Graph(n, edges);
}

Graph read_graph(const std::filesystem::path& path) { return parse_graph(read_text(path)); }

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::vector<LinearInequality> parse_inequalities(std::string_view text, int dim) {
    std::vector<LinearInequality> out;
    for (const auto& [no, tok] : content_lines(text)) {
        if (tok.size() < 2 || tok[tok.size() - 2] != "<=") fail(no, "expected \"a_0 ... <= b\"");
        const int count = static_cast<int>(tok.size()) - 2;
        if (count != dim) {
            fail(no, "expected " + std::to_string(dim) + " coefficients, got " +
                         std::to_string(count));
        }
        LinearInequality ineq;
        ineq.coeffs.reserve(dim);
        try {
            for (int i = 0; i < count; ++i) ineq.coeffs.push_back(parse_rational(tok[i]));
            ineq.rhs = parse_rational(tok.back());
        } catch (const InputError& e) {
            fail(no, e.what());
        }
        ineq.label.note = "line " + std::to_string(no);
        out.push_back(std::move(ineq));
    }
    return out;
}

std::vector<LinearInequality> read_inequalities(const std::filesystem::path& path, int dim) {
    return parse_inequalities(read_text(path), dim);
}

std::string format_inequality(const LinearInequality& ineq) {
    std::string out;
    for (const auto& c : ineq.coeffs) out += to_string(c) + " ";
    return out + "<= " + to_string(ineq.rhs);
}

std::string format_inequalities(const std::vector<LinearInequality>& ineqs, const Graph* g) {
    std::string out;
    for (const auto& i : ineqs) {
        if (g) out += "# " + i.label.describe(*g) + "\n";
        out += format_inequality(i) + "\n";
    }
    return out;
}

RationalVector parse_point(std::string_view text, int dim) {
    const auto lines = content_lines(text);
    if (lines.size() != 1) throw InputError("point file must hold exactly one line of values");
    const auto& [no, tok] = lines.front();
    if (static_cast<int>(tok.size()) != dim) {
        fail(no, "expected " + std::to_string(dim) + " values, got " + std::to_string(tok.size()));
    }
    RationalVector z;
    z.reserve(dim);
    try {
        for (const auto& t : tok) z.push_back(parse_rational(t));
    } catch (const InputError& e) {
        fail(no, e.what());
    }
    return z;
}

RationalVector read_point(const std::filesystem::path& path, int dim) {
    return parse_point(read_text(path), dim);
}

}  // namespace tmlab::io
