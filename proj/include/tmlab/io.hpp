#ifndef TMLAB_IO_HPP
#define TMLAB_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tmlab/graph.hpp"
#include "tmlab/inequality.hpp"
#include "tmlab/rational.hpp"

namespace tmlab::io {

// Graph text: "n m" followed by m lines "u v" (0-based). Blank lines and
// '#' comments are ignored; edges may come in any order.
Graph parse_graph(std::string_view text);
Graph read_graph(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

// Inequality text: one "a_0 ... a_{d-1} <= b" per line, integers or p/q.
std::vector<LinearInequality> parse_inequalities(std::string_view text, int dim);
std::vector<LinearInequality> read_inequalities(const std::filesystem::path& path, int dim);
std::string format_inequality(const LinearInequality& ineq);
/// With `g`, each line is preceded by a "# <label>" comment.
std::string format_inequalities(const std::vector<LinearInequality>& ineqs,
                                const Graph* g = nullptr);

// Point text: a single line of d rationals.
RationalVector parse_point(std::string_view text, int dim);
RationalVector read_point(const std::filesystem::path& path, int dim);

std::string read_text(const std::filesystem::path& path);

}  // namespace tmlab::io

#endif
