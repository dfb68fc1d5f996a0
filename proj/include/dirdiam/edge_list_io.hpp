#ifndef DIRDIAM_EDGE_LIST_IO_HPP_
#define DIRDIAM_EDGE_LIST_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirdiam/graph.hpp"

namespace dirdiam {

/// Raised on malformed input files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Reads the edge-list format: a header `n m W` with W in {w, u}, then m lines
 * `u v [w]`. Lines starting with '#' are skipped; if `comments` is given they
 * are collected there without the leading '#'.
 */
DirectedGraph read_edge_list(std::istream &in, std::vector<std::string> *comments = nullptr);

/// Writes `g` in edge-list form, emitting each entry of `comments` as a '#' line after the header.
void write_edge_list(std::ostream &out, const DirectedGraph &g,
                     const std::vector<std::string> &comments = {});

DirectedGraph read_edge_list_file(const std::string &path, std::vector<std::string> *comments = nullptr);
void write_edge_list_file(const std::string &path, const DirectedGraph &g,
                          const std::vector<std::string> &comments = {});

namespace detail {

/// Next non-empty, non-comment line split into whitespace tokens. Returns false at EOF.
bool next_record(std::istream &in, std::vector<std::string> &tokens,
                 std::vector<std::string> *comments);

std::uint64_t parse_unsigned(const std::string &token, const char *what);
std::int64_t parse_signed(const std::string &token, const char *what);

} // namespace detail

} // namespace dirdiam

#endif // DIRDIAM_EDGE_LIST_IO_HPP_
