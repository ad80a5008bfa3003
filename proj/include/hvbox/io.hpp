/**
 * @file io.hpp
 * @brief Point files (CSV) and the JSON decomposition document.
 */

#ifndef HVBOX_IO_HPP
#define HVBOX_IO_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hvbox/decompose.hpp"
#include "hvbox/geometry.hpp"

namespace hvbox {

/// Malformed input file; the message carries the line number when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Reads one point per line, coordinates separated by commas. Blank lines and
 * lines starting with '#' are skipped. All rows must have the same arity.
 */
[[nodiscard]] std::vector<Point> read_points(std::istream& in);
[[nodiscard]] std::vector<Point> read_point_file(const std::filesystem::path& path);

/// Parses "r1,r2,...,rM" as given on the command line.
[[nodiscard]] Point parse_point_list(const std::string& text);

/// Shortest decimal string that parses back to the same double.
[[nodiscard]] std::string format_shortest(double value);

/// Pretty-printed JSON document, terminated by a newline. Deterministic.
[[nodiscard]] std::string serialize_decomposition(const Decomposition& decomp);

/**
 * Rebuilds a Decomposition from serialize_decomposition output. The front and
 * config are re-validated and the bounding volume is checked against them.
 */
[[nodiscard]] Decomposition parse_decomposition(const std::string& text);
[[nodiscard]] Decomposition read_decomposition_file(const std::filesystem::path& path);

}  // namespace hvbox

#endif  // HVBOX_IO_HPP
