#pragma once

/*
 * One plain-text format for every exact object the CLI reads or writes.
 *
 *   rational  "p" or "p/q"            e.g.  -3/16
 *   vector    comma-separated         e.g.  4, 3, 2, 1
 *   matrix    ';'-terminated rows     e.g.  1, 2;
 *                                           3, 4;
 *
 * Whitespace (including newlines) around entries is ignored on input, so a
 * vector may be stored one entry per line with trailing commas. Output is
 * canonical: entries joined by ", ", matrix rows one per line each ending in
 * ';'. parse(format(x)) == x for every value, and formatting is byte-stable
 * across runs. Parse errors throw std::invalid_argument naming the offending
 * token.
 */

#include "cma/matrix.hpp"
#include "cma/rational.hpp"

#include <string>
#include <vector>

namespace cma {

Rat parse_rational(const std::string& text);
std::vector<Rat> parse_vector(const std::string& text);
Mat parse_matrix(const std::string& text);

std::string format_rational(const Rat& x);
std::string format_vector(const std::vector<Rat>& v);
std::string format_matrix(const Mat& m);

/* Whole-file read; throws std::invalid_argument when the file cannot be
 * opened. */
std::string read_text_file(const std::string& path);

} // namespace cma
