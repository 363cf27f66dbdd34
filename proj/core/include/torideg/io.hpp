#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "torideg/groebner.hpp"

namespace torideg {

/// Parses `ring x,y,z grading [[1,1,1]]` (grading optional, default standard).
RingPtr parse_ring_header(std::string_view line);
std::string ring_header(const Ring& ring);

/// Ideal file: ring header, then one polynomial per line. Blank lines and
/// lines starting with '#' are ignored.
Ideal parse_ideal(std::string_view text);
std::string format_ideal(const Ideal& I);

/// Gröbner basis file: ring header, optional `order SPEC` line, then lines
/// `POLY marked MONOMIAL`. Without an order line a weight order realizing
/// the markings is reconstructed.
MarkedGroebnerBasis parse_groebner(std::string_view text);
std::string format_groebner(const MarkedGroebnerBasis& G);

/// Whitespace-separated rationals, one row per line.
QMatrix parse_matrix(std::string_view text);
std::string format_matrix(const QMatrix& M);

/// Comma- or whitespace-separated rationals, optionally in parentheses.
QVector parse_vector(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes via a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace torideg
