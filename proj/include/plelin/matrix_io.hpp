#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "plelin/matrix.hpp"
#include "plelin/prime_field.hpp"
#include "plelin/rational.hpp"

namespace plelin {

// Matrix file format:
//   line 1: "nrs ncs"            for rational matrices, or
//           "nrs ncs mod p"      for matrices over F_p;
//   then nrs lines of ncs whitespace-separated entries, rationals written
//   as "p/q" or "p", prime-field entries as integers (reduced mod p).
// Reading reports malformed input as format_error with line/column.

// A prime-field matrix together with its field; the modulus must survive
// even when every entry is zero.
struct PrimeFieldMatrix {
    std::uint64_t modulus = 0;
    Matrix<PrimeFieldElement> entries;
};

using AnyMatrix = std::variant<Matrix<Rational>, PrimeFieldMatrix>;

AnyMatrix read_matrix(std::istream& in);
AnyMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const Matrix<Rational>& m);
void write_matrix(std::ostream& out, const Matrix<PrimeFieldElement>& m, std::uint64_t modulus);
void write_matrix(std::ostream& out, const PrimeFieldMatrix& m);

void write_matrix_file(const std::string& path, const Matrix<Rational>& m);
void write_matrix_file(const std::string& path, const PrimeFieldMatrix& m);

}  // namespace plelin
