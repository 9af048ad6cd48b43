#include "plelin/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "plelin/errors.hpp"

namespace plelin {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

// Splits a line into whitespace-separated tokens, remembering where each one
// starts for error reporting.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::size_t parse_count(const Token& token, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(token.text, &used);
        if (value < 0 || used != token.text.size()) throw std::invalid_argument("count");
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw format_error("expected a non-negative count, got \"" + token.text + "\"", line,
                           token.column);
    }
}

struct EntryLine {
    std::size_t line_nmb = 0;
    std::vector<Token> tokens;
};

}  // namespace

AnyMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_nmb = 0;

    std::vector<Token> header;
    while (header.empty()) {
        if (!std::getline(in, line)) throw format_error("missing header line", line_nmb + 1, 1);
        ++line_nmb;
        header = tokenize(line);
    }
    const std::size_t header_line = line_nmb;

    if (header.size() != 2 && !(header.size() == 4 && header[2].text == "mod"))
        throw format_error("header must be \"nrs ncs\" or \"nrs ncs mod p\"", header_line,
                           header.size() > 2 ? header[2].column : 1);

    const std::size_t nrs = parse_count(header[0], header_line);
    const std::size_t ncs = parse_count(header[1], header_line);

    std::vector<EntryLine> entry_lines;
    entry_lines.reserve(nrs);
    while (entry_lines.size() < nrs) {
        if (!std::getline(in, line))
            throw format_error("expected " + std::to_string(nrs) + " rows, got " +
                                   std::to_string(entry_lines.size()),
                               line_nmb + 1, 1);
        ++line_nmb;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != ncs)
            throw format_error("expected " + std::to_string(ncs) + " entries, got " +
                                   std::to_string(tokens.size()),
                               line_nmb, tokens.size() > ncs ? tokens[ncs].column : 1);
        entry_lines.push_back(EntryLine{line_nmb, std::move(tokens)});
    }

    if (header.size() == 4) {
        const std::size_t p = parse_count(header[3], header_line);
        std::optional<PrimeField> field;
        try {
            field.emplace(static_cast<std::uint64_t>(p));
        } catch (const std::domain_error& e) {
            throw format_error(e.what(), header_line, header[3].column);
        }
        Matrix<PrimeFieldElement> m(nrs, ncs);
        for (std::size_t i = 0; i < nrs; ++i)
            for (std::size_t j = 0; j < ncs; ++j) {
                const Token& token = entry_lines[i].tokens[j];
                try {
                    std::size_t used = 0;
                    const long long value = std::stoll(token.text, &used);
                    if (used != token.text.size()) throw std::invalid_argument("trailing junk");
                    m(i, j) = field->element(value);
                } catch (const format_error&) {
                    throw;
                } catch (const std::exception&) {
                    throw format_error("cannot parse field element \"" + token.text + "\"",
                                       entry_lines[i].line_nmb, token.column);
                }
            }
        return PrimeFieldMatrix{field->modulus(), std::move(m)};
    }

    Matrix<Rational> m(nrs, ncs);
    for (std::size_t i = 0; i < nrs; ++i)
        for (std::size_t j = 0; j < ncs; ++j) {
            const Token& token = entry_lines[i].tokens[j];
            try {
                m(i, j) = Rational::parse(token.text);
            } catch (const std::exception& e) {
                throw format_error("cannot parse rational \"" + token.text + "\": " + e.what(),
                                   entry_lines[i].line_nmb, token.column);
            }
        }
    return m;
}

AnyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix<Rational>& m) {
    out << m.nrows() << ' ' << m.ncols() << '\n';
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j).str();
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const Matrix<PrimeFieldElement>& m, std::uint64_t modulus) {
    out << m.nrows() << ' ' << m.ncols() << " mod " << modulus << '\n';
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j).residue();
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const PrimeFieldMatrix& m) {
    write_matrix(out, m.entries, m.modulus);
}

namespace {

template <typename M>
void write_file(const std::string& path, const M& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrix(out, m);
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

void write_matrix_file(const std::string& path, const Matrix<Rational>& m) {
    write_file(path, m);
}

void write_matrix_file(const std::string& path, const PrimeFieldMatrix& m) {
    write_file(path, m);
}

}  // namespace plelin
