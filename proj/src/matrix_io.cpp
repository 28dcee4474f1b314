#include "axbsolve/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "axbsolve/errors.hpp"

namespace axbsolve {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct RowParser {
    std::size_t expected_cols = 0;
    std::size_t row_count = 0;
    std::vector<Rational> entries;

    // Parses one logical row; `line` has any comment already stripped.
    void feed(std::string_view line, std::size_t line_no, std::size_t col_offset) {
        std::vector<Rational> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && is_space(line[pos])) ++pos;
            if (pos >= line.size()) break;
            const std::size_t start = pos;
            while (pos < line.size() && !is_space(line[pos])) ++pos;
            const std::string_view token = line.substr(start, pos - start);
            try {
                row.push_back(Rational::parse(token));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, col_offset + start + 1, e.what());
            }
        }
        if (row.empty()) return;
        if (row_count == 0) {
            expected_cols = row.size();
        } else if (row.size() != expected_cols) {
            throw ParseError(line_no, col_offset + 1,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(expected_cols));
        }
        entries.insert(entries.end(), row.begin(), row.end());
        ++row_count;
    }

    Matrix finish() { return Matrix(row_count, expected_cols, std::move(entries)); }
};

std::string_view strip_comment(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) return line.substr(0, hash);
    return line;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line, line_no);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
        ++line_no;
    }
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    RowParser parser;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) { parser.feed(strip_comment(line), line_no, 0); });
    return parser.finish();
}

Matrix parse_inline_matrix(std::string_view text) {
    RowParser parser;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        line = strip_comment(line);
        std::size_t offset = 0;
        while (true) {
            const auto semi = line.find(';', offset);
            const auto end = semi == std::string_view::npos ? line.size() : semi;
            parser.feed(line.substr(offset, end - offset), line_no, offset);
            if (semi == std::string_view::npos) break;
            offset = semi + 1;
        }
    });
    return parser.finish();
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

std::map<std::string, Matrix> parse_sections(std::string_view text) {
    std::map<std::string, Matrix> out;
    std::string current;
    RowParser parser;
    bool in_section = false;
    std::size_t header_line = 0;

    auto flush = [&] {
        if (in_section) {
            if (out.contains(current)) throw ParseError(header_line, 1, "duplicate section '" + current + "'");
            out.emplace(current, parser.finish());
        }
        parser = RowParser{};
    };

    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const std::string body = trim(strip_comment(line));
        if (!body.empty() && body.back() == ':') {
            const std::string name = trim(std::string_view(body).substr(0, body.size() - 1));
            if (name.empty()) throw ParseError(line_no, 1, "empty section name");
            flush();
            current = name;
            in_section = true;
            header_line = line_no;
            return;
        }
        if (!in_section) {
            if (!body.empty()) throw ParseError(line_no, 1, "matrix data before the first section header");
            return;
        }
        parser.feed(strip_comment(line), line_no, 0);
    });
    flush();
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace axbsolve
