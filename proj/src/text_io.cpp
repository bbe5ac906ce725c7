#include "cma/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cma {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    return Rat::parse(t);
}

std::vector<Rat> parse_vector(const std::string& text) {
    std::vector<Rat> out;
    for (const std::string& part : split(text, ',')) {
        out.push_back(parse_rational(part));
    }
    return out;
}

Mat parse_matrix(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    for (const std::string& seg : split(text, ';')) {
        if (trim(seg).empty()) continue; /* trailing ';' or blank line */
        rows.push_back(parse_vector(seg));
    }
    if (rows.empty()) {
        throw std::invalid_argument("matrix text holds no rows");
    }
    const std::size_t width = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != width) {
            throw std::invalid_argument("matrix rows have unequal lengths");
        }
    }
    Mat m(static_cast<int>(rows.size()), static_cast<int>(width));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string format_rational(const Rat& x) { return x.str(); }

std::string format_vector(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out;
}

std::string format_matrix(const Mat& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).str();
        }
        out += ';';
        if (i + 1 < m.rows()) out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace cma
