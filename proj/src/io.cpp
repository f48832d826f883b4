#include "framekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "framekit/errors.hpp"

namespace framekit::io {

std::string format_double_17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(cx z) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
    return buf;
}

cx parse_complex(const std::string& token) {
    const char* p = token.c_str();
    char* end = nullptr;
    const double re = std::strtod(p, &end);
    if (end == p) throw IoError("parse_complex: no number in '" + token + "'");
    while (*end == ' ' || *end == '\t') ++end;
    if (*end == '\0') return {re, 0.0}; // bare real accepted
    const char* q = end;
    char* end2 = nullptr;
    const double im = std::strtod(q, &end2);
    if (end2 == q || *end2 != 'j') {
        throw IoError("parse_complex: malformed entry '" + token + "'");
    }
    ++end2;
    while (*end2 == ' ' || *end2 == '\t') ++end2;
    if (*end2 != '\0') throw IoError("parse_complex: trailing characters in '" + token + "'");
    return {re, im};
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    os << "# dim=" << m.rows() << " count=" << m.cols() << " field=complex\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ',';
            os << format_complex(m(i, j));
        }
        os << '\n';
    }
}

Matrix read_matrix_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw IoError("read_matrix_csv: empty input");
    std::size_t dim = 0, count = 0;
    if (std::sscanf(header.c_str(), "# dim=%zu count=%zu field=complex", &dim, &count) != 2) {
        throw IoError("read_matrix_csv: bad header '" + header + "'");
    }
    if (dim == 0 || count == 0) throw IoError("read_matrix_csv: zero dimensions in header");
    Matrix m(dim, count);
    std::string line;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!std::getline(is, line)) throw IoError("read_matrix_csv: truncated matrix body");
        std::stringstream row(line);
        std::string token;
        for (std::size_t j = 0; j < count; ++j) {
            if (!std::getline(row, token, ',')) {
                throw IoError("read_matrix_csv: short row " + std::to_string(i));
            }
            m(i, j) = parse_complex(token);
        }
        if (std::getline(row, token, ',')) {
            throw IoError("read_matrix_csv: extra entries in row " + std::to_string(i));
        }
    }
    return m;
}

void write_family_csv(std::ostream& os, const family::FamilyMatrix& fm) {
    write_matrix_csv(os, fm.columns);
}

family::FamilyMatrix read_family_csv(std::istream& is, std::string label) {
    return family::make_family(read_matrix_csv(is), std::move(label));
}

void write_matrix_csv_file(const std::string& path, const Matrix& m) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    write_matrix_csv(os, m);
    if (!os) throw IoError("write failed for '" + path + "'");
}

Matrix read_matrix_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    return read_matrix_csv(is);
}

Vector read_vector_csv_file(const std::string& path) {
    const Matrix m = read_matrix_csv_file(path);
    if (m.cols() != 1) throw IoError("expected a one-column vector in '" + path + "'");
    return Vector(m.data(), m.data() + m.rows());
}

void write_vector_csv_file(const std::string& path, const Vector& v) {
    Matrix m(v.size(), 1);
    std::copy(v.begin(), v.end(), m.col(0));
    write_matrix_csv_file(path, m);
}

std::vector<double> read_value_list_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    std::vector<double> values;
    double v = 0.0;
    while (is >> v) values.push_back(v);
    if (!is.eof()) throw IoError("malformed value list in '" + path + "'");
    if (values.empty()) throw IoError("empty value list in '" + path + "'");
    return values;
}

family::WeightRule parse_weight_rule(const std::string& rule) {
    const auto colon = rule.find(':');
    if (colon == std::string::npos) {
        throw InvalidInput("weight rule '" + rule + "': expected pow:<p>, const:<v> or list:<path>");
    }
    const std::string kind = rule.substr(0, colon);
    const std::string arg = rule.substr(colon + 1);
    if (kind == "pow" || kind == "const") {
        char* end = nullptr;
        const double v = std::strtod(arg.c_str(), &end);
        if (end == arg.c_str() || *end != '\0') {
            throw InvalidInput("weight rule '" + rule + "': bad numeric argument");
        }
        return kind == "pow" ? family::WeightRule::power(v) : family::WeightRule::constant(v);
    }
    if (kind == "list") {
        return family::WeightRule::list(read_value_list_file(arg));
    }
    throw InvalidInput("weight rule '" + rule + "': unknown kind '" + kind + "'");
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonWriter::comma_if_needed() {
    if (!needs_comma_.empty() && needs_comma_.back()) out_ += ',';
    if (!needs_comma_.empty()) needs_comma_.back() = true;
}

void JsonWriter::push(bool) { needs_comma_.push_back(false); }
void JsonWriter::pop() { needs_comma_.pop_back(); }

JsonWriter& JsonWriter::begin_object() {
    comma_if_needed();
    out_ += '{';
    push(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    pop();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma_if_needed();
    out_ += '[';
    push(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    pop();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma_if_needed();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    if (!needs_comma_.empty()) needs_comma_.back() = false; // value follows without comma
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma_if_needed();
    if (!std::isfinite(v)) {
        out_ += "null";
    } else {
        out_ += format_double_17(v);
    }
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    comma_if_needed();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    comma_if_needed();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma_if_needed();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    comma_if_needed();
    out_ += '"';
    out_ += json_escape(s);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::value_null() {
    comma_if_needed();
    out_ += "null";
    return *this;
}

} // namespace framekit::io
