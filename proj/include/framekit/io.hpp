#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "framekit/family.hpp"
#include "framekit/matrix.hpp"

namespace framekit::io {

// CSV matrix format: header `# dim=<d> count=<N> field=complex`, then one row
// per coordinate with comma-separated `re+imj` entries at 17 significant
// digits. Self-describing and diff-friendly.
void write_matrix_csv(std::ostream& os, const Matrix& m);
Matrix read_matrix_csv(std::istream& is);

void write_family_csv(std::ostream& os, const family::FamilyMatrix& fm);
family::FamilyMatrix read_family_csv(std::istream& is, std::string label);

void write_matrix_csv_file(const std::string& path, const Matrix& m);
Matrix read_matrix_csv_file(const std::string& path);

// A vector is a one-column matrix.
Vector read_vector_csv_file(const std::string& path);
void write_vector_csv_file(const std::string& path, const Vector& v);

std::string format_complex(cx z);
cx parse_complex(const std::string& token);

// `pow:<p>`, `const:<v>`, `list:<path>` (whitespace-separated values in the file)
family::WeightRule parse_weight_rule(const std::string& rule);

std::vector<double> read_value_list_file(const std::string& path);

// Minimal JSON emitter: doubles at 17 significant digits, non-finite values
// as null, keys emitted in insertion order.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& value_null();

    const std::string& str() const { return out_; }

private:
    void comma_if_needed();
    void push(bool is_object);
    void pop();

    std::string out_;
    std::vector<bool> needs_comma_;
};

std::string json_escape(const std::string& s);
std::string format_double_17(double v);

} // namespace framekit::io
