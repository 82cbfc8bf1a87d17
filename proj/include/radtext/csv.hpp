#pragma once

// RFC 4180 CSV: comma delimiter, double-quote quoting, header row,
// LF line endings on output (CRLF accepted on input).

#include <string>
#include <vector>

namespace radtext::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column; -1 if absent.
    int column(const std::string& name) const;
};

// Throws ParseError with the offending row number.
Table parse(const std::string& text);

std::string write_row(const std::vector<std::string>& fields);
std::string write(const Table& table);

// Quotes a single field if it contains a comma, quote, or newline.
std::string quote(const std::string& field);

} // namespace radtext::csv
