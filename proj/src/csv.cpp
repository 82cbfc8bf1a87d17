#include "radtext/csv.hpp"

#include "radtext/errors.hpp"

namespace radtext::csv {

int Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

Table parse(const std::string& text) {
    Table table;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    int row_number = 1;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        if (table.header.empty())
            table.header = std::move(record);
        else
            table.rows.push_back(std::move(record));
        record.clear();
        ++row_number;
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (field_started && !field.empty())
                throw ParseError("CSV: quote inside unquoted field", row_number);
            in_quotes = true;
            field_started = true;
            ++i;
            break;
        case ',':
            end_field();
            ++i;
            break;
        case '\r':
            if (i + 1 < n && text[i + 1] == '\n') ++i;
            end_record();
            ++i;
            break;
        case '\n':
            end_record();
            ++i;
            break;
        default:
            field += c;
            field_started = true;
            ++i;
        }
    }
    if (in_quotes) throw ParseError("CSV: unterminated quoted field", row_number);
    // Final record without trailing newline.
    if (field_started || !field.empty() || !record.empty()) end_record();

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.header.size())
            throw ParseError("CSV: row has " + std::to_string(table.rows[r].size()) +
                                 " fields, header has " + std::to_string(table.header.size()),
                             static_cast<int>(r + 2));
    }
    return table;
}

std::string quote(const std::string& field) {
    bool needs = false;
    for (char c : field) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            needs = true;
            break;
        }
    }
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string write_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote(fields[i]);
    }
    out += '\n';
    return out;
}

std::string write(const Table& table) {
    std::string out = write_row(table.header);
    for (const auto& row : table.rows) out += write_row(row);
    return out;
}

} // namespace radtext::csv
