#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "obsharm/error.hpp"
#include "obsharm/harmonizer.hpp"

namespace obsharm {

namespace {

void check_header(const std::vector<std::string>& header) {
    std::set<std::string_view> seen;
    for (const auto& h : header)
        if (!seen.insert(h).second) throw ParseError(0, "duplicate column name '" + h + "'");
}

} // namespace

Dataset read_csv(std::istream& in, std::string source_id) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t i = 0;
    if (text.starts_with("\xEF\xBB\xBF")) i = 3;

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted_field = false;
    bool row_has_content = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        quoted_field = false;
    };
    auto end_record = [&] {
        end_field();
        // A blank line yields one empty unquoted field; skip it.
        if (row_has_content) records.push_back(std::move(record));
        record.clear();
        row_has_content = false;
    };

    while (i < text.size()) {
        const char c = text[i];
        if (c == '"' && field.empty() && !quoted_field) {
            quoted_field = true;
            row_has_content = true;
            ++i;
            for (;;) {
                if (i >= text.size()) throw ParseError(i, "unterminated quoted field");
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += text[i++];
            }
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                throw ParseError(i, "unexpected character after closing quote");
            continue;
        }
        if (c == ',') {
            row_has_content = true;
            end_field();
            ++i;
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_record();
            i += 2;
        } else if (c == '\n') {
            end_record();
            ++i;
        } else {
            if (quoted_field) throw ParseError(i, "unexpected character after closing quote");
            if (c == '"') throw ParseError(i, "quote inside unquoted field");
            row_has_content = true;
            field += c;
            ++i;
        }
    }
    if (row_has_content || !field.empty()) end_record();

    if (records.empty()) throw ParseError(0, "CSV input has no header row");
    Dataset ds{std::move(source_id), std::move(records.front()), {}};
    check_header(ds.header);
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != ds.header.size())
            throw ParseError(0, "CSV row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                                    " fields, header has " + std::to_string(ds.header.size()));
        ds.rows.push_back(std::move(records[r]));
    }
    return ds;
}

Dataset read_json_rows(std::string_view text, std::string source_id) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "JSON input must be an array of objects");

    Dataset ds{std::move(source_id), {}, {}};
    for (const auto& obj : doc) {
        if (!obj.is_object()) throw ParseError(0, "JSON rows must be objects");
        for (const auto& [key, value] : obj.items())
            if (std::find(ds.header.begin(), ds.header.end(), key) == ds.header.end()) ds.header.push_back(key);
    }
    for (const auto& obj : doc) {
        std::vector<std::string> row;
        row.reserve(ds.header.size());
        for (const auto& column : ds.header) {
            auto it = obj.find(column);
            if (it == obj.end() || it->is_null()) {
                row.emplace_back();
            } else if (it->is_string()) {
                row.push_back(it->get<std::string>());
            } else if (it->is_primitive()) {
                row.push_back(it->dump());
            } else {
                throw ParseError(0, "JSON field '" + column + "' is not a scalar");
            }
        }
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

Dataset load_dataset(const std::filesystem::path& path, std::string source_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open input '" + path.string() + "'");
    if (path.extension() == ".json") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return read_json_rows(buf.str(), std::move(source_id));
    }
    return read_csv(in, std::move(source_id));
}

} // namespace obsharm
