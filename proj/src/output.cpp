#include "outstanding/output.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace outstanding {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char separator) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, separator)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == separator) {
        fields.push_back("");
    }
    return fields;
}

std::string cell_text(const json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    return value.dump();
}

// "case :: detail | case :: detail" <-> array of failure objects.
std::string join_failures(const json& failures) {
    std::string text;
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (i > 0) {
            text += " | ";
        }
        text += failures[i].at("case").get<std::string>();
        text += " :: ";
        text += failures[i].at("detail").get<std::string>();
    }
    return text;
}

json parse_failures(const std::string& text) {
    json failures = json::array();
    if (text.empty()) {
        return failures;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(" | ", start);
        const std::string item =
            (end == std::string::npos) ? text.substr(start) : text.substr(start, end - start);
        const std::size_t split_at = item.find(" :: ");
        if (split_at == std::string::npos) {
            throw std::invalid_argument("OutputRecord: malformed failure cell '" + item + "'");
        }
        failures.push_back(
            {{"case", item.substr(0, split_at)}, {"detail", item.substr(split_at + 4)}});
        if (end == std::string::npos) {
            break;
        }
        start = end + 3;
    }
    return failures;
}

bool parse_bool(const std::string& text) {
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    throw std::invalid_argument("OutputRecord: expected boolean cell, got '" + text + "'");
}

}  // namespace

std::string OutputRecord::to_json() const {
    const json record = {{"kind", kind}, {"inputs", inputs}, {"payload", payload}};
    return record.dump();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
    const json record = json::parse(text);
    return {record.at("kind").get<std::string>(), record.at("inputs"), record.at("payload")};
}

std::string OutputRecord::to_tsv() const {
    std::vector<std::string> header{"kind"};
    std::vector<std::string> prefix{kind};
    for (const auto& [key, value] : inputs.items()) {
        header.push_back("input." + key);
        prefix.push_back(cell_text(value));
    }

    std::vector<std::vector<std::string>> rows;
    if (kind == "verify") {
        header.insert(header.end(), {"suite", "cases", "failures"});
        for (const auto& suite : payload.at("suites")) {
            auto row = prefix;
            row.push_back(suite.at("name").get<std::string>());
            row.push_back(std::to_string(suite.at("cases").get<long long>()));
            row.push_back(join_failures(suite.at("failures")));
            rows.push_back(std::move(row));
        }
    } else {
        auto row = prefix;
        if (payload.contains("coeffs")) {
            const auto& coeffs = payload.at("coeffs");
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                header.push_back("deg" + std::to_string(i));
                row.push_back(coeffs[i].get<std::string>());
            }
        }
        for (const auto& [key, value] : payload.items()) {
            if (key == "coeffs") {
                continue;
            }
            header.push_back(key);
            row.push_back(cell_text(value));
        }
        rows.push_back(std::move(row));
    }

    std::string text;
    const auto append_line = [&text](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                text += '\t';
            }
            text += fields[i];
        }
        text += '\n';
    };
    append_line(header);
    for (const auto& row : rows) {
        append_line(row);
    }
    return text;
}

OutputRecord OutputRecord::from_tsv(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            lines.push_back(split(line, '\t'));
        }
    }
    if (lines.size() < 2) {
        throw std::invalid_argument("OutputRecord: TSV needs a header row and a value row");
    }
    const auto& header = lines.front();
    if (header.empty() || header[0] != "kind") {
        throw std::invalid_argument("OutputRecord: TSV must start with a kind column");
    }

    OutputRecord record;
    record.kind = lines[1][0];
    record.inputs = json::object();
    record.payload = json::object();

    // The integer- and boolean-typed payload columns; everything else is an
    // exact fraction string.
    const auto column_value = [&](const std::string& name, const std::string& cell) -> json {
        if (name == "mode" || name == "pole_order") {
            return json(std::stoll(cell));
        }
        if (name == "ok") {
            return json(parse_bool(cell));
        }
        return json(cell);
    };

    if (record.kind == "verify") {
        bool all_passed = true;
        record.payload["suites"] = json::array();
        for (std::size_t row = 1; row < lines.size(); ++row) {
            if (lines[row].size() != header.size()) {
                throw std::invalid_argument("OutputRecord: TSV row width differs from header");
            }
            json suite = json::object();
            for (std::size_t col = 1; col < header.size(); ++col) {
                const std::string& cell = lines[row][col];
                if (header[col].starts_with("input.")) {
                    record.inputs[header[col].substr(6)] = cell;
                } else if (header[col] == "suite") {
                    suite["name"] = cell;
                } else if (header[col] == "cases") {
                    suite["cases"] = std::stoll(cell);
                } else if (header[col] == "failures") {
                    suite["failures"] = parse_failures(cell);
                }
            }
            all_passed = all_passed && suite.at("failures").empty();
            record.payload["suites"].push_back(std::move(suite));
        }
        record.payload["passed"] = all_passed;
        return record;
    }

    const auto& row = lines[1];
    if (row.size() != header.size()) {
        throw std::invalid_argument("OutputRecord: TSV row width differs from header");
    }
    json coeffs = json::array();
    for (std::size_t col = 1; col < header.size(); ++col) {
        if (header[col].starts_with("input.")) {
            record.inputs[header[col].substr(6)] = row[col];
        } else if (header[col].starts_with("deg")) {
            coeffs.push_back(row[col]);
        } else {
            record.payload[header[col]] = column_value(header[col], row[col]);
        }
    }
    if (!coeffs.empty()) {
        record.payload["coeffs"] = std::move(coeffs);
    }
    return record;
}

}  // namespace outstanding
