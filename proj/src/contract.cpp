#include "qbridge/contract.hpp"

#include <sstream>
#include <vector>

namespace qbridge::contract {

namespace {

constexpr const char* kSentinel = "assistantfinal";
constexpr const char* kFence = "'''";

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty() && current.back() == '\r') {
                current.pop_back();
            }
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty() && current.back() == '\r') {
        current.pop_back();
    }
    lines.push_back(std::move(current));
    return lines;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

const char* paradigm_token(Paradigm p) {
    return p == Paradigm::Extension ? "extension" : "controlled modification";
}

ContractRecord parse_contract(const std::string& text) {
    const auto lines = split_lines(text);
    const int total = static_cast<int>(lines.size());

    int i = 0;
    while (i < total && trimmed(lines[i]) != kSentinel) {
        ++i;
    }
    if (i >= total) {
        throw ContractError(ContractError::Kind::MissingSentinel, total,
                            "no 'assistantfinal' line");
    }
    ++i; // first strict line

    ContractRecord record;

    auto expect_field = [&](const char* field) {
        const std::string prefix = std::string(field) + ":";
        if (i >= total || !starts_with(lines[i], prefix)) {
            throw ContractError(ContractError::Kind::MissingField, std::min(i + 1, total),
                                std::string("expected field '") + field + "'");
        }
        const std::string value = trimmed(lines[i].substr(prefix.size()));
        ++i;
        return value;
    };

    record.name = expect_field("name");
    if (record.name.empty()) {
        throw ContractError(ContractError::Kind::MissingField, i, "empty name");
    }

    const std::string paradigm = expect_field("scaling_paradigm");
    if (paradigm == "extension") {
        record.scaling_paradigm = Paradigm::Extension;
    } else if (paradigm == "controlled modification") {
        record.scaling_paradigm = Paradigm::ControlledModification;
    } else {
        throw ContractError(ContractError::Kind::InvalidParadigm, i,
                            "invalid scaling_paradigm '" + paradigm + "'");
    }

    // summary runs until the ml_code field line.
    if (i >= total || !starts_with(lines[i], "summary:")) {
        throw ContractError(ContractError::Kind::MissingField, std::min(i + 1, total),
                            "expected field 'summary'");
    }
    record.summary = trimmed(lines[i].substr(std::string("summary:").size()));
    ++i;
    while (i < total && !starts_with(lines[i], "ml_code:")) {
        record.summary += "\n" + lines[i];
        ++i;
    }

    auto read_code_block = [&](const char* field) {
        const std::string opener = std::string(field) + ":";
        if (i >= total || !starts_with(lines[i], opener)) {
            throw ContractError(ContractError::Kind::MissingField, std::min(i + 1, total),
                                std::string("expected field '") + field + "'");
        }
        if (trimmed(lines[i].substr(opener.size())) != kFence) {
            throw ContractError(ContractError::Kind::UnterminatedCodeBlock, i + 1,
                                std::string(field) + " must open with '''");
        }
        ++i;
        std::string payload;
        bool closed = false;
        bool first = true;
        while (i < total) {
            if (trimmed(lines[i]) == kFence) {
                closed = true;
                ++i;
                break;
            }
            if (!first) {
                payload += "\n";
            }
            payload += lines[i];
            first = false;
            ++i;
        }
        if (!closed) {
            throw ContractError(ContractError::Kind::UnterminatedCodeBlock, total,
                                std::string("unterminated ") + field + " block");
        }
        if (payload.empty()) {
            throw ContractError(ContractError::Kind::MissingField, i,
                                std::string("empty ") + field + " payload");
        }
        return payload;
    };

    record.ml_code = read_code_block("ml_code");
    record.qml_code = read_code_block("qml_code");

    for (; i < total; ++i) {
        if (!trimmed(lines[i]).empty()) {
            throw ContractError(ContractError::Kind::TrailingContent, i + 1,
                                "content after the final code fence");
        }
    }
    return record;
}

std::string serialize_contract(const ContractRecord& record) {
    auto reject = [](int line, const std::string& why) {
        throw ContractError(ContractError::Kind::UnserializablePayload, line, why);
    };
    if (record.name.empty() || record.name.find('\n') != std::string::npos ||
        record.name.find('\r') != std::string::npos || trimmed(record.name) != record.name) {
        reject(1, "name must be a trimmed, non-empty single line");
    }
    if (record.ml_code.empty() || record.qml_code.empty()) {
        reject(1, "code payloads must be non-empty");
    }
    {
        // The first summary line is trimmed on the way back in.
        const auto head = record.summary.substr(0, record.summary.find('\n'));
        if (trimmed(head) != head) {
            reject(1, "summary head line must be trimmed");
        }
    }
    auto check_payload = [&](const std::string& payload, const char* field) {
        if (payload.find('\r') != std::string::npos) {
            reject(1, std::string(field) + " payload contains a carriage return");
        }
        std::istringstream in(payload);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (trimmed(line) == kFence) {
                reject(line_no, std::string(field) + " payload holds a bare ''' line");
            }
        }
    };
    check_payload(record.ml_code, "ml_code");
    check_payload(record.qml_code, "qml_code");
    {
        std::istringstream in(record.summary);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (!first && starts_with(line, "ml_code:")) {
                reject(1, "summary line opens an ml_code field");
            }
            first = false;
        }
        if (record.summary.find('\r') != std::string::npos) {
            reject(1, "summary contains a carriage return");
        }
    }

    std::string out;
    out += kSentinel;
    out += "\nname: " + record.name;
    out += "\nscaling_paradigm: ";
    out += paradigm_token(record.scaling_paradigm);
    out += "\nsummary: " + record.summary;
    out += "\nml_code: '''\n" + record.ml_code + "\n'''";
    out += "\nqml_code: '''\n" + record.qml_code + "\n'''\n";
    return out;
}

} // namespace qbridge::contract
