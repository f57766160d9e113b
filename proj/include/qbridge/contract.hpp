#pragma once

#include <string>

#include "qbridge/errors.hpp"

namespace qbridge::contract {

// The two scaling paradigms a generation may declare for itself; the wire
// values are the literal template tokens "extension" and
// "controlled modification".
enum class Paradigm { Extension, ControlledModification };

const char* paradigm_token(Paradigm p);

struct ContractRecord {
    std::string name;
    Paradigm scaling_paradigm = Paradigm::Extension;
    std::string summary; // may span lines
    std::string ml_code;
    std::string qml_code;

    bool operator==(const ContractRecord&) const = default;
};

class ContractError : public Error {
  public:
    enum class Kind {
        MissingSentinel,
        MissingField,
        InvalidParadigm,
        UnterminatedCodeBlock,
        TrailingContent,
        UnserializablePayload,
    };

    ContractError(Kind kind, int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; } // 1-based

  private:
    Kind kind_;
    int line_;
};

// Parses one generation against the output contract:
//
//   assistantfinal
//   name: <identifier>
//   scaling_paradigm: <extension|controlled modification>
//   summary: <text, until the ml_code field>
//   ml_code: '''
//   <payload>
//   '''
//   qml_code: '''
//   <payload>
//   '''
//
// Anything before the `assistantfinal` line is discarded; everything after
// it is strict. A payload line counts as the closing fence only when it
// holds nothing but ''' — a ''' with other content on the line is payload.
// Non-blank content after the final fence is rejected. A trailing '\r' per
// line is stripped before matching.
ContractRecord parse_contract(const std::string& text);

// Exact inverse of parse_contract on serializable records: payload lines
// must not consist of a bare ''' and must not contain '\r'; summary lines
// must not start a new field.
std::string serialize_contract(const ContractRecord& record);

} // namespace qbridge::contract
