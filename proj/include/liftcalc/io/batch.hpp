#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftcalc/io/codec.hpp"

namespace liftcalc::io {

struct BatchOptions {
    bool trace = false;    // include basis traces and derivation detail
    unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// One input document; `value` is empty when the text did not parse.
struct InputDocument {
    std::optional<json> value;
    std::string parse_error;
};

/// A whole-document object or array, or else JSON Lines (blank lines skipped).
std::vector<InputDocument> split_documents(std::string_view text);

/// Never throws: failures become status "error" responses.
json run_request(const json& request, const BatchOptions& opt = {});
json run_document(const InputDocument& doc, const BatchOptions& opt = {});

/// Responses in input order.
std::vector<json> run_batch(const std::vector<InputDocument>& docs, const BatchOptions& opt = {});

/// Request schema generated from the same table that validates requests.
json request_schema();

const std::vector<std::string>& command_names();

/// Compact single-line serialization with sorted keys.
std::string serialize(const json& response);

} // namespace liftcalc::io
