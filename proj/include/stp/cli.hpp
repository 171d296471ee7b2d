#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stp/multigraph.hpp"
#include "stp/packer.hpp"

namespace stp::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// The pack result document. Trees are edge-id lists; certificate classes
/// are 1-based vertex lists in canonical order.
Json result_document(const MultiGraph& g, const PackResult& result, bool with_trace);

Json trace_record_json(const TraceRecord& record);

Json classes_json(const Partition& p);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stp::cli
